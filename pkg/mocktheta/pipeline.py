"""Check runner: build both sides -> compare to the requested order -> report -> export."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

from mocktheta import __version__
from mocktheta.algebra.series import Monomial, QSeries
from mocktheta.errors import (
    GenericityError,
    MockThetaError,
    NonInvertible,
    PoleAtFactor,
    PrecisionError,
    ZeroInverse,
)
from mocktheta.expr import evaluate, parse
from mocktheta.identities import transforms
from mocktheta.identities.catalogue import (
    ENTRY_ORDER,
    THETA_CHAIN_ORDER,
    IdentityCheck,
    entry_checks,
    select,
)
from mocktheta.utils.report_io import CheckReport, Mismatch, save_reports

logger = logging.getLogger(__name__)

MAX_HEADROOM_ROUNDS = 6

# raised by a degenerate parameter; a check marked expect_error passes on these
DEGENERACY_ERRORS = (GenericityError, ZeroInverse, NonInvertible, PoleAtFactor)


def _evaluate(check: IdentityCheck, order: int) -> tuple[QSeries, QSeries]:
    """Both sides known to ``order``, raising the working order while either falls short."""
    work = order
    for _ in range(MAX_HEADROOM_ROUNDS):
        lhs, rhs = check.build(work)
        got = min(lhs.order, rhs.order)
        if got >= order:
            return lhs.truncate(order), rhs.truncate(order)
        logger.debug("%s: asked %d, got %d; retrying", check.id, work, got)
        work += order - got
    raise PrecisionError(f"{check.id}: sides not known to q^{order} after {MAX_HEADROOM_ROUNDS} rounds")


def compare(lhs: QSeries, rhs: QSeries, order: int) -> Mismatch | None:
    """First differing exponent up to ``order``, with both coefficients."""
    n = lhs.first_mismatch(rhs, upto=order)
    if n is None:
        return None
    return Mismatch(n, lhs.coeff(n), rhs.coeff(n))


def run_check(check: IdentityCheck, order: int | None = None) -> CheckReport:
    """Evaluate and compare one check; never raises."""
    target = check.target(order)
    start = time.perf_counter()

    def report(status: str, **kwargs: Any) -> CheckReport:
        elapsed = (time.perf_counter() - start) * 1000
        logger.debug("%s: %s in %.1f ms", check.id, status, elapsed)
        return CheckReport(check.id, target, status, elapsed_ms=elapsed, **kwargs)

    try:
        lhs, rhs = _evaluate(check, target)
    except DEGENERACY_ERRORS as exc:
        if check.expect_error:
            return report("pass", error=f"{type(exc).__name__}: {exc}")
        return report("error", error=f"{type(exc).__name__}: {exc}")
    except MockThetaError as exc:
        return report("error", error=f"{type(exc).__name__}: {exc}")
    except Exception as exc:
        logger.exception("%s: internal error", check.id)
        return report("error", error=f"{type(exc).__name__}: {exc}", internal=True)
    if check.expect_error:
        return report("fail", error="expected a degenerate-parameter error, got a result")
    mismatch = compare(lhs, rhs, target)
    return report("pass" if mismatch is None else "fail", mismatch=mismatch)


def _run_one(args: tuple[IdentityCheck, int | None]) -> CheckReport:
    check, order = args
    return run_check(check, order)


def run_checks(checks: list[IdentityCheck], order: int | None = None, jobs: int = 1) -> list[CheckReport]:
    """Run checks, in worker processes when jobs > 1; reports come back sorted by id."""
    work = [(check, order) for check in checks]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, work, chunksize=4))
    else:
        reports = [_run_one(item) for item in work]
    return sorted(reports, key=lambda r: r.id)


def run_suite(
    selector: str,
    order: int | None = None,
    jobs: int = 1,
    samples: dict[str, list[Monomial]] | None = None,
) -> list[CheckReport]:
    """Run a catalogue subset; ``order`` overrides every check's default order."""
    checks = select(selector, samples)
    logger.info("suite %s: %d checks, order %s, %d job(s)", selector, len(checks), order or "default", jobs)
    reports = run_checks(checks, order, jobs)
    counts = summary(reports)
    logger.info(
        "suite %s: %d passed, %d failed, %d errors",
        selector, counts["passed"], counts["failed"], counts["errors"],
    )
    return reports


def combine(check_id: str, order: int, reports: list[CheckReport]) -> CheckReport:
    """Fold sub-reports into one: error beats fail beats pass; the first bad part is reported."""
    elapsed = sum(r.elapsed_ms for r in reports)
    parts = tuple(r.id for r in reports)
    for status in ("error", "fail"):
        bad = [r for r in reports if r.status == status]
        if bad:
            first = bad[0]
            error = f"{first.id}: {first.error}" if first.error else first.id
            return CheckReport(
                check_id, order, status, first.mismatch, elapsed, error,
                any(r.internal for r in reports), parts,
            )
    return CheckReport(check_id, order, "pass", elapsed_ms=elapsed, parts=parts)


def _entry_check(group: str, t: Monomial | None, order: int | None) -> CheckReport:
    checks = entry_checks(group, [t] if t is not None else None)
    target = order or ENTRY_ORDER
    check_id = group if t is None else f"{group}[t={t.label()}]"
    return combine(check_id, target, [run_check(c, order) for c in checks])


def entry1_check(t: Monomial, order: int | None = None) -> CheckReport:
    return _entry_check("entry1", t, order)


def entry2_check(t: Monomial, order: int | None = None) -> CheckReport:
    return _entry_check("entry2", t, order)


def entry3_check(order: int | None = None) -> CheckReport:
    return _entry_check("entry3", None, order)


def entry4_check(order: int | None = None) -> CheckReport:
    return _entry_check("entry4", None, order)


def three_term_check(which: str, x: Monomial, order: int = THETA_CHAIN_ORDER, dilation: int = 1) -> CheckReport:
    params = (("which", which), ("x", x), ("dilation", dilation))
    check = IdentityCheck(
        f"three_term.{which}[x={x.label()},dilation={dilation}]",
        "props", "three_term", order, transforms.three_term, params,
    )
    return run_check(check)


def _corrupted(order: int, inner: IdentityCheck, exponent: int) -> tuple[QSeries, QSeries]:
    lhs, rhs = inner.build(order)
    return lhs, rhs + QSeries.monomial(1, exponent, rhs.order)


def corrupt(check: IdentityCheck, exponent: int) -> IdentityCheck:
    """The same check with 1 added to the right side's q^exponent coefficient."""
    return IdentityCheck(
        f"{check.id}.corrupted@{exponent}", check.suite, check.group, check.order,
        _corrupted, (("inner", check), ("exponent", exponent)), max_order=check.max_order,
    )


def summary(reports: list[CheckReport]) -> dict[str, Any]:
    return {
        "total": len(reports),
        "passed": sum(r.status == "pass" for r in reports),
        "failed": sum(r.status == "fail" for r in reports),
        "errors": sum(r.status == "error" for r in reports),
        "internal": sum(r.internal for r in reports),
        "elapsed_ms": round(sum(r.elapsed_ms for r in reports), 3),
    }


def exit_code(reports: list[CheckReport]) -> int:
    """0 all pass, 1 any fail or error, 2 any internal error."""
    if any(r.internal for r in reports):
        return 2
    if any(not r.passed for r in reports):
        return 1
    return 0


def build_metadata(
    selector: str,
    order: int | None,
    jobs: int,
    reports: list[CheckReport],
) -> dict[str, Any]:
    """Build export metadata JSON."""
    return {
        "version": __version__,
        "suite": selector,
        "order_override": order,
        "jobs": jobs,
        "summary": summary(reports),
    }


def export_reports(
    reports: list[CheckReport],
    metadata: dict[str, Any],
    out_dir: Path,
    base_name: str = "verify",
) -> Path:
    """Save reports and metadata as one JSON file under out_dir."""
    stamp = time.strftime("%Y%m%d-%H%M%S")
    return save_reports(reports, metadata, Path(out_dir) / f"{base_name}_{stamp}.json")


def run_expand(text: str, order: int) -> tuple[QSeries | None, str | None]:
    """Parse and evaluate an expression; return (series, None) or (None, error_message)."""
    try:
        return evaluate(parse(text), order), None
    except (MockThetaError, ValueError, ZeroDivisionError) as exc:
        return None, str(exc)
