"""Tests for the check runner, report folding and export."""

from __future__ import annotations

import pytest

from mocktheta.algebra.cyclotomic import ONE, zeta_pow
from mocktheta.algebra.series import Monomial, QSeries
from mocktheta.identities import entries, toolbox
from mocktheta.algebra.partitions import MAX_N
from mocktheta.identities.catalogue import IdentityCheck, find, select
from mocktheta.pipeline import (
    build_metadata,
    combine,
    corrupt,
    entry1_check,
    entry3_check,
    exit_code,
    export_reports,
    run_check,
    run_checks,
    run_expand,
    run_suite,
    summary,
    three_term_check,
)
from mocktheta.utils.report_io import CheckReport, load_reports

ZETA = Monomial(zeta_pow(1))


def _duplication(order: int = 20) -> IdentityCheck:
    return IdentityCheck("theta.duplication.test", "prelim", "theta", order, toolbox.duplication, (("x", ZETA),))


def _broken(order: int) -> tuple[QSeries, QSeries]:
    raise RuntimeError("boom")


def _short(order: int) -> tuple[QSeries, QSeries]:
    return QSeries.one(5), QSeries.one(5)


def test_run_check_pass():
    report = run_check(_duplication())
    assert report.status == "pass"
    assert report.mismatch is None
    assert report.order == 20
    assert report.elapsed_ms >= 0


def test_run_check_order_override():
    assert run_check(_duplication(), order=35).order == 35


def test_vanishing_sides_pass():
    check = IdentityCheck("theta.quasi.one", "prelim", "theta", 20, toolbox.quasi_period, (("x", Monomial(ONE)),))
    assert run_check(check).passed


@pytest.mark.parametrize("exponent", [0, 7, 19])
def test_corrupted_check_fails_at_exponent(exponent):
    report = run_check(corrupt(_duplication(), exponent))
    assert report.status == "fail"
    assert report.mismatch.exponent == exponent
    assert report.mismatch.lhs - report.mismatch.rhs == -1


def test_degenerate_parameter_is_error_not_fail():
    check = IdentityCheck("entry1.t1", "entries", "entry1", 12, entries.entry1_reduced, (("t", Monomial(ONE)),))
    report = run_check(check)
    assert report.status == "error"
    assert not report.internal
    assert "GenericityError" in report.error


def test_expected_degeneracy_passes():
    check = IdentityCheck(
        "entry1.t1", "entries", "entry1", 12, entries.entry1_reduced, (("t", Monomial(ONE)),), expect_error=True
    )
    assert run_check(check).passed


def test_internal_error_is_flagged():
    report = run_check(IdentityCheck("broken", "prelim", "theta", 10, _broken))
    assert report.status == "error"
    assert report.internal
    assert exit_code([report]) == 2


def test_precision_shortfall_is_error():
    report = run_check(IdentityCheck("short", "prelim", "theta", 10, _short))
    assert report.status == "error"
    assert "PrecisionError" in report.error


def test_combine():
    ok = CheckReport("a", 10, "pass")
    bad = CheckReport("b", 10, "fail", error=None)
    err = CheckReport("c", 10, "error", error="x")
    assert combine("all", 10, [ok, ok]).passed
    assert combine("all", 10, [ok, bad]).status == "fail"
    merged = combine("all", 10, [ok, bad, err])
    assert merged.status == "error"
    assert merged.parts == ("a", "b", "c")


def test_entry_checks_fold():
    report = entry3_check(order=12)
    assert report.passed, report.error
    assert len(report.parts) == 4
    assert entry1_check(Monomial(-ONE), order=12).status == "error"


def test_three_term_check():
    assert three_term_check("plus", Monomial(zeta_pow(1), 1), order=25).passed


def test_run_checks_parallel_matches_serial():
    checks = [
        IdentityCheck(f"theta.dup.{k}", "prelim", "theta", 15, toolbox.duplication, (("x", Monomial(zeta_pow(k))),))
        for k in (1, 2, 5)
    ]
    serial = run_checks(checks)
    parallel = run_checks(list(reversed(checks)), jobs=2)
    assert [r.id for r in serial] == [r.id for r in parallel]
    assert all(r.passed for r in parallel)


def test_run_suite_entry3_and_export(tmp_path):
    reports = run_suite("entry3", 12)
    counts = summary(reports)
    assert counts["total"] == counts["passed"] == 4
    assert exit_code(reports) == 0
    path = export_reports(reports, build_metadata("entry3", 12, 1, reports), tmp_path)
    metadata, loaded = load_reports(path)
    assert metadata["summary"]["passed"] == 4
    assert [r.id for r in loaded] == [r.id for r in reports]


def test_run_expand():
    series, error = run_expand("psi", 6)
    assert error is None
    assert [n for n, _ in series.terms()] == [0, 1, 3, 6]
    series, error = run_expand("j(q", 6)
    assert series is None
    assert "position" in error


def test_partition_oracle_checks_stop_at_enumeration_bound():
    """Orders past the partition bound are compared through the bound."""
    check = find("rank.specialization[x=1]")
    assert check.max_order == MAX_N
    assert check.target() == 30
    assert check.target(60) == MAX_N
    report = run_check(check, order=2 * check.order)
    assert report.passed, report.error
    assert report.order == MAX_N


def test_corrupted_capped_check_keeps_cap():
    check = find("rank.specialization[x=-1]")
    report = run_check(corrupt(check, 35), order=80)
    assert report.status == "fail"
    assert report.order == MAX_N
    assert report.mismatch.exponent == 35


def test_max_order_below_default_rejected():
    with pytest.raises(ValueError):
        IdentityCheck("x", "props", "rank", 30, toolbox.duplication, (("x", ZETA),), max_order=20)


def test_entry1_suite_has_one_row_per_step():
    """Three samples times five steps, plus the four degenerate t values."""
    checks = select("entry1")
    assert len(checks) == 3 * 5 + 4
    assert sum(c.expect_error for c in checks) == 4
