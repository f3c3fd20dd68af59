"""Check reports and their JSON form; cyclotomic values travel as 8 exact "p/q" coordinates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from mocktheta.algebra.cyclotomic import CycNum
from mocktheta.algebra.series import QSeries
from mocktheta.utils.render import coords_from_strings, coords_to_strings, format_cyc

STATUSES = ("pass", "fail", "error")


@dataclass(frozen=True)
class Mismatch:
    """First exponent where the two sides differ."""

    exponent: int
    lhs: CycNum
    rhs: CycNum

    @property
    def difference(self) -> CycNum:
        return self.lhs - self.rhs

    def describe(self, ascii_only: bool = False) -> str:
        return (
            f"q^{self.exponent}: lhs {format_cyc(self.lhs, ascii_only)}, "
            f"rhs {format_cyc(self.rhs, ascii_only)}"
        )


@dataclass(frozen=True)
class CheckReport:
    id: str
    order: int
    status: str
    mismatch: Mismatch | None = None
    elapsed_ms: float = 0.0
    error: str | None = None
    internal: bool = False
    parts: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def mismatch_to_dict(m: Mismatch | None) -> dict[str, Any] | None:
    if m is None:
        return None
    return {"exponent": m.exponent, "lhs": coords_to_strings(m.lhs), "rhs": coords_to_strings(m.rhs)}


def mismatch_from_dict(data: dict[str, Any] | None) -> Mismatch | None:
    if data is None:
        return None
    return Mismatch(int(data["exponent"]), coords_from_strings(data["lhs"]), coords_from_strings(data["rhs"]))


def report_to_dict(report: CheckReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "id": report.id,
        "order": report.order,
        "status": report.status,
        "mismatch": mismatch_to_dict(report.mismatch),
        "elapsed_ms": round(report.elapsed_ms, 3),
    }
    if report.error is not None:
        out["error"] = report.error
    if report.internal:
        out["internal"] = True
    if report.parts:
        out["parts"] = list(report.parts)
    return out


def report_from_dict(data: dict[str, Any]) -> CheckReport:
    return CheckReport(
        id=data["id"],
        order=int(data["order"]),
        status=data["status"],
        mismatch=mismatch_from_dict(data.get("mismatch")),
        elapsed_ms=float(data.get("elapsed_ms", 0.0)),
        error=data.get("error"),
        internal=bool(data.get("internal", False)),
        parts=tuple(data.get("parts", ())),
    )


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2)


def reports_from_json(text: str) -> list[CheckReport]:
    return [report_from_dict(item) for item in json.loads(text)]


def series_to_dict(f: QSeries) -> dict[str, Any]:
    """Dense coefficients from the valuation through ``order``; the zero series has none."""
    return {
        "valuation": f.valuation,
        "order": f.order,
        "coeffs": [coords_to_strings(c) for c in f.coeffs],
    }


def series_from_dict(data: dict[str, Any]) -> QSeries:
    coeffs = [coords_from_strings(c) for c in data["coeffs"]]
    return QSeries(int(data["valuation"]), coeffs, int(data["order"]))


def save_reports(reports: list[CheckReport], metadata: dict[str, Any], path: str | Path) -> Path:
    """Write {"metadata": ..., "reports": [...]} as JSON; create parent dirs."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"metadata": metadata, "reports": [report_to_dict(r) for r in reports]}
    with open(path, "w") as f:
        json.dump(payload, f, indent=2)
    return path


def load_reports(path: str | Path) -> tuple[dict[str, Any], list[CheckReport]]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Report not found: {path}")
    with open(path) as f:
        payload = json.load(f)
    return payload.get("metadata", {}), [report_from_dict(item) for item in payload["reports"]]
