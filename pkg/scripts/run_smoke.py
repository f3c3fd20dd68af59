#!/usr/bin/env python3
"""Smoke run: every catalogue check at order 12, summary on stdout."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from mocktheta.pipeline import exit_code, run_suite, summary


def main():
    reports = run_suite("all", 12)
    for report in reports:
        if not report.passed:
            print(f"{report.status.upper()}  {report.id}  {report.error or ''}")
    counts = summary(reports)
    print(
        f"Smoke run: {counts['passed']}/{counts['total']} passed "
        f"in {counts['elapsed_ms'] / 1000:.1f} s"
    )
    return exit_code(reports)


if __name__ == "__main__":
    raise SystemExit(main())
