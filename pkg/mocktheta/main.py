"""Entrypoint: expand / verify / rank-table."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from mocktheta import __version__
from mocktheta.algebra.partitions import rank_table
from mocktheta.errors import ConfigError, MockThetaError, OutOfRange, ParseError
from mocktheta.expr import evaluate, parse, parse_monomial
from mocktheta.identities.catalogue import SELECTORS
from mocktheta.pipeline import build_metadata, exit_code, export_reports, run_suite, summary
from mocktheta.utils.config import OUTPUT_FORMATS, Config, get_data_dir, load_config
from mocktheta.utils.render import format_series
from mocktheta.utils.report_io import CheckReport, reports_to_json, series_to_dict

logger = logging.getLogger(__name__)

EXPAND_ORDER = 20
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _print_report(report: CheckReport) -> None:
    line = f"{report.status.upper():5s}  {report.id}  order={report.order}  {report.elapsed_ms:.0f} ms"
    print(line)
    if report.mismatch is not None:
        print(f"       first mismatch at {report.mismatch.describe()}")
    if report.error and report.status != "pass":
        print(f"       {report.error}")


def cmd_expand(args: argparse.Namespace, config: Config) -> int:
    order = args.order or config.default_order or EXPAND_ORDER
    try:
        node = parse(args.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {args.expr}\n  {' ' * exc.position}^", file=sys.stderr)
        return 2
    try:
        series = evaluate(node, order)
    except (MockThetaError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if (args.format or config.output_format) == "json":
        print(json.dumps({"expr": str(node), **series_to_dict(series)}, indent=2))
    else:
        print(format_series(series))
    return 0


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    samples = config.samples()
    if args.t:
        points = [parse_monomial(t) for t in args.t]
        for entry in ("entry1", "entry2"):
            if args.suite in ("all", "entries", entry):
                samples[entry] = points
    order = args.order or config.default_order
    jobs = args.jobs or config.jobs
    reports = run_suite(args.suite, order, jobs, samples)
    if (args.format or config.output_format) == "json":
        print(reports_to_json(reports))
    else:
        for report in reports:
            _print_report(report)
        counts = summary(reports)
        print(
            f"{counts['passed']}/{counts['total']} passed, {counts['failed']} failed, "
            f"{counts['errors']} errors in {counts['elapsed_ms'] / 1000:.1f} s"
        )
    if args.save:
        path = export_reports(reports, build_metadata(args.suite, order, jobs, reports), get_data_dir(config))
        print(f"saved {path}", file=sys.stderr)
    return exit_code(reports)


def cmd_rank_table(args: argparse.Namespace, config: Config) -> int:
    table = rank_table(args.n_max)
    print("n\tm\tcount")
    for n, row in enumerate(table):
        for i, count in enumerate(row):
            if count:
                print(f"{n}\t{i - args.n_max}\t{count}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="TOML config file (default: $MOCKTHETA_CONFIG)")
    common.add_argument("--log-level", default=argparse.SUPPRESS, choices=LOG_LEVELS)

    parser = argparse.ArgumentParser(prog="mocktheta", description="Exact q-series and mock theta identity checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="TOML config file (default: $MOCKTHETA_CONFIG)")
    parser.add_argument("--log-level", default=os.environ.get("MOCKTHETA_LOG_LEVEL", "WARNING"), choices=LOG_LEVELS)
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", parents=[common], help="expand an expression as a q-series")
    expand.add_argument("expr")
    expand.add_argument("--order", type=int, default=None)
    expand.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    expand.set_defaults(func=cmd_expand)

    verify = sub.add_parser("verify", parents=[common], help="run identity checks")
    verify.add_argument("--suite", choices=SELECTORS, default="all")
    verify.add_argument("--order", type=int, default=None, help="override every check's order")
    verify.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--t", action="append", default=None, help="entry1/entry2 sample point, repeatable")
    verify.add_argument("--save", action="store_true", help="save a JSON report under the data directory")
    verify.set_defaults(func=cmd_verify)

    ranks = sub.add_parser("rank-table", parents=[common], help="print N(m, n) as TSV")
    ranks.add_argument("--n-max", type=int, default=10)
    ranks.set_defaults(func=cmd_rank_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "order", None) is not None and args.order < 10 and args.command == "verify":
        print("error: --order must be >= 10", file=sys.stderr)
        return 2
    try:
        return args.func(args, config)
    except (ParseError, OutOfRange, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        logger.exception("internal error")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
