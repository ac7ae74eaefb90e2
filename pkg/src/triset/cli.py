"""Command-line front end for triangularizing polynomial system files."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .report import (
    ALGORITHMS,
    render_figures,
    render_report_json,
    render_report_table,
    run_benchmark,
)

EXIT_OK = 0
EXIT_CONTRADICTORY = 1
EXIT_INPUT_ERROR = 2
EXIT_ITERATION_LIMIT = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triset",
        description="Triangularize polynomial systems into characteristic sets.",
    )
    parser.add_argument(
        "paths",
        nargs="+",
        help="system files ('-' reads a single system from stdin)",
    )
    parser.add_argument(
        "--alg",
        action="append",
        choices=ALGORITHMS,
        help="algorithm variant to run (repeatable; default: charset)",
    )
    parser.add_argument(
        "--cond",
        default=None,
        help="inner loop policy: find, never, or bound=K (default per algorithm)",
    )
    parser.add_argument(
        "--sort",
        choices=("refine", "degtuple"),
        default="refine",
        help="reductend ordering strategy",
    )
    parser.add_argument(
        "--certificates",
        action="store_true",
        help="track explicit input combinations (disables the PRS reduction)",
    )
    parser.add_argument(
        "--format", choices=("json", "table"), default="table", dest="fmt"
    )
    parser.add_argument("--trace", action="store_true", help="include the reduction trace")
    parser.add_argument(
        "--figures",
        metavar="DIR",
        default=None,
        help="write per-system PNG charts of the output statistics to DIR",
    )
    parser.add_argument(
        "--max-rounds",
        type=int,
        default=64,
        help="outer loop budget before reporting an iteration limit",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    algorithms = args.alg or ["charset"]
    try:
        reports, errors = run_benchmark(
            args.paths,
            algorithms=algorithms,
            cond=args.cond,
            sort=args.sort,
            certificates=args.certificates,
            max_rounds=args.max_rounds,
            with_trace=args.trace,
        )
    except ValueError as exc:
        parser.error(str(exc))
    if args.fmt == "json":
        sys.stdout.write(render_report_json(reports, errors) + "\n")
    else:
        sys.stdout.write(render_report_table(reports, errors))
    for e in errors:
        sys.stderr.write(f"error: {e['system']}: {e['error']}\n")
    if args.figures:
        for path in render_figures(reports, args.figures):
            sys.stderr.write(f"figure: {path}\n")

    if errors:
        return EXIT_INPUT_ERROR
    statuses = {r.status for r in reports}
    if "iteration-limit" in statuses:
        return EXIT_ITERATION_LIMIT
    if "contradictory" in statuses:
        return EXIT_CONTRADICTORY
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
