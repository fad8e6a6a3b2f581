"""Command line interface.

Subcommands: count, table, enumerate, verify.  Exit codes are stable
for CI use: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, pipeline
from .identities import GridSpec
from .pipeline import COUNT_METHODS, DEFAULT_BUDGET, DEFAULT_K_MAX, DEFAULT_N_MAX, SUITES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lisenum",
        description=(
            "Exact counting and verification for permutations of 1..n whose "
            "first n-k entries increase and whose longest increasing "
            "subsequence has length at most n-k."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print the exact class size")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--k", type=int, required=True)
    p_count.add_argument(
        "--method", choices=COUNT_METHODS, default="formula",
        help="counting route (default: formula)",
    )

    p_table = sub.add_parser("table", help="component table over a range of n")
    p_table.add_argument("--k", type=int, required=True)
    p_table.add_argument("--n-from", type=int, required=True)
    p_table.add_argument("--n-to", type=int, required=True)
    p_table.add_argument("--format", choices=("md", "csv", "json"), default="md")

    p_enum = sub.add_parser("enumerate", help="list class members one per line")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument("--prefix", type=int, default=None, help="restrict to first entry")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--k-max", type=int, default=None,
                          help=f"default {DEFAULT_K_MAX}")
    p_verify.add_argument("--n-max", type=int, default=None,
                          help=f"default {DEFAULT_N_MAX}")
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                          help="cap on brute-force candidates per cell")
    p_verify.add_argument("--out", type=str, default=None,
                          help="write the JSON report here")
    p_verify.add_argument("--grid", type=str, default=None,
                          help="JSON file with explicit parameter ranges")
    p_verify.add_argument("--threads", type=int, default=1,
                          help="parallelism bound (current engines are "
                               "deterministic and single threaded)")
    return parser


def _cmd_count(args) -> int:
    print(pipeline.count(args.n, args.k, args.method))
    return 0


def _cmd_table(args) -> int:
    table = pipeline.component_table(args.k, args.n_from, args.n_to)
    print(table.render(args.format))
    return 0


def _cmd_enumerate(args) -> int:
    if args.prefix is None:
        members = oracle.enumerate_class(args.n, args.k)
    else:
        members = oracle.enumerate_with_prefix(args.n, args.k, args.prefix)
    for mu in members:
        print(oracle.format_perm(mu))
    return 0


def _cmd_verify(args) -> int:
    if args.threads < 1:
        raise ValueError(f"--threads must be at least 1, got {args.threads}")
    grid = None
    if args.grid is not None:
        with open(args.grid, "r", encoding="utf-8") as handle:
            grid = GridSpec.from_json(handle.read())
    k_max = args.k_max if args.k_max is not None else (
        grid.k[1] if grid is not None else DEFAULT_K_MAX
    )
    n_max = args.n_max if args.n_max is not None else (
        grid.n[1] if grid is not None else DEFAULT_N_MAX
    )
    report = pipeline.run_suite(
        args.suite, k_max=k_max, n_max=n_max, budget=args.budget, grid=grid
    )
    print(report.summary())
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(report.to_json(), handle, indent=2, sort_keys=True)
            handle.write("\n")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "table": _cmd_table,
        "enumerate": _cmd_enumerate,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, ArithmeticError, OSError, pipeline.ConjectureViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
