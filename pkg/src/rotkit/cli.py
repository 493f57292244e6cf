"""Command-line entry point.

    rotkit --case amalg:4,4;2 --theta-window both --format json
    rotkit --case all
"""
from __future__ import annotations

import argparse
import json
import sys

from .ktables import TableMismatch, export_tables, load_tables
from .verify import UnknownCase, all_labels, run_case


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rotkit",
        description="Recompute K-group ranks for cyclic and glued actions on A_theta and report every claim checked.",
    )
    p.add_argument("--case", default="all",
                   help="free:m,n | amalg:m,n;d | thm1.3 | thm1.4 | combos | identities | lattice-oracle | all")
    p.add_argument("--theta-window", default="both", choices=("low", "high", "both"),
                   help="low: 0 < theta < 1/2 (c = -1); high: 1/2 < theta < 1 (c = +1)")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--tables", metavar="DIR", help="directory with xi/eta/mu/lambda.json overriding the shipped tables")
    p.add_argument("--seed", type=int, default=0, help="seed for the lattice-oracle case")
    p.add_argument("--list", action="store_true", help="list case labels and exit")
    p.add_argument("--export-tables", metavar="DIR", help="write the built-in tables as JSON and exit")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        print("\n".join(all_labels() + ["all"]))
        return 0
    if args.export_tables:
        for path in export_tables(args.export_tables):
            print(path)
        return 0

    tables = None
    if args.tables:
        try:
            tables = load_tables(args.tables, validate=False)
        except (OSError, ValueError, KeyError) as exc:
            print(f"rotkit: cannot read tables from {args.tables}: {exc}", file=sys.stderr)
            return 2
    else:
        try:
            tables = load_tables()
        except TableMismatch as exc:
            print(f"rotkit: shipped tables disagree with the built-in constructors: {exc}", file=sys.stderr)
            return 2

    try:
        report = run_case(args.case, args.theta_window, tables, seed=args.seed, check_tables=args.tables is not None)
    except UnknownCase as exc:
        print(f"rotkit: unknown case {exc}; try --list", file=sys.stderr)
        return 2

    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
