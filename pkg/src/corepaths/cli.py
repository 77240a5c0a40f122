"""Command line interface.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 for
usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import LatticePath, partition_to_path, path_to_partition, trace
from .errors import CoreError, VerificationError
from .oracles import (
    DEFAULT_MAX_S,
    CountReport,
    enumerate_distinct_cores,
    format_jsonl,
    format_table,
    verify_all,
)
from .partition_core import Partition
from .render import render_partition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def odd_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"s must be an odd positive integer, got {value}")
    return value


def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except CoreError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_count(args, out):
    observed = sum(1 for _ in enumerate_distinct_cores(args.s))
    report = CountReport(args.s, observed, 2 ** (args.s - 1))
    print(f"{report.observed} / {report.expected}", file=out)
    return EXIT_OK if report.match else EXIT_MISMATCH


def cmd_map(args, out):
    print(json.dumps(trace(args.partition, args.s)), file=out)
    return EXIT_OK


def cmd_unmap(args, out):
    print(path_to_partition(LatticePath(args.path), args.s), file=out)
    return EXIT_OK


def cmd_list(args, out):
    rows = [(partition_to_path(p, args.s), p) for p in enumerate_distinct_cores(args.s)]
    rows.sort(key=lambda row: row[0].sort_key())
    if args.format == "jsonl":
        for path, p in rows:
            print(json.dumps({"partition": str(p), "path": str(path)}), file=out)
        print(json.dumps({"count": len(rows)}), file=out)
    else:
        width = max(len("partition"), *(len(str(p)) for _, p in rows))
        print(f"{'path':<{args.s}}  {'partition':<{width}}".rstrip(), file=out)
        for path, p in rows:
            print(f"{str(path):<{args.s}}  {str(p)}", file=out)
        print(f"count: {len(rows)}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    try:
        reports = verify_all(args.max_s)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        print(json.dumps(exc.record), file=out)
        return EXIT_MISMATCH
    print(format_jsonl(reports) if args.format == "jsonl" else format_table(reports), file=out)
    return EXIT_OK if all(r.match for r in reports) else EXIT_MISMATCH


def cmd_render(args, out):
    out.write(render_partition(args.partition, args.s, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corepaths",
        description="Distinct-part (s, s+2)-core partitions and lattice paths with positive endpoint.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_s(p):
        p.add_argument("--s", type=odd_int, required=True, help="odd modulus s; the pair is (s, s+2)")
        return p

    p = with_s(sub.add_parser("count", help="count the cores and compare with 2^(s-1)"))
    p.set_defaults(func=cmd_count)

    p = with_s(sub.add_parser("map", help="trace a partition through the bijection as one JSON line"))
    p.add_argument("--partition", type=partition_arg, required=True, help='e.g. "15,7,6,3,1" or "empty"')
    p.set_defaults(func=cmd_map)

    p = with_s(sub.add_parser("unmap", help="recover the partition of a U/D path"))
    p.add_argument("--path", required=True, help='e.g. "UUDU..."')
    p.set_defaults(func=cmd_unmap)

    p = with_s(sub.add_parser("list", help="list every (partition, path) pair"))
    p.add_argument("--format", choices=("jsonl", "table"), default="table")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="cross-check the bijection against brute force for odd s <= max-s")
    p.add_argument("--max-s", type=odd_int, default=DEFAULT_MAX_S)
    p.add_argument("--format", choices=("jsonl", "table"), default="table")
    p.set_defaults(func=cmd_verify)

    p = with_s(sub.add_parser("render", help="Hasse diagram of P_(s,s+2) with the beta-set in white"))
    p.add_argument("--partition", type=partition_arg, required=True)
    p.add_argument("--format", choices=("dot", "tikz"), default="dot")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
