"""Batch CLI: weights, bounds, peeling certificates, block decomposition,
characterization checks, corpus scans, generators and enumeration.

Input is graph6, one record per line, from a file path or "-" for stdin.
Output is JSON lines by default (CSV for bounds/scan with --csv), with
stable key order and no timestamps unless --timing is given, so identical
invocations produce byte-identical output.

Exit codes: 0 success with no violations, 1 at least one violation or
characterization mismatch, 2 malformed input or cap exceedance.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Iterable

from .analysis import bound_report, check_characterizations
from .blocks import decompose, order_profile
from .errors import ClosureCapError, Graph6Error, SizeCapError
from .generators import (
    ENUMERATION_CAP,
    complete_graph,
    cycle_graph,
    enumerate_labeled,
    gen_clique_union,
    gen_gnm,
    gen_gnp,
    gen_parent_dominated,
    path_graph,
    star,
    turan,
)
from .graphs import GRAPH6_HEADER, Graph, parse_graph6, to_graph6
from .peeling import peel, verify_certificate
from .rotation import DEFAULT_CLOSURE_CAP
from .scan import CSV_HEADER, ScanSummary, scan_stream
from .weights import EXACT_CAP, vertex_weights


def _read_records(path: str) -> list[tuple[int, str]]:
    if path == "-":
        lines = sys.stdin.readlines()
    else:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.readlines()
    records = []
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if s.startswith(GRAPH6_HEADER):
            s = s[len(GRAPH6_HEADER):]
        if s:
            records.append((lineno, s))
    return records


def _parse_records(records: Iterable[tuple[int, str]], max_n: int) -> list[tuple[int, Graph]]:
    out = []
    for lineno, line in records:
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
        if g.n > max_n:
            raise SizeCapError(f"line {lineno}: n={g.n} exceeds --max-n={max_n}")
        out.append((lineno, g))
    return out


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_weights(args: argparse.Namespace) -> int:
    for _, g in _parse_records(_read_records(args.input), args.max_n):
        wt = vertex_weights(g, args.max_n)
        _emit(
            {
                "graph6": to_graph6(g),
                "n": g.n,
                "m": g.edge_count(),
                "p": list(wt.p),
                "c": list(wt.c),
                "circ": wt.circ if g.n else None,
            }
        )
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.csv:
        print(CSV_HEADER)
    for lineno, g in _parse_records(_read_records(args.input), args.max_n):
        if g.n == 0:
            raise SizeCapError(f"line {lineno}: bounds need at least one vertex")
        rep = bound_report(g, args.max_n)
        if args.csv:
            print(
                ",".join(
                    [
                        rep.graph6,
                        str(rep.n),
                        str(rep.m),
                        str(rep.path_bound_halves),
                        str(rep.cycle_bound_halves),
                        str(int(rep.path_equality)),
                        str(int(rep.cycle_equality)),
                        str(int(rep.components_all_cliques)),
                        str(int(rep.is_block_graph)),
                        str(int(rep.is_parent_dominated)),
                    ]
                )
            )
        else:
            _emit(rep.to_json_dict())
    return 0


def cmd_peel(args: argparse.Namespace) -> int:
    status = 0
    for _, g in _parse_records(_read_records(args.input), args.max_n):
        tr = peel(g, args.max_n, args.closure_cap)
        report = verify_certificate(tr, g, max_n=args.max_n)
        if not report.ok:
            status = 1
        out = {"graph6": to_graph6(g)}
        out.update(tr.to_json_dict())
        out["checks"] = report.to_json_dict()
        _emit(out)
    return status


def cmd_blocks(args: argparse.Namespace) -> int:
    for _, g in _parse_records(_read_records(args.input), args.max_n):
        dec = decompose(g)
        _emit(
            {
                "graph6": to_graph6(g),
                "blocks": [list(b) for b in dec.blocks],
                "cut_vertices": sorted(dec.cut_vertices),
                "order_profile": list(order_profile(dec)),
                "is_block_graph": dec.is_block_graph,
                "is_parent_dominated": dec.is_parent_dominated,
                "witness_root": dec.witness_root,
                "parent": {str(k): v for k, v in sorted(dec.parent.items())},
            }
        )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    status = 0
    for lineno, g in _parse_records(_read_records(args.input), args.max_n):
        if g.n == 0:
            raise SizeCapError(f"line {lineno}: checks need at least one vertex")
        verdict = check_characterizations(g, args.max_n)
        if not verdict.ok:
            status = 1
        _emit(verdict.to_json_dict())
    return status


def cmd_scan(args: argparse.Namespace) -> int:
    started = time.monotonic()
    summary = ScanSummary()
    if args.csv and not args.quiet:
        print(CSV_HEADER)
    for _, verdict in scan_stream(
        _read_records(args.input), jobs=args.jobs, max_n=args.max_n
    ):
        summary.graphs_processed += 1
        if not (verdict.path_ineq_ok and verdict.cycle_ineq_ok):
            summary.inequality_violations += 1
        if not (verdict.path_char_ok and verdict.cycle_char_ok):
            summary.characterization_mismatches += 1
        summary.path_equality_count += int(verdict.path_equality)
        summary.cycle_equality_count += int(verdict.cycle_equality)
        if not args.quiet:
            print(verdict.to_csv_row() if args.csv else json.dumps(verdict.to_json_dict(), separators=(",", ":")))
    if args.timing:
        summary.elapsed = time.monotonic() - started
    _emit({"summary": summary.to_json_dict()})
    return 1 if summary.inequality_violations or summary.characterization_mismatches else 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= ENUMERATION_CAP:
        raise SizeCapError(f"enumeration capped at n <= {ENUMERATION_CAP}")
    for g in enumerate_labeled(args.n):
        print(to_graph6(g))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    graphs: list[Graph] = []
    if family == "clique-union":
        orders = [int(x) for x in args.orders.split(",")]
        graphs = [gen_clique_union(orders)]
    elif family == "parent-dominated":
        graphs = [
            gen_parent_dominated(args.seed + i, args.blocks, args.max_order)
            for i in range(args.count)
        ]
    elif family == "gnp":
        graphs = [gen_gnp(args.n, args.p, args.seed + i) for i in range(args.count)]
    elif family == "gnm":
        graphs = [gen_gnm(args.n, args.edges, args.seed + i) for i in range(args.count)]
    elif family == "turan":
        graphs = [turan(args.n, args.r)]
    elif family == "path":
        graphs = [path_graph(args.n)]
    elif family == "cycle":
        graphs = [cycle_graph(args.n)]
    elif family == "star":
        graphs = [star(args.n)]
    elif family == "complete":
        graphs = [complete_graph(args.n)]
    for g in graphs:
        print(to_graph6(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eglocal",
        description="Exact verification of vertex-localized path/cycle edge bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="graph6 file or - for stdin")
        p.add_argument("--max-n", type=int, default=EXACT_CAP, dest="max_n")
        p.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP, dest="closure_cap")
        p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("weights", help="per-vertex p/c weights and circumference")
    add_common(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("bounds", help="bound report per graph")
    add_common(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("peel", help="peeling trace plus certificate checks")
    add_common(p)
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("blocks", help="block decomposition and verdicts")
    add_common(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("check", help="equality characterizations per graph")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="verify a corpus; summary plus optional rows")
    add_common(p)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("enumerate", help="all labeled graphs on n vertices as graph6")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gen", help="generate fixture/corpus graphs as graph6")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "clique-union",
            "parent-dominated",
            "gnp",
            "gnm",
            "turan",
            "path",
            "cycle",
            "star",
            "complete",
        ],
    )
    p.add_argument("--orders", default="3", help="comma list for clique-union")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--edges", type=int, default=4)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--max-order", type=int, default=4, dest="max_order")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, SizeCapError, ClosureCapError, ValueError, OSError) as exc:
        print(f"eglocal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
