"""Corpus drivers: per-graph theorem verdicts, exhaustive labeled
enumeration scans and graph6 stream scans.

Workers are plain top-level functions over mask ranges or line chunks so a
multiprocessing pool can run them; results are merged in submission order,
which keeps every output deterministic regardless of --jobs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Iterable, Iterator

from .blocks import block_graph_flags
from .errors import Graph6Error
from .generators import graph_from_edge_mask, labeled_graph_count
from .graphs import Graph, parse_graph6, to_graph6
from .analysis import components_all_cliques
from .weights import EXACT_CAP, vertex_weights

CSV_HEADER = (
    "graph6,n,m,path_bound_halves,cycle_bound_halves,"
    "path_equality,cycle_equality,components_all_cliques,"
    "is_block_graph,is_parent_dominated"
)


@dataclass(frozen=True)
class GraphVerdict:
    """Vertex-theorem verdict row for one graph."""

    graph6: str
    n: int
    m: int
    path_bound_halves: int
    cycle_bound_halves: int
    path_equality: bool
    cycle_equality: bool
    components_all_cliques: bool
    is_block_graph: bool
    is_parent_dominated: bool

    @property
    def path_ineq_ok(self) -> bool:
        return 2 * self.m <= self.path_bound_halves

    @property
    def cycle_ineq_ok(self) -> bool:
        return 2 * self.m <= self.cycle_bound_halves

    @property
    def path_char_ok(self) -> bool:
        return self.path_equality == self.components_all_cliques

    @property
    def cycle_char_ok(self) -> bool:
        return self.cycle_equality == self.is_parent_dominated

    @property
    def ok(self) -> bool:
        return (
            self.path_ineq_ok
            and self.cycle_ineq_ok
            and self.path_char_ok
            and self.cycle_char_ok
        )

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "path_bound_halves": self.path_bound_halves,
            "cycle_bound_halves": self.cycle_bound_halves,
            "path_equality": self.path_equality,
            "cycle_equality": self.cycle_equality,
            "components_all_cliques": self.components_all_cliques,
            "is_block_graph": self.is_block_graph,
            "is_parent_dominated": self.is_parent_dominated,
            "ok": self.ok,
        }

    def to_csv_row(self) -> str:
        return ",".join(
            [
                self.graph6,
                str(self.n),
                str(self.m),
                str(self.path_bound_halves),
                str(self.cycle_bound_halves),
                str(int(self.path_equality)),
                str(int(self.cycle_equality)),
                str(int(self.components_all_cliques)),
                str(int(self.is_block_graph)),
                str(int(self.is_parent_dominated)),
            ]
        )


def graph_verdict(g: Graph, max_n: int = EXACT_CAP) -> GraphVerdict:
    wt = vertex_weights(g, max_n)
    m = g.edge_count()
    is_bg, is_pd = block_graph_flags(g)
    return GraphVerdict(
        graph6=to_graph6(g),
        n=g.n,
        m=m,
        path_bound_halves=sum(wt.p),
        cycle_bound_halves=sum(wt.c) - wt.circ if g.n else 0,
        path_equality=2 * m == sum(wt.p),
        cycle_equality=g.n > 0 and 2 * m == sum(wt.c) - wt.circ,
        components_all_cliques=components_all_cliques(g),
        is_block_graph=is_bg,
        is_parent_dominated=is_pd,
    )


# -- exhaustive enumeration scan ----------------------------------------------


@dataclass
class EnumerationScan:
    n: int
    graphs_processed: int = 0
    path_violations: list[int] = field(default_factory=list)
    cycle_violations: list[int] = field(default_factory=list)
    path_char_mismatches: list[int] = field(default_factory=list)
    cycle_char_mismatches: list[int] = field(default_factory=list)
    path_equality_count: int = 0
    cycle_equality_count: int = 0
    codec_violations: int = 0
    cycle_extremal_masks: list[int] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return len(self.path_violations) + len(self.cycle_violations)

    @property
    def mismatches(self) -> int:
        return len(self.path_char_mismatches) + len(self.cycle_char_mismatches)


def _enum_chunk(args: tuple[int, int, int, bool]) -> dict[str, Any]:
    n, start, stop, collect = args
    pairs = list(combinations(range(n), 2))
    out: dict[str, Any] = {
        "processed": stop - start,
        "path_viol": [],
        "cycle_viol": [],
        "path_mis": [],
        "cycle_mis": [],
        "path_eq": 0,
        "cycle_eq": 0,
        "codec_viol": 0,
        "extremal": [],
    }
    for mask in range(start, stop):
        g = graph_from_edge_mask(n, mask, pairs)
        if parse_graph6(to_graph6(g)) != g:
            out["codec_viol"] += 1
        wt = vertex_weights(g)
        m2 = 2 * mask.bit_count()
        path_bound = sum(wt.p)
        cycle_bound = sum(wt.c) - wt.circ
        if m2 > path_bound:
            out["path_viol"].append(mask)
        if m2 > cycle_bound:
            out["cycle_viol"].append(mask)
        path_eq = m2 == path_bound
        cycle_eq = m2 == cycle_bound
        if path_eq:
            out["path_eq"] += 1
        if cycle_eq:
            out["cycle_eq"] += 1
        is_bg, is_pd = block_graph_flags(g)
        if path_eq != components_all_cliques(g):
            out["path_mis"].append(mask)
        if cycle_eq != is_pd:
            out["cycle_mis"].append(mask)
        if collect and cycle_eq:
            out["extremal"].append(mask)
    return out


def enumeration_scan(
    n: int,
    jobs: int = 1,
    collect_cycle_extremal: bool = False,
    chunk_size: int = 1 << 15,
) -> EnumerationScan:
    """Scan every labeled graph on n vertices for both vertex-localized
    bounds and their characterizations."""
    total = labeled_graph_count(n)
    chunks = [
        (n, start, min(start + chunk_size, total), collect_cycle_extremal)
        for start in range(0, total, chunk_size)
    ]
    result = EnumerationScan(n=n)
    if jobs > 1 and len(chunks) > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_enum_chunk, chunks)
    else:
        parts = [_enum_chunk(c) for c in chunks]
    for part in parts:
        result.graphs_processed += part["processed"]
        result.path_violations.extend(part["path_viol"])
        result.cycle_violations.extend(part["cycle_viol"])
        result.path_char_mismatches.extend(part["path_mis"])
        result.cycle_char_mismatches.extend(part["cycle_mis"])
        result.path_equality_count += part["path_eq"]
        result.cycle_equality_count += part["cycle_eq"]
        result.codec_violations += part["codec_viol"]
        result.cycle_extremal_masks.extend(part["extremal"])
    return result


# -- graph6 stream scan ---------------------------------------------------------


@dataclass
class ScanSummary:
    graphs_processed: int = 0
    inequality_violations: int = 0
    characterization_mismatches: int = 0
    path_equality_count: int = 0
    cycle_equality_count: int = 0
    elapsed: float | None = None

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "graphs_processed": self.graphs_processed,
            "inequality_violations": self.inequality_violations,
            "characterization_mismatches": self.characterization_mismatches,
            "path_equality_count": self.path_equality_count,
            "cycle_equality_count": self.cycle_equality_count,
        }
        if self.elapsed is not None:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def _verdict_chunk(args: tuple[list[tuple[int, str]], int]) -> list[tuple[int, GraphVerdict]]:
    lines, max_n = args
    out = []
    for lineno, line in lines:
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
        if g.n > max_n:
            raise Graph6Error(
                f"line {lineno}: n={g.n} exceeds --max-n={max_n}"
            )
        out.append((lineno, graph_verdict(g, max_n)))
    return out


def scan_stream(
    records: Iterable[tuple[int, str]],
    jobs: int = 1,
    max_n: int = EXACT_CAP,
    chunk_size: int = 2048,
) -> Iterator[tuple[int, GraphVerdict]]:
    """Verdicts for a (line_number, graph6) stream, in input order."""
    chunks_iter = _chunked(records, chunk_size)
    if jobs > 1:
        with Pool(jobs) as pool:
            for part in pool.imap(_verdict_chunk, ((c, max_n) for c in chunks_iter)):
                yield from part
    else:
        for chunk in chunks_iter:
            yield from _verdict_chunk((chunk, max_n))


def _chunked(records: Iterable[tuple[int, str]], size: int) -> Iterator[list[tuple[int, str]]]:
    buf: list[tuple[int, str]] = []
    for rec in records:
        buf.append(rec)
        if len(buf) >= size:
            yield buf
            buf = []
    if buf:
        yield buf


# -- acceptance-driver workers --------------------------------------------------
#
# Top-level so a Pool can dispatch them; each returns the failures it saw,
# as descriptive strings, so the callers can assert emptiness and report.


def peel_check_chunk(args: tuple[list[str], int]) -> list[str]:
    """Peel every graph and re-verify its certificate."""
    from .peeling import peel, verify_certificate

    lines, closure_cap = args
    failures = []
    for line in lines:
        g = parse_graph6(line)
        try:
            tr = peel(g, closure_cap=closure_cap)
        except Exception as exc:  # cap exceedance is a failure, not a crash
            failures.append(f"{line}: {exc}")
            continue
        rep = verify_certificate(tr, g)
        if not rep.ok:
            bad = [c.name for c in rep.checks if not c.ok]
            failures.append(f"{line}: {bad}")
    return failures


def lemma_chunk(lines: list[str]) -> list[str]:
    """Closure lemma laws for every origin vertex, plus the global
    maximum-path claims."""
    from .analysis import closure_lemma_checks, longest_path_claims
    from .rotation import closure
    from .weights import longest_path_from

    failures = []
    for line in lines:
        g = parse_graph6(line)
        for v0 in range(g.n):
            cl = closure(g, longest_path_from(g, v0))
            for chk in closure_lemma_checks(cl):
                if not chk.ok:
                    failures.append(f"{line} v0={v0}: {chk.name} {chk.detail}")
        for chk in longest_path_claims(g):
            if not chk.ok:
                failures.append(f"{line}: {chk.name} {chk.detail}")
    return failures


def extremal_chunk(args: tuple[int, list[int]]) -> list[str]:
    """Full extremal-graph obligations for cycle-bound-tight graphs:
    connectivity, clique-structure classification of the reduced core, and
    the equality conditions along the peel trace."""
    from .analysis import classify_extremal
    from .peeling import equality_conditions, peel, verify_certificate

    n, masks = args
    pairs = list(combinations(range(n), 2))
    failures = []
    for mask in masks:
        g = graph_from_edge_mask(n, mask, pairs)
        tag = to_graph6(g)
        if not g.is_connected():
            failures.append(f"{tag}: disconnected extremal graph")
            continue
        verdict = classify_extremal(g)
        if verdict is not None and verdict.kind != "CliqueStructure":
            failures.append(f"{tag}: classified {verdict.kind} ({verdict.failed})")
        tr = peel(g)
        rep = verify_certificate(tr, g)
        if not (rep.ok and rep.equality_attained and rep.equality_diagnosed):
            failures.append(f"{tag}: certificate not tight")
        cond = equality_conditions(tr, g)
        if not cond.all_hold:
            failures.append(f"{tag}: equality conditions fail {cond}")
    return failures


def edge_bounds_chunk(lines: list[str]) -> list[str]:
    """Edge-localized bounds with exact rational arithmetic plus their
    equality-class characterizations."""
    from fractions import Fraction

    from .analysis import edge_local_report

    failures = []
    for line in lines:
        g = parse_graph6(line)
        rep = edge_local_report(g)
        n = g.n
        if rep.sum_k_ratio > Fraction(n * n, 2):
            failures.append(f"{line}: clique-edge bound violated")
        if rep.sum_inv_l > Fraction(n, 2):
            failures.append(f"{line}: path-edge bound violated")
        if rep.sum_inv_w > Fraction(n - 1, 2):
            failures.append(f"{line}: cycle-edge bound violated")
        if not rep.characterizations_ok:
            failures.append(f"{line}: edge equality class mismatch")
    return failures
