"""Theorem-level checks.

The two vertex-localized bounds live here with their equality
characterizations:

    2m <= sum_v p(v)            (half-units; equality iff every component
                                 is a clique)
    2m <= sum_v c(v) - circ     (equality iff the graph is a
                                 parent-dominated block graph)

plus the classical recovery chains, the edge-localized bounds
sum k(e)/(k(e)-1) <= n^2/2, sum 1/l(e) <= n/2, sum 1/w(e) <= (n-1)/2 with
their own equality classes, the lemma suite over rotation closures, and
the clique/alternating classification of extremal closures.

All bound arithmetic is integer half-units; edge sums are exact Fractions.
No verdict anywhere compares floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .blocks import decompose
from .graphs import Graph, bits, to_graph6
from .rotation import (
    DEFAULT_CLOSURE_CAP,
    Closure,
    closure,
    is_good,
    segments,
    transforms_ending_at,
)
from .weights import (
    EXACT_CAP,
    WeightTable,
    edge_weights,
    longest_path_from,
    vertex_weights,
)

# -- structural predicates ---------------------------------------------------


def components_all_cliques(g: Graph) -> bool:
    return all(g.is_clique(set(bits(m))) for m in g.component_masks())


def clique_components_min2(g: Graph) -> bool:
    """Every component a clique of order >= 2 (no isolated vertices).

    This is the exact equality class of the edge-path bound: an isolated
    vertex raises n/2 without contributing any 1/l(e) term.
    """
    return all(
        m.bit_count() >= 2 and g.is_clique(set(bits(m)))
        for m in g.component_masks()
    )


def balanced_complete_multipartite(g: Graph) -> bool:
    """Complete multipartite with >= 2 classes of equal size (n = 0 passes
    vacuously). Checked on the complement: its components must be cliques
    of one common order."""
    if g.n == 0:
        return True
    full = g.vertex_mask
    comp = Graph(g.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.adj)))
    classes = comp.component_masks()
    if len(classes) < 2:
        return False
    sizes = {m.bit_count() for m in classes}
    return len(sizes) == 1 and all(comp.is_clique(set(bits(m))) for m in classes)


# -- bound report -------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    graph6: str
    n: int
    m: int
    path_bound_halves: int
    cycle_bound_halves: int
    path_ineq_ok: bool
    cycle_ineq_ok: bool
    path_equality: bool
    cycle_equality: bool
    components_all_cliques: bool
    is_block_graph: bool
    is_parent_dominated: bool
    sum_k_ratio: Fraction
    sum_inv_l: Fraction
    sum_inv_w: Fraction
    turan_edge_equality: bool
    path_edge_equality: bool
    cycle_edge_equality: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "path_bound_halves": self.path_bound_halves,
            "cycle_bound_halves": self.cycle_bound_halves,
            "path_ineq_ok": self.path_ineq_ok,
            "cycle_ineq_ok": self.cycle_ineq_ok,
            "path_equality": self.path_equality,
            "cycle_equality": self.cycle_equality,
            "components_all_cliques": self.components_all_cliques,
            "is_block_graph": self.is_block_graph,
            "is_parent_dominated": self.is_parent_dominated,
            "edge_sums": {
                "k_over_k_minus_1": [
                    self.sum_k_ratio.numerator,
                    self.sum_k_ratio.denominator,
                ],
                "inv_l": [self.sum_inv_l.numerator, self.sum_inv_l.denominator],
                "inv_w": [self.sum_inv_w.numerator, self.sum_inv_w.denominator],
            },
            "edge_equalities": {
                "turan": self.turan_edge_equality,
                "path": self.path_edge_equality,
                "cycle": self.cycle_edge_equality,
            },
        }


def bound_report(g: Graph, max_n: int = EXACT_CAP) -> BoundReport:
    """Evaluate every bound and equality flag for one graph (n >= 1)."""
    if g.n == 0:
        raise ValueError("the cycle bound needs at least one vertex")
    wt = vertex_weights(g, max_n)
    ew = edge_weights(g, max_n)
    dec = decompose(g)
    m = g.edge_count()

    path_bound = sum(wt.p)
    cycle_bound = sum(wt.c) - wt.circ
    sum_k = sum(Fraction(k, k - 1) for k in ew.k.values())
    sum_l = sum(Fraction(1, l) for l in ew.l.values())
    sum_w = sum(Fraction(1, w) for w in ew.w.values())

    return BoundReport(
        graph6=to_graph6(g),
        n=g.n,
        m=m,
        path_bound_halves=path_bound,
        cycle_bound_halves=cycle_bound,
        path_ineq_ok=2 * m <= path_bound,
        cycle_ineq_ok=2 * m <= cycle_bound,
        path_equality=2 * m == path_bound,
        cycle_equality=2 * m == cycle_bound,
        components_all_cliques=components_all_cliques(g),
        is_block_graph=dec.is_block_graph,
        is_parent_dominated=dec.is_parent_dominated,
        sum_k_ratio=sum_k,
        sum_inv_l=sum_l,
        sum_inv_w=sum_w,
        turan_edge_equality=sum_k == Fraction(g.n * g.n, 2),
        path_edge_equality=sum_l == Fraction(g.n, 2),
        cycle_edge_equality=sum_w == Fraction(g.n - 1, 2),
    )


@dataclass(frozen=True)
class CharacterizationVerdict:
    path_ok: bool
    cycle_ok: bool
    report: BoundReport

    @property
    def ok(self) -> bool:
        return self.path_ok and self.cycle_ok

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.report.graph6,
            "path_equality": self.report.path_equality,
            "components_all_cliques": self.report.components_all_cliques,
            "path_characterization_ok": self.path_ok,
            "cycle_equality": self.report.cycle_equality,
            "is_parent_dominated": self.report.is_parent_dominated,
            "cycle_characterization_ok": self.cycle_ok,
            "ok": self.ok,
        }


def check_characterizations(g: Graph, max_n: int = EXACT_CAP) -> CharacterizationVerdict:
    """Assert both equality characterizations; a mismatch is a result, not
    an error (it would indicate an implementation bug, the theorems being
    proven facts)."""
    rep = bound_report(g, max_n)
    return CharacterizationVerdict(
        path_ok=rep.path_equality == rep.components_all_cliques,
        cycle_ok=rep.cycle_equality == rep.is_parent_dominated,
        report=rep,
    )


# -- classical recovery -------------------------------------------------------


@dataclass(frozen=True)
class ChainReport:
    """One recovery chain m <= localized bound <= classical bound, in
    half-units, with its equality accounting."""

    applicable: bool
    local_bound_halves: int
    classical_bound_halves: int
    ineq_local_ok: bool
    ineq_classical_ok: bool
    local_equality: bool
    classical_equality: bool
    extremal_class: bool


@dataclass(frozen=True)
class RecoveryReport:
    k: int
    path_chain: ChainReport
    cycle_chain: ChainReport


def classical_recovery(g: Graph, k: int, max_n: int = EXACT_CAP) -> RecoveryReport:
    """Verify the two recovery chains for parameter k.

    Path chain (needs g P_k-free, i.e. max p(v) <= k-1):
        2m <= sum p(v) <= n(k-1), tight exactly on disjoint K_k unions.
    Cycle chain (needs circumference <= k):
        2m <= sum c(v) - circ <= k(n-1), tight exactly on connected graphs
        whose blocks are all K_k.
    A failed precondition yields applicable=False rather than an error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        raise ValueError("recovery chains need at least one vertex")
    wt = vertex_weights(g, max_n)
    dec = decompose(g)
    m2 = 2 * g.edge_count()

    p_sum = sum(wt.p)
    p_classical = g.n * (k - 1)
    path_applicable = max(wt.p, default=0) <= k - 1
    comps = [set(bits(mask)) for mask in g.component_masks()]
    path_chain = ChainReport(
        applicable=path_applicable,
        local_bound_halves=p_sum,
        classical_bound_halves=p_classical,
        ineq_local_ok=m2 <= p_sum,
        ineq_classical_ok=p_sum <= p_classical,
        local_equality=m2 == p_sum,
        classical_equality=p_sum == p_classical,
        extremal_class=all(len(c) == k and g.is_clique(c) for c in comps),
    )

    c_sum = sum(wt.c) - wt.circ
    c_classical = k * (g.n - 1)
    cycle_chain = ChainReport(
        applicable=wt.circ <= k,
        local_bound_halves=c_sum,
        classical_bound_halves=c_classical,
        ineq_local_ok=m2 <= c_sum,
        ineq_classical_ok=c_sum <= c_classical,
        local_equality=m2 == c_sum,
        classical_equality=c_sum == c_classical,
        extremal_class=dec.is_block_graph and all(len(b) == k for b in dec.blocks),
    )
    return RecoveryReport(k=k, path_chain=path_chain, cycle_chain=cycle_chain)


# -- edge-localized bounds ----------------------------------------------------


@dataclass(frozen=True)
class EdgeLocalReport:
    n: int
    m: int
    sum_k_ratio: Fraction
    sum_inv_l: Fraction
    sum_inv_w: Fraction
    turan_equality: bool
    path_equality: bool
    cycle_equality: bool
    is_balanced_multipartite: bool
    clique_components_min2: bool
    is_block_graph: bool

    @property
    def characterizations_ok(self) -> bool:
        return (
            self.turan_equality == self.is_balanced_multipartite
            and self.path_equality == self.clique_components_min2
            and self.cycle_equality == self.is_block_graph
        )


def edge_local_report(g: Graph, max_n: int = EXACT_CAP) -> EdgeLocalReport:
    """The three edge-localized bounds with exact rational sums and their
    equality classes (balanced complete multipartite / clique components of
    order >= 2 / block graph)."""
    ew = edge_weights(g, max_n)
    dec = decompose(g)
    return EdgeLocalReport(
        n=g.n,
        m=g.edge_count(),
        sum_k_ratio=sum(Fraction(k, k - 1) for k in ew.k.values()),
        sum_inv_l=sum(Fraction(1, l) for l in ew.l.values()),
        sum_inv_w=sum(Fraction(1, w) for w in ew.w.values()),
        turan_equality=sum(Fraction(k, k - 1) for k in ew.k.values())
        == Fraction(g.n * g.n, 2),
        path_equality=sum(Fraction(1, l) for l in ew.l.values()) == Fraction(g.n, 2),
        cycle_equality=sum(Fraction(1, w) for w in ew.w.values())
        == Fraction(g.n - 1, 2),
        is_balanced_multipartite=balanced_complete_multipartite(g),
        clique_components_min2=clique_components_min2(g),
        is_block_graph=dec.is_block_graph,
    )


# -- lemma suite ---------------------------------------------------------------


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    ok: bool
    detail: str = ""


def closure_lemma_checks(cl: Closure) -> list[LemmaCheck]:
    """Structural laws of one rotation closure: twin weights, goodness of
    every path, Front* exclusion, the Back count, prefix agreement and
    pivot stability."""
    g = cl.graph
    out: list[LemmaCheck] = []

    twin_ok = all(cl.cycle_weight[v] == cl.cycle_weight[cl.twin[v]] for v in cl.L0)
    out.append(LemmaCheck("twin_weights", twin_ok))

    good_ok = True
    front_ok = True
    back_ok = True
    pivot_ok = True
    prefix_ok = True
    prefix: tuple[int, ...] | None = None
    detail = ""
    for v in sorted(cl.Lstar):
        cv = cl.cycle_weight[v]
        pivots = set()
        for pv in transforms_ending_at(cl, v):
            if not is_good(cl, pv):
                good_ok = False
                detail = f"bad path {pv.seq}"
            if pv.length < cv - 1:
                if pv.length == 0:
                    continue  # isolated origin: no segments to check
                front_ok = back_ok = pivot_ok = False
                detail = f"path {pv.seq} shorter than c({v})-1"
                continue
            segs = segments(pv, v, cv)
            pivots.add(segs.pivot)
            if cl.Lstar & set(segs.front_star):
                front_ok = False
                detail = f"L* meets Front* on {pv.seq}"
            if len(cl.Lstar & set(segs.back)) != len(cl.L):
                back_ok = False
                detail = f"back count off on {pv.seq}"
            head = pv.seq[: max(cl.prefix_len, 0)]
            if prefix is None:
                prefix = head
            elif head != prefix:
                prefix_ok = False
                detail = f"prefix disagreement on {pv.seq}"
        if len(pivots) > 1:
            pivot_ok = False
            detail = f"pivot varies for terminal {v}"
    out.append(LemmaCheck("all_paths_good", good_ok, detail if not good_ok else ""))
    out.append(LemmaCheck("front_exclusion", front_ok, detail if not front_ok else ""))
    out.append(LemmaCheck("back_count", back_ok, detail if not back_ok else ""))
    out.append(LemmaCheck("prefix_agreement", prefix_ok, detail if not prefix_ok else ""))
    out.append(LemmaCheck("pivot_stability", pivot_ok, detail if not pivot_ok else ""))
    return out


def _all_maximum_paths(g: Graph, comp: set[int]) -> tuple[int, list[tuple[int, ...]]]:
    """Length of the longest path within one component and every maximum
    path, deduplicated by orientation (kept when seq <= reversed seq)."""
    best = 0
    found: list[tuple[int, ...]] = []

    def extend(seq: list[int], used: int) -> None:
        nonlocal best, found
        length = len(seq) - 1
        if length > best:
            best = length
            found = []
        if length == best:
            rev = tuple(reversed(seq))
            s = tuple(seq)
            if s <= rev:
                found.append(s)
        for w in bits(g.adj[seq[-1]] & ~used):
            seq.append(w)
            extend(seq, used | (1 << w))
            seq.pop()

    for v in sorted(comp):
        extend([v], 1 << v)
    return best, found


def longest_path_claims(g: Graph) -> list[LemmaCheck]:
    """Per component with maximum path length k: every maximum path with
    adjacent endpoints spans the component, and when no maximum path closes
    into a (k+1)-cycle (none has adjacent endpoints), every maximum path has
    an endpoint of degree <= k/2."""
    span_ok = True
    degree_ok = True
    detail_span = ""
    detail_deg = ""
    for mask in g.component_masks():
        comp = set(bits(mask))
        k, paths = _all_maximum_paths(g, comp)
        if any(g.has_edge(seq[0], seq[-1]) for seq in paths):
            for seq in paths:
                if g.has_edge(seq[0], seq[-1]) and set(seq) != comp:
                    span_ok = False
                    detail_span = f"non-spanning closed maximum path {seq}"
        else:
            for seq in paths:
                if 2 * min(g.degree(seq[0]), g.degree(seq[-1])) > k:
                    degree_ok = False
                    detail_deg = f"endpoint degrees too large on {seq}"
    return [
        LemmaCheck("spanning_cycle_claim", span_ok, detail_span),
        LemmaCheck("endpoint_degree_claim", degree_ok, detail_deg),
    ]


def lemma_suite(
    g: Graph,
    v0: int,
    max_n: int = EXACT_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> list[LemmaCheck]:
    """Closure laws for the longest v0-path plus the global maximum-path
    claims; every check is expected to pass on every graph."""
    cl = closure(g, longest_path_from(g, v0, max_n), closure_cap)
    return closure_lemma_checks(cl) + longest_path_claims(g)


# -- extremal structure --------------------------------------------------------


@dataclass(frozen=True)
class StructureVerdict:
    kind: str  # "CliqueStructure" | "AlternatingStructure" | "Neither"
    pivot: int | None
    L: frozenset[int]
    S: frozenset[int] | None
    checks: tuple[LemmaCheck, ...]
    cond_weight: dict[int, bool]
    cond_degree: dict[int, bool]
    failed: str | None = None


def structure_classify(g: Graph, cl: Closure, wt: WeightTable) -> StructureVerdict:
    """Classify a closure as clique- or alternating-structured.

    Under the equality conditions (common S of size 1 versus size |L|) one
    of the two must hold; on arbitrary inputs the predicates are evaluated
    factually and the first failure yields Neither. Conditions
    c(v) = |L| + |S_v| and d(v) = |L| are reported per terminal either way.
    """
    cond_weight = {
        v: wt.c[v] == len(cl.L) + len(cl.S[v]) for v in sorted(cl.Lstar)
    }
    cond_degree = {v: g.degree(v) == len(cl.L) for v in sorted(cl.Lstar)}

    def neither(reason: str, pivot: int | None, s: frozenset[int] | None,
                checks: list[LemmaCheck]) -> StructureVerdict:
        return StructureVerdict(
            kind="Neither", pivot=pivot, L=cl.L, S=s,
            checks=tuple(checks), cond_weight=cond_weight,
            cond_degree=cond_degree, failed=reason,
        )

    missing = [v for v in sorted(cl.Lstar) if v not in cl.pivot]
    if missing:
        return neither(f"pivot undefined for terminal {missing[0]}", None, None, [])
    pivots = {cl.pivot[v] for v in cl.Lstar}
    if len(pivots) != 1:
        return neither("pivot differs across terminals", None, None, [])
    w = next(iter(pivots))
    svals = {cl.S[v] for v in cl.Lstar}
    if len(svals) != 1:
        return neither("S differs across terminals", w, None, [])
    S = next(iter(svals))
    if not S:
        return neither("S is empty", w, S, [])

    if len(S) == 1:
        block = set(cl.L) | {w}
        checks = [
            LemmaCheck("pivot_in_S", w in S),
            LemmaCheck("clique", g.is_clique(block)),
            LemmaCheck(
                "clique_order",
                all(wt.c[v] == len(block) for v in cl.Lstar),
            ),
            LemmaCheck("l0_empty", not cl.L0),
        ]
        kind = "CliqueStructure"
    else:
        alternation = True
        for v in sorted(cl.Lstar):
            pv = transforms_ending_at(cl, v)[0]
            if pv.length < wt.c[v] - 1:
                alternation = False
                break
            back_star = segments(pv, v, wt.c[v]).back_star
            if len(back_star) != 2 * len(S) or any(
                back_star[i] not in S for i in range(0, len(back_star), 2)
            ):
                alternation = False
                break
        checks = [
            LemmaCheck("s_size_equals_l", len(S) == len(cl.L)),
            LemmaCheck("alternation", alternation),
            LemmaCheck(
                "s_equals_neighborhoods",
                all(set(bits(g.adj[x])) == set(S) for x in cl.Lstar),
            ),
        ]
        kind = "AlternatingStructure"

    bad = [c for c in checks if not c.ok]
    if bad:
        return neither(bad[0].name, w, S, checks)
    return StructureVerdict(
        kind=kind, pivot=w, L=cl.L, S=S, checks=tuple(checks),
        cond_weight=cond_weight, cond_degree=cond_degree,
    )


def degree_one_core(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Iteratively strip degree-1 vertices (smallest first) until none
    remain; returns the core plus an id map into the input graph."""
    cur = g
    ids = tuple(range(g.n))
    while True:
        leaf = next((v for v in range(cur.n) if cur.degree(v) == 1), None)
        if leaf is None:
            return cur, ids
        cur, keep = cur.delete_vertices([leaf])
        ids = tuple(ids[k] for k in keep)


def classify_extremal(
    g: Graph,
    max_n: int = EXACT_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> StructureVerdict | None:
    """Classify the degree-1-reduced core of a graph from the closure of a
    longest path out of its maximum-weight vertex.

    The clique/alternating dichotomy presumes minimum degree >= 2 (pendant
    twins otherwise populate L0), which is exactly what the reduction
    guarantees; a core collapsed to a single vertex is trivially
    clique-structured and yields None.
    """
    core, _ = degree_one_core(g)
    if core.n <= 1:
        return None
    wt = vertex_weights(core, max_n)
    best = max(wt.c)
    u = min(v for v in range(core.n) if wt.c[v] == best)
    cl = closure(core, longest_path_from(core, u, max_n), closure_cap)
    return structure_classify(core, cl, wt)
