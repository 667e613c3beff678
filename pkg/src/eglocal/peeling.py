"""Layered peeling of a graph by rotation-closure endpoint sets, with a
verifiable certificate.

Starting from a maximum-weight vertex u, each layer takes a longest x-path
in the current graph, removes the closure's L* set, sweeps isolated
vertices, and records everything in the original graph's vertex labels.
The recorded per-layer data certify the chain

    2m  <=  sum over layers of sum_{v in L_i} c_i(v)  <=  sum_v c(v) - c(u)

in half-units, where c_i is the weight in the layer's graph. The start
vertex x survives until it becomes isolated, so u never appears in any L_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graphs import Graph
from .rotation import DEFAULT_CLOSURE_CAP, VPath, closure
from .weights import EXACT_CAP, WeightTable, longest_path_from, vertex_weights


@dataclass(frozen=True)
class PeelLayer:
    """One peeling step. All vertex/edge fields use original input labels;
    ``graph_before`` is the compact current graph with ``orig_ids`` mapping
    its dense ids back to the input graph."""

    index: int
    graph_before: Graph
    orig_ids: tuple[int, ...]
    x: int
    path: tuple[int, ...]
    removed: frozenset[int]
    estar: tuple[tuple[int, int], ...]
    weight_sum_halves: int
    isolated_removed: frozenset[int]


@dataclass(frozen=True)
class PeelTrace:
    n: int
    u: int | None
    layers: tuple[PeelLayer, ...]
    m: int
    layer_sum_halves: int
    bound_halves: int

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "u": self.u,
            "layers": [
                {
                    "i": layer.index,
                    "x": layer.x,
                    "path": list(layer.path),
                    "L": sorted(layer.removed),
                    "estar": [list(e) for e in layer.estar],
                    "weight_sum_halves": layer.weight_sum_halves,
                    "isolated": sorted(layer.isolated_removed),
                }
                for layer in self.layers
            ],
            "totals": {
                "m": self.m,
                "layer_sum_halves": self.layer_sum_halves,
                "bound_halves": self.bound_halves,
            },
        }


def _argmax_weight(c: tuple[int, ...], eligible: list[int]) -> int:
    best = max(c[v] for v in eligible)
    return min(v for v in eligible if c[v] == best)


def peel(
    g: Graph,
    max_n: int = EXACT_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> PeelTrace:
    """Run the peeling loop to exhaustion and return the full trace.

    The start vertex u is the maximum-weight vertex (smallest id on ties)
    among non-isolated vertices when the graph has edges; initial isolated
    vertices contribute no edges and are swept at the first layer boundary.
    """
    wt = vertex_weights(g, max_n)
    m = g.edge_count()
    if g.n == 0:
        return PeelTrace(0, None, (), 0, 0, 0)
    eligible = [v for v in range(g.n) if g.adj[v]] or list(range(g.n))
    u = _argmax_weight(wt.c, eligible)
    bound_halves = sum(wt.c) - wt.c[u]

    layers: list[PeelLayer] = []
    cur = g
    ids = tuple(range(g.n))
    index = 0
    x = u
    while cur.edge_count() > 0:
        cw = vertex_weights(cur, max_n)
        pos = {orig: comp for comp, orig in enumerate(ids)}
        if x in pos:
            xc = pos[x]
        else:
            xc = _argmax_weight(cw.c, [v for v in range(cur.n) if cur.adj[v]])
            x = ids[xc]
        pv = longest_path_from(cur, xc, max_n)
        cl = closure(cur, pv, closure_cap)
        removed_c = sorted(cl.Lstar)
        removed_mask = sum(1 << v for v in removed_c)
        weight_sum = sum(cw.c[v] for v in removed_c)
        estar = tuple(
            sorted(
                tuple(sorted((ids[a], ids[b])))
                for a, b in cur.edges()
                if (removed_mask >> a) & 1 or (removed_mask >> b) & 1
            )
        )
        stripped, keep1 = cur.delete_vertices(removed_c)
        ids1 = tuple(ids[k] for k in keep1)
        nxt, keep2 = stripped.remove_isolated()
        ids2 = tuple(ids1[k] for k in keep2)
        layers.append(
            PeelLayer(
                index=index,
                graph_before=cur,
                orig_ids=ids,
                x=x,
                path=tuple(ids[v] for v in pv.seq),
                removed=frozenset(ids[v] for v in removed_c),
                estar=estar,
                weight_sum_halves=weight_sum,
                isolated_removed=frozenset(ids1) - frozenset(ids2),
            )
        )
        cur, ids = nxt, ids2
        index += 1

    return PeelTrace(
        n=g.n,
        u=u,
        layers=tuple(layers),
        m=m,
        layer_sum_halves=sum(layer.weight_sum_halves for layer in layers),
        bound_halves=bound_halves,
    )


@dataclass(frozen=True)
class PeelCheck:
    name: str
    ok: bool
    slack_halves: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class PeelReport:
    checks: tuple[PeelCheck, ...]
    ok: bool
    equality_attained: bool
    equality_diagnosed: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "equality_attained": self.equality_attained,
            "equality_diagnosed": self.equality_diagnosed,
            "checks": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "slack_halves": c.slack_halves,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def _layer_weights(layer: PeelLayer, max_n: int) -> dict[int, int]:
    cw = vertex_weights(layer.graph_before, max_n)
    return {layer.orig_ids[v]: cw.c[v] for v in range(layer.graph_before.n)}


def verify_certificate(
    tr: PeelTrace, g: Graph, wt: WeightTable | None = None, max_n: int = EXACT_CAP
) -> PeelReport:
    """Re-check every certified inequality of a trace against its graph.

    Checks: (a) the E*(L_i) sets partition E(G); (b) per layer,
    |E*(L_i)| <= weight_sum/2; (c) per layer, removed weights never exceed
    the original weights; (d) u is never removed in a layer; (e) the chain
    2m <= sum of layer sums <= sum c(v) - c(u), all in half-units.
    """
    if tr.n != g.n or tr.m != g.edge_count():
        raise ValueError("trace does not match the graph it claims to certify")
    wt = wt or vertex_weights(g, max_n)
    checks: list[PeelCheck] = []

    all_edges = set(g.edges())
    seen_edges: set[tuple[int, int]] = set()
    disjoint = True
    for layer in tr.layers:
        layer_edges = set(layer.estar)
        if layer_edges & seen_edges:
            disjoint = False
        seen_edges |= layer_edges
    partition_ok = disjoint and seen_edges == all_edges
    checks.append(
        PeelCheck(
            "edge_partition",
            partition_ok,
            None,
            f"{len(seen_edges)} edges over {len(tr.layers)} layers, m={tr.m}",
        )
    )

    layer_ok = True
    tight_layers = True
    for layer in tr.layers:
        slack = layer.weight_sum_halves - 2 * len(layer.estar)
        if slack < 0:
            layer_ok = False
        if slack != 0:
            tight_layers = False
    checks.append(
        PeelCheck(
            "layer_bound",
            layer_ok,
            tr.layer_sum_halves - 2 * tr.m,
            "per-layer 2|E*(L_i)| <= weight sum",
        )
    )

    monotone = True
    preserved = True
    for layer in tr.layers:
        cw = _layer_weights(layer, max_n)
        for v in layer.removed:
            if cw[v] > wt.c[v]:
                monotone = False
            if cw[v] != wt.c[v]:
                preserved = False
    checks.append(PeelCheck("weight_monotone", monotone, None, "c_i(v) <= c(v)"))

    removed_all: set[int] = set()
    for layer in tr.layers:
        removed_all |= layer.removed
    start_ok = tr.u not in removed_all
    checks.append(PeelCheck("start_excluded", start_ok, None, f"u={tr.u}"))

    chain_ok = 2 * tr.m <= tr.layer_sum_halves <= tr.bound_halves
    checks.append(
        PeelCheck(
            "chain",
            chain_ok,
            tr.bound_halves - 2 * tr.m,
            "2m <= layer sums <= global bound (half-units)",
        )
    )

    cover = removed_all == set(range(g.n)) - {tr.u} if g.n else True
    return PeelReport(
        checks=tuple(checks),
        ok=all(c.ok for c in checks),
        equality_attained=2 * tr.m == tr.bound_halves,
        equality_diagnosed=tight_layers and preserved and cover,
    )


@dataclass(frozen=True)
class EqualityConditions:
    """The three tightness conditions along a trace: per-terminal weight and
    degree identities in every layer closure, full coverage of V minus u,
    and weight preservation for all surviving non-u vertices."""

    weight_identity: bool   # c_i(v) = |L| + |S_v| for every terminal, every layer
    degree_identity: bool   # d_i(v) = |L| for every terminal, every layer
    cover: bool             # union of L_i = V minus u
    weights_preserved: bool # c_i(v) = c(v) for surviving v != u, every layer

    @property
    def all_hold(self) -> bool:
        return (
            self.weight_identity
            and self.degree_identity
            and self.cover
            and self.weights_preserved
        )


def equality_conditions(
    tr: PeelTrace,
    g: Graph,
    max_n: int = EXACT_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> EqualityConditions:
    """Evaluate the equality conditions on a finished trace by rebuilding
    each layer's closure from its recorded start path."""
    wt = vertex_weights(g, max_n)
    weight_identity = True
    degree_identity = True
    weights_preserved = True
    removed_all: set[int] = set()

    for layer in tr.layers:
        cur = layer.graph_before
        pos = {orig: comp for comp, orig in enumerate(layer.orig_ids)}
        cw = vertex_weights(cur, max_n)
        pv = VPath(tuple(pos[v] for v in layer.path))
        cl = closure(cur, pv, closure_cap)
        nl = len(cl.L)
        for v in cl.Lstar:
            if cw.c[v] != nl + len(cl.S[v]):
                weight_identity = False
            if cur.degree(v) != nl:
                degree_identity = False
        for v in range(cur.n):
            orig = layer.orig_ids[v]
            if orig != tr.u and cw.c[v] != wt.c[orig]:
                weights_preserved = False
        removed_all |= layer.removed

    cover = removed_all == set(range(g.n)) - {tr.u} if g.n else True
    return EqualityConditions(weight_identity, degree_identity, cover, weights_preserved)
