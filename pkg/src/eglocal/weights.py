"""Exact localized weights.

Per-vertex weights: p(v) is the length (in edges) of the longest path
containing v, c(v) the length of the longest cycle containing v with the
convention c(v) = 2 for vertices on no cycle (isolated vertices included).
The circumference is max_v c(v), so it is 2 for nonempty acyclic graphs.

Per-edge weights: k(e) is the largest clique order through e, l(e) the
longest path length through e, w(e) the longest cycle length through e
(again 2 when e lies on no cycle).

Everything is computed exactly by bitmask DP; inputs above the exact-search
cap are refused rather than approximated, since downstream equality tests
would be poisoned by any heuristic. Bound values derived from these weights
are carried in half-units (twice the mathematical value) throughout the
package so equality checks stay in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._dp import cover_end_lengths, edge_weight_tables, vertex_weight_tables
from .errors import SizeCapError
from .graphs import Graph
from .rotation import VPath

EXACT_CAP = 20


@dataclass(frozen=True)
class WeightTable:
    """Per-vertex weights plus the derived circumference (circ = max c)."""

    p: tuple[int, ...]
    c: tuple[int, ...]
    circ: int


@dataclass(frozen=True)
class EdgeWeightTable:
    """Per-edge weights keyed by (u, v) with u < v."""

    k: dict[tuple[int, int], int]
    l: dict[tuple[int, int], int]
    w: dict[tuple[int, int], int]


def _require_cap(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise SizeCapError(
            f"exact search refused: n={g.n} exceeds the cap of {max_n} vertices"
        )


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.int64) if g.n else np.zeros(0, dtype=np.int64)


@lru_cache(maxsize=4096)
def _vertex_tables(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p, c = vertex_weight_tables(_adj_array(g), g.n)
    return tuple(int(x) for x in p), tuple(int(x) for x in c)


def vertex_weights(g: Graph, max_n: int = EXACT_CAP) -> WeightTable:
    """Exact p(v), c(v) for all vertices; circ filled from max c.

    For n = 0 the table is empty and circ defaults to the acyclic
    convention value 2 (see :func:`circumference` for the strict query).
    """
    _require_cap(g, max_n)
    if g.n == 0:
        return WeightTable((), (), 2)
    p, c = _vertex_tables(g)
    return WeightTable(p, c, max(c))


def circumference(g: Graph, max_n: int = EXACT_CAP) -> int:
    """Length of the longest cycle, or 2 if the graph is acyclic (n >= 1)."""
    if g.n == 0:
        raise ValueError("circumference is undefined for the empty graph")
    return vertex_weights(g, max_n).circ


def edge_weights(g: Graph, max_n: int = EXACT_CAP) -> EdgeWeightTable:
    """Exact k(e), l(e), w(e) for every edge."""
    _require_cap(g, max_n)
    k: dict[tuple[int, int], int] = {}
    l: dict[tuple[int, int], int] = {}
    w: dict[tuple[int, int], int] = {}
    if g.edge_count():
        K, L, W = edge_weight_tables(_adj_array(g), g.n)
        for u, v in g.edges():
            k[(u, v)] = int(K[u, v])
            l[(u, v)] = int(L[u, v])
            w[(u, v)] = int(W[u, v])
    return EdgeWeightTable(k, l, w)


def longest_path_length_from(g: Graph, v0: int, max_n: int = EXACT_CAP) -> int:
    """Length in edges of a longest path starting at v0."""
    _require_cap(g, max_n)
    g._check_vertex(v0)
    ends = cover_end_lengths(_adj_array(g), g.n, g.vertex_mask)
    return int(ends[v0]) - 1


def longest_path_from(g: Graph, v0: int, max_n: int = EXACT_CAP) -> VPath:
    """A maximum-length path starting at v0; among maxima, the
    lexicographically smallest vertex sequence.

    The witness is grown greedily: a candidate next vertex is kept iff the
    remaining graph still admits a completion to the known optimum, which
    the covering-path DP answers exactly.
    """
    _require_cap(g, max_n)
    g._check_vertex(v0)
    arr = _adj_array(g)
    target = int(cover_end_lengths(arr, g.n, g.vertex_mask)[v0])
    seq = [v0]
    free = g.vertex_mask & ~(1 << v0)
    while len(seq) < target:
        need = target - len(seq)
        reach = cover_end_lengths(arr, g.n, free)
        cand = g.adj[seq[-1]] & free
        chosen = -1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            if int(reach[v]) >= need:
                chosen = v
                break
            cand ^= low
        if chosen < 0:  # unreachable: the DP guarantees a completion exists
            raise RuntimeError("longest-path witness extraction lost feasibility")
        seq.append(chosen)
        free &= ~(1 << chosen)
    return VPath(tuple(seq))
