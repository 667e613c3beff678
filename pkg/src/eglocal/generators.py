"""Deterministic and seeded graph generators for test corpora.

Random generators run on a self-contained splitmix64 PRNG so corpora are
bit-reproducible across platforms and implementations; fixing the seed
fixes the output. Exhaustive enumeration is labeled (all 2^C(n,2) edge
subsets) and intentionally not isomorphism-reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graphs import Graph

_MASK64 = (1 << 64) - 1

ENUMERATION_CAP = 7


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output is the finalizer of
    the new state. Small, well-known, and trivially portable."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


# -- deterministic families ----------------------------------------------


def gen_clique_union(orders: list[int]) -> Graph:
    """Disjoint union of cliques with the given orders (>= 1 each)."""
    if any(o < 1 for o in orders):
        raise ValueError("clique orders must be >= 1")
    n = sum(orders)
    edges = []
    base = 0
    for o in orders:
        edges.extend(combinations(range(base, base + o), 2))
        base += o
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return gen_clique_union([n])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Center 0 with n - 1 leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes differing by
    at most one; vertices are assigned to parts contiguously."""
    if r < 1 or n < 0:
        raise ValueError("turan needs r >= 1 and n >= 0")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]
    ]
    return Graph.from_edges(n, edges)


# -- planned block graphs --------------------------------------------------


@dataclass(frozen=True)
class BlockNode:
    """One planned block: its clique order, the index of its parent node
    (None for the root) and the attachment slot, i.e. which vertex of the
    parent block becomes the shared cut vertex."""

    order: int
    parent: int | None = None
    attach: int | None = None


@dataclass(frozen=True)
class BlockPlan:
    nodes: tuple[BlockNode, ...]

    def __post_init__(self) -> None:
        if not self.nodes:
            raise ValueError("a block plan needs at least one block")
        for i, node in enumerate(self.nodes):
            if node.order < 2:
                raise ValueError(f"block {i}: order must be >= 2")
            if i == 0:
                if node.parent is not None or node.attach is not None:
                    raise ValueError("the root block has no parent")
                continue
            if node.parent is None or not 0 <= node.parent < i:
                raise ValueError(f"block {i}: parent must be an earlier block")
            if node.attach is None or not 0 <= node.attach < self.nodes[node.parent].order:
                raise ValueError(f"block {i}: attach slot out of range")

    def is_parent_dominated(self) -> bool:
        return all(
            node.order <= self.nodes[node.parent].order
            for node in self.nodes[1:]
        )


def gen_block_graph(plan: BlockPlan) -> Graph:
    """Realize a block plan as a graph; each planned clique becomes exactly
    one block, sharing one cut vertex with its parent."""
    vertices_of: list[list[int]] = []
    n = 0
    for node in plan.nodes:
        if node.parent is None:
            vs = list(range(n, n + node.order))
            n += node.order
        else:
            shared = vertices_of[node.parent][node.attach]
            fresh = list(range(n, n + node.order - 1))
            n += node.order - 1
            vs = [shared] + fresh
        vertices_of.append(vs)
    edges = []
    for vs in vertices_of:
        edges.extend(combinations(vs, 2))
    return Graph.from_edges(n, edges)


def gen_parent_dominated(seed: int, n_blocks: int, max_order: int) -> Graph:
    """Seeded random parent-dominated block graph: every block's order is
    drawn between 2 and its parent's order, so no rooting ever increases."""
    if n_blocks < 1 or max_order < 2:
        raise ValueError("need n_blocks >= 1 and max_order >= 2")
    rng = SplitMix64(seed)
    nodes = [BlockNode(order=2 + rng.below(max_order - 1))]
    for _ in range(n_blocks - 1):
        parent = rng.below(len(nodes))
        order = 2 + rng.below(nodes[parent].order - 1)
        attach = rng.below(nodes[parent].order)
        nodes.append(BlockNode(order=order, parent=parent, attach=attach))
    return gen_block_graph(BlockPlan(tuple(nodes)))


# -- random graphs ----------------------------------------------------------


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair (u, v), u < v in row-major order, is an edge iff
    the next PRNG draw falls below floor(p * 2^64)."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("gen_gnp needs n >= 0 and p in [0, 1]")
    rng = SplitMix64(seed)
    threshold = int(p * (1 << 64))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() < threshold:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def gen_gnm(n: int, m: int, seed: int) -> Graph:
    """G(n, m): a Fisher-Yates shuffle of all pairs, keeping the first m."""
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"m={m} outside 0..{len(pairs)} for n={n}")
    rng = SplitMix64(seed)
    rng.shuffle(pairs)
    return Graph.from_edges(n, pairs[:m])


# -- exhaustive enumeration --------------------------------------------------


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_edge_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph:
    adj = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m ^= low
    return Graph(n, tuple(adj))


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices, ascending edge-mask order. Pair i
    of the mask is the i-th element of combinations(range(n), 2)."""
    if not 0 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"labeled enumeration capped at n <= {ENUMERATION_CAP}; "
            "ingest larger corpora from graph6 files instead"
        )
    pairs = list(combinations(range(n), 2))
    for mask in range(labeled_graph_count(n)):
        yield graph_from_edge_mask(n, mask, pairs)
