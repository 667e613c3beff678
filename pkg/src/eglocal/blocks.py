"""Biconnected decomposition and parent-dominated block-graph recognition.

Blocks (maximal subgraphs without cut vertices) come from the standard DFS
lowpoint algorithm, run iteratively. A *block graph* is a connected graph
whose blocks are all cliques. It is *parent-dominated* when the block
structure, rooted at some block of maximum order, never increases in order
from parent to child.

Parent relations are taken from the block-cut tree, not from the raw
"blocks adjacent iff they intersect" relation, which stops being a tree as
soon as three blocks share a cut vertex. A BFS over intersecting blocks
from the root still assigns the block-cut-tree parent, because all blocks
through one cut vertex are pairwise intersecting and exactly one of them is
nearer the root.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_adjacency: tuple[frozenset[int], ...]
    is_block_graph: bool
    is_parent_dominated: bool
    witness_root: int | None
    parent: dict[int, int]

    def orders(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def order_profile(d: BlockDecomposition) -> tuple[int, ...]:
    """Multiset of block orders, ascending."""
    return tuple(sorted(d.orders()))


def _biconnected_blocks(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Vertex sets of all blocks plus the cut vertices (iterative lowpoint DFS).

    Isolated vertices become singleton blocks so blocks cover all vertices;
    every edge lies in exactly one block either way.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            blocks.append(frozenset((root,)))
            disc[root] = timer
            timer += 1
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, list(bits(g.adj[root])), 0)]
        while stack:
            v, parent, nbrs, idx = stack.pop()
            advanced = False
            while idx < len(nbrs):
                w = nbrs[idx]
                idx += 1
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((v, parent, nbrs, idx))
                    stack.append((w, v, list(bits(g.adj[w])), 0))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            # v is fully explored; fold into its parent frame
            if parent != -1:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    members: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(members))
                    if parent == root:
                        root_children += 1
                    else:
                        cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return blocks, cuts


def decompose(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices per component, with block-graph and
    parent-domination verdicts filled in."""
    raw_blocks, cuts = _biconnected_blocks(g)
    blocks = tuple(tuple(sorted(b)) for b in sorted(raw_blocks, key=sorted))
    masks = [sum(1 << v for v in b) for b in blocks]
    adjacency = tuple(
        frozenset(j for j in range(len(blocks)) if j != i and masks[i] & masks[j])
        for i in range(len(blocks))
    )

    is_bg = (
        g.n >= 1
        and g.is_connected()
        and all(g.is_clique(b) for b in blocks)
    )

    pd = False
    witness: int | None = None
    parent: dict[int, int] = {}
    if is_bg:
        pd, witness, parent = _parent_dominated_rooting(blocks, adjacency)

    return BlockDecomposition(
        n=g.n,
        blocks=blocks,
        cut_vertices=frozenset(cuts),
        block_adjacency=adjacency,
        is_block_graph=is_bg,
        is_parent_dominated=pd,
        witness_root=witness,
        parent=parent,
    )


def _parent_dominated_rooting(
    blocks: tuple[tuple[int, ...], ...],
    adjacency: tuple[frozenset[int], ...],
) -> tuple[bool, int | None, dict[int, int]]:
    """Try every maximum-order block as root; succeed when child orders never
    exceed their parent's along the block-cut tree."""
    orders = [len(b) for b in blocks]
    top = max(orders)
    for r in (i for i, o in enumerate(orders) if o == top):
        parent: dict[int, int] = {}
        seen = {r}
        frontier = [r]
        ok = True
        while frontier and ok:
            nxt = []
            for b in frontier:
                for ch in sorted(adjacency[b] - seen):
                    if orders[ch] > orders[b]:
                        ok = False
                        break
                    parent[ch] = b
                    seen.add(ch)
                    nxt.append(ch)
                if not ok:
                    break
            frontier = nxt
        if ok and len(seen) == len(blocks):
            return True, r, parent
    return False, None, {}


def is_parent_dominated(d: BlockDecomposition) -> bool:
    return d.is_parent_dominated


def block_graph_flags(g: Graph) -> tuple[bool, bool]:
    """(is_block_graph, is_parent_dominated) without the full decomposition
    object; the enumeration scans call this once per graph."""
    if g.n == 0 or len(g.component_masks()) != 1:
        return False, False
    raw, _ = _biconnected_blocks(g)
    masks = [sum(1 << v for v in b) for b in raw]
    for mask in masks:
        mm = mask
        while mm:
            low = mm & -mm
            v = low.bit_length() - 1
            mm ^= low
            if (mask ^ low) & ~g.adj[v]:
                return False, False
    orders = [m.bit_count() for m in masks]
    top = max(orders)
    nb = len(masks)
    adjb = [
        [j for j in range(nb) if j != i and masks[i] & masks[j]] for i in range(nb)
    ]
    for r in range(nb):
        if orders[r] != top:
            continue
        ok = True
        seen = 1 << r
        frontier = [r]
        while frontier and ok:
            nxt = []
            for b in frontier:
                for ch in adjb[b]:
                    if not (seen >> ch) & 1:
                        if orders[ch] > orders[b]:
                            ok = False
                            break
                        seen |= 1 << ch
                        nxt.append(ch)
                if not ok:
                    break
            frontier = nxt
        if ok:
            return True, True
    return True, False
