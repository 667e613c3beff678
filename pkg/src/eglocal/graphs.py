"""Immutable bitset graphs and graph6 encoding.

Vertices are dense integers 0..n-1 and each adjacency row is a Python int
used as a bitmask, so neighborhood algebra (intersection, component sweeps,
clique tests) is word-parallel. n is capped at 64 so one row fits a machine
word; the exact-search modules impose stricter caps of their own.

Edges are plain ``(u, v)`` tuples with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Graph6Error

MAX_VERTICES = 64

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of v.

    Instances are immutable values: safe to hash, share and send between
    workers. Use :meth:`from_edges` or :func:`parse_graph6` to construct;
    both guarantee a symmetric, loop-free adjacency.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def empty(n: int) -> Graph:
        return Graph(n, (0,) * n)

    # -- elementary queries ------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, ascending lexicographically."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1), offset=u + 1):
                yield (u, v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs ----------------------------------------------------

    def delete_vertices(self, remove: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on V minus ``remove``.

        Returns (subgraph, id_map) where id_map[new] = old, so callers can
        report results in the original graph's labels.
        """
        drop = set(remove)
        for v in drop:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in drop]
        pos = {old: new for new, old in enumerate(keep)}
        adj = [0] * len(keep)
        for new_u, old_u in enumerate(keep):
            row = self.adj[old_u]
            acc = 0
            for old_v in bits(row):
                if old_v in pos:
                    acc |= 1 << pos[old_v]
            adj[new_u] = acc
        return Graph(len(keep), tuple(adj)), tuple(keep)

    def remove_isolated(self) -> tuple[Graph, tuple[int, ...]]:
        """Drop degree-0 vertices; edge set unchanged. Returns (graph, id_map)."""
        return self.delete_vertices(v for v in range(self.n) if self.adj[v] == 0)

    # -- connectivity ------------------------------------------------------

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest member."""
        out = []
        unseen = self.vertex_mask
        while unseen:
            comp = unseen & -unseen
            while True:
                grow = comp
                for v in bits(comp):
                    grow |= self.adj[v]
                if grow == comp:
                    break
                comp = grow
            out.append(comp)
            unseen &= ~comp
        return out

    def connected_components(self) -> list[set[int]]:
        return [set(bits(mask)) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.component_masks()) == 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """True iff all pairs within ``vertices`` are adjacent (vacuous for <=1)."""
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= 1 << v
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True


def bits(mask: int, offset: int = 0) -> Iterator[int]:
    """Indices of set bits of ``mask`` in ascending order, shifted by offset."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1 + offset
        mask ^= low


# -- graph6 ------------------------------------------------------------------
#
# Standard format: every byte is 63 + a 6-bit value. The size header N(n) is
# one byte for n <= 62 and '~' plus three bytes for larger n. The upper
# triangle x(0,1), x(0,2), x(1,2), x(0,3), ... follows, packed MSB-first and
# zero-padded to a byte boundary. One graph per line.


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (no sparse6/digraph6), n <= 64."""
    s = line.rstrip("\r\n")
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ascii character at offset {exc.start}") from None
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid graph6 byte 0x{byte:02x} at offset {off}")

    if data[0] == 126:  # '~': extended size header
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte size header: n exceeds the 64-vertex cap")
        if len(data) < 4:
            raise Graph6Error("truncated extended size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(body)} "
            f"(record offset {body_off})"
        )
    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            value = body[bit // 6] - 63
            if (value >> (5 - bit % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    if nbytes:
        used_in_last = nbits - 6 * (nbytes - 1)
        pad = (body[-1] - 63) & ((1 << (6 - used_in_last)) - 1)
        if pad:
            raise Graph6Error(
                f"nonzero padding bits at offset {body_off + nbytes - 1}"
            )
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 record; inverse of :func:`parse_graph6`."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = 0
                nacc = 0
    if nacc:
        out.append(chr(63 + (acc << (6 - nacc))))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Parse a graph6 stream, yielding (line_number, graph). 1-based lines.

    Blank lines and pure ">>graph6<<" header lines are skipped; parse errors
    propagate with the line number attached to the message.
    """
    for lineno, raw in enumerate(lines, start=1):
        s = raw.rstrip("\r\n")
        if s.startswith(GRAPH6_HEADER):
            s = s[len(GRAPH6_HEADER):]
        if not s:
            continue
        try:
            yield lineno, parse_graph6(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
