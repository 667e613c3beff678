"""Rotation machinery for longest v0-paths.

A *simple transform* of a path v0..vk rewires a chord from the terminal:
if vk is adjacent to vj with j <= k-2, then v0..vj, vk, vk-1, .., vj+1 is
again a path on the same vertex set. The *transform closure* is everything
reachable from a longest v0-path by such rotations. From the closure we
derive:

  L      terminal vertices over all closure paths
  L0     off-path vertices whose neighborhood equals that of some L vertex
  L*     L union L0, with a designated twin in L for each L0 vertex
  S_v    neighbors of a terminal v outside L
  pivot  the vertex at distance c(v) - 1 before terminal v, splitting a
         path into Front*/Back* segments

The closure is enumerated breadth-first over canonical vertex sequences
with a visited set. That is exponential in the worst case, so a hard cap
guards it: exceeding the cap raises, never silently truncates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import ClosureCapError
from .graphs import Graph, bits

DEFAULT_CLOSURE_CAP = 1_000_000


@dataclass(frozen=True)
class VPath:
    """A simple path, read from its origin towards its terminal vertex."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.seq:
            raise ValueError("a path has at least one vertex")
        if len(set(self.seq)) != len(self.seq):
            raise ValueError(f"repeated vertex in path {self.seq}")

    @property
    def origin(self) -> int:
        return self.seq[0]

    @property
    def terminal(self) -> int:
        return self.seq[-1]

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.seq) - 1

    def index(self, x: int) -> int:
        return self.seq.index(x)

    def dist(self, x: int, y: int) -> int:
        """Edges between x and y along the path."""
        return abs(self.index(x) - self.index(y))

    def pred(self, x: int, i: int) -> int:
        """The vertex i steps before x (towards the origin)."""
        idx = self.index(x) - i
        if idx < 0:
            raise ValueError(f"no predecessor {i} steps before {x}")
        return self.seq[idx]

    def succ(self, x: int, j: int) -> int:
        """The vertex j steps after x (towards the terminal)."""
        idx = self.index(x) + j
        if idx >= len(self.seq):
            raise ValueError(f"no successor {j} steps after {x}")
        return self.seq[idx]

    def validate_in(self, g: Graph) -> None:
        for a, b in zip(self.seq, self.seq[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"{a} and {b} are consecutive but not adjacent")


@dataclass(frozen=True)
class Segments:
    """Front/Back split of a terminal path around its pivot vertex.

    front_star ends at the pivot, back_star starts at it; front and back
    exclude the pivot.
    """

    pivot: int
    front: tuple[int, ...]
    front_star: tuple[int, ...]
    back: tuple[int, ...]
    back_star: tuple[int, ...]


@dataclass(frozen=True)
class Closure:
    """The full rotation-closure bundle of one longest origin-path.

    ``paths`` holds every reachable path as a canonical (sorted) tuple of
    VPaths; twin/pivot/S are keyed by terminal vertex. ``min_weight`` is
    the smallest cycle weight over L*, and ``prefix_len`` the number of
    leading positions all closure paths share.
    """

    graph: Graph
    origin_path: VPath
    paths: tuple[VPath, ...]
    L: frozenset[int]
    L0: frozenset[int]
    Lstar: frozenset[int]
    twin: dict[int, int]
    pivot: dict[int, int]
    S: dict[int, frozenset[int]]
    min_weight: int
    prefix_len: int
    cycle_weight: dict[int, int] = field(repr=False)


def simple_transforms(g: Graph, p: VPath) -> list[VPath]:
    """All simple transforms of p, ordered by ascending chord position j."""
    seq = p.seq
    k = len(seq) - 1
    if k < 1:
        return []
    adj_t = g.adj[seq[-1]]
    out = []
    for j in range(k - 1):
        if (adj_t >> seq[j]) & 1:
            out.append(VPath(seq[: j + 1] + seq[:j:-1]))
    return out


def closure(g: Graph, p: VPath, cap: int = DEFAULT_CLOSURE_CAP) -> Closure:
    """Breadth-first fixpoint of simple transforms of a longest origin-path.

    Raises ValueError if p is not a longest path from its origin, and
    ClosureCapError if more than ``cap`` paths are reachable.
    """
    from .weights import longest_path_length_from, vertex_weights

    p.validate_in(g)
    if p.length != longest_path_length_from(g, p.origin):
        raise ValueError(
            f"path of length {p.length} from {p.origin} is not a longest origin-path"
        )

    start = p.seq
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        adj_t = g.adj[cur[-1]]
        for j in range(len(cur) - 2):
            if (adj_t >> cur[j]) & 1:
                nxt = cur[: j + 1] + cur[:j:-1]
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise ClosureCapError(
                            f"transform closure exceeded the cap of {cap} paths"
                        )
                    seen.add(nxt)
                    queue.append(nxt)

    on_path = set(start)
    L = frozenset(s[-1] for s in seen)
    twin: dict[int, int] = {}
    for v in range(g.n):
        if v in on_path:
            continue
        mates = [l for l in L if g.adj[l] == g.adj[v]]
        if mates:
            twin[v] = min(mates)
    L0 = frozenset(twin)
    Lstar = L | L0

    wt = vertex_weights(g)
    cycle_weight = {v: wt.c[v] for v in Lstar}
    min_weight = min(cycle_weight.values())
    prefix_len = len(start) - min_weight + 1

    by_terminal: dict[int, list[tuple[int, ...]]] = {}
    for s in seen:
        by_terminal.setdefault(s[-1], []).append(s)

    pivot: dict[int, int] = {}
    S: dict[int, frozenset[int]] = {}
    for v in sorted(Lstar):
        base = v if v in L else twin[v]
        canonical = min(by_terminal[base])
        if v not in L:
            canonical = canonical[:-1] + (v,)
        back_steps = cycle_weight[v] - 1
        if back_steps <= len(canonical) - 1:
            pivot[v] = canonical[len(canonical) - 1 - back_steps]
        S[v] = frozenset(bits(g.adj[v])) - L

    return Closure(
        graph=g,
        origin_path=p,
        paths=tuple(VPath(s) for s in sorted(seen)),
        L=L,
        L0=L0,
        Lstar=Lstar,
        twin=twin,
        pivot=pivot,
        S=S,
        min_weight=min_weight,
        prefix_len=prefix_len,
        cycle_weight=cycle_weight,
    )


def transforms_ending_at(cl: Closure, v: int) -> list[VPath]:
    """All closure paths with terminal v; for v in L0, the twin's paths with
    the twin replaced by v. Sorted by sequence."""
    if v not in cl.Lstar:
        raise ValueError(f"vertex {v} is not in L*")
    if v in cl.L:
        return [q for q in cl.paths if q.terminal == v]
    t = cl.twin[v]
    return [VPath(q.seq[:-1] + (v,)) for q in cl.paths if q.terminal == t]


def segments(pv: VPath, v: int, cv: int) -> Segments:
    """Split pv around the pivot Pred(v, cv - 1) of its terminal v."""
    if pv.terminal != v:
        raise ValueError(f"{v} is not the terminal of {pv.seq}")
    back_steps = cv - 1
    if back_steps > pv.length:
        raise ValueError(
            f"path with {pv.length} edges is shorter than c(v)-1 = {back_steps}"
        )
    cut = len(pv.seq) - 1 - back_steps
    return Segments(
        pivot=pv.seq[cut],
        front=pv.seq[:cut],
        front_star=pv.seq[: cut + 1],
        back=pv.seq[cut + 1 :],
        back_star=pv.seq[cut:],
    )


def n_plus(pv: VPath, v: int, g: Graph) -> set[int]:
    """Immediate successors on pv of the neighbors of the terminal v."""
    adj_v = g.adj[v]
    return {
        pv.seq[i + 1]
        for i in range(len(pv.seq) - 1)
        if (adj_v >> pv.seq[i]) & 1
    }


def holes(pv: VPath, v: int, g: Graph, cv: int) -> set[int]:
    """Back* vertices neither adjacent to the terminal nor a successor of
    one of its neighbors."""
    segs = segments(pv, v, cv)
    return set(segs.back_star) - set(bits(g.adj[v])) - n_plus(pv, v, g)


def is_good(cl: Closure, pv: VPath) -> bool:
    """True iff the terminal has no neighbor in the prefix of pv ending at
    Pred(terminal, min_weight). An empty prefix is vacuously good."""
    cut = len(pv.seq) - 1 - cl.min_weight
    if cut < 0:
        return True
    adj_t = cl.graph.adj[pv.terminal]
    return not any((adj_t >> x) & 1 for x in pv.seq[: cut + 1])


def two_branch_at(g: Graph, p: VPath, x: int) -> tuple[int, int] | None:
    """Smallest (t1, t2) with x-t1-t2 a path leaving p, or None."""
    on_path = set(p.seq)
    if x not in on_path:
        raise ValueError(f"vertex {x} is not on the path")
    for t1 in sorted(set(bits(g.adj[x])) - on_path):
        for t2 in sorted(set(bits(g.adj[t1])) - on_path - {t1}):
            return (t1, t2)
    return None
