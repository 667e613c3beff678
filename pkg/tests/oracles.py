"""Brute-force oracles, independent of the package's DP kernels.

Everything here enumerates plainly over neighbor sets with recursion;
nothing shares code with the bitmask tables it cross-checks. Fine for
n <= 8 or so, which is all the tests need.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from eglocal import Graph


def all_paths_from(g: Graph, v0: int) -> Iterator[tuple[int, ...]]:
    """Every simple path starting at v0, including the single vertex."""

    def rec(seq: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(seq)
        for w in sorted(g.neighbors(seq[-1])):
            if w not in used:
                seq.append(w)
                used.add(w)
                yield from rec(seq, used)
                used.discard(w)
                seq.pop()

    yield from rec([v0], {v0})


def all_paths(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every simple path once, canonicalized by seq <= reversed(seq)."""
    for v0 in range(g.n):
        for seq in all_paths_from(g, v0):
            if seq <= seq[::-1]:
                yield seq


def all_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every cycle once, as a vertex tuple starting at its minimum vertex,
    oriented so the second vertex is smaller than the last."""
    for s in range(g.n):

        def rec(seq: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
            for w in sorted(g.neighbors(seq[-1])):
                if w == s:
                    if len(seq) >= 3 and seq[1] < seq[-1]:
                        yield tuple(seq)
                elif w > s and w not in used:
                    seq.append(w)
                    used.add(w)
                    yield from rec(seq, used)
                    used.discard(w)
                    seq.pop()

        yield from rec([s], {s})


def p_oracle(g: Graph, v: int) -> int:
    return max((len(seq) - 1 for seq in all_paths(g) if v in seq), default=0)


def c_oracle(g: Graph, v: int) -> int:
    return max((len(cyc) for cyc in all_cycles(g) if v in cyc), default=2)


def circumference_oracle(g: Graph) -> int:
    return max((len(cyc) for cyc in all_cycles(g)), default=2)


def k_oracle(g: Graph, u: int, v: int) -> int:
    best = 2
    for size in range(3, g.n + 1):
        for extra in combinations(sorted(set(range(g.n)) - {u, v}), size - 2):
            if g.is_clique({u, v, *extra}):
                best = max(best, size)
    return best


def _uses_edge(seq: tuple[int, ...], u: int, v: int, cyclic: bool) -> bool:
    pairs = list(zip(seq, seq[1:]))
    if cyclic:
        pairs.append((seq[-1], seq[0]))
    return any({a, b} == {u, v} for a, b in pairs)


def l_oracle(g: Graph, u: int, v: int) -> int:
    return max(
        (len(seq) - 1 for seq in all_paths(g) if _uses_edge(seq, u, v, False)),
        default=0,
    )


def w_oracle(g: Graph, u: int, v: int) -> int:
    return max(
        (len(cyc) for cyc in all_cycles(g) if _uses_edge(cyc, u, v, True)),
        default=2,
    )


def longest_path_from_oracle(g: Graph, v0: int) -> tuple[int, ...]:
    """Lexicographically smallest maximum path starting at v0."""
    paths = list(all_paths_from(g, v0))
    best = max(len(seq) for seq in paths)
    return min(seq for seq in paths if len(seq) == best)
