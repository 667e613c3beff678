"""Bitmask dynamic-programming kernels for exact path/cycle/clique search.

Each kernel takes the adjacency of a graph with n <= 20 vertices as an
int64 array of neighbor bitmasks. The shared building block is the
covering-path table over vertex subsets:

    f[mask] = bitmask of endpoints e such that some simple path visits
              exactly the vertices of ``mask`` and ends at e.

Every simple path is a covering path of its own vertex set, so maxima over
masks give exact localized weights. A variant table rooted at the minimum
vertex of each mask detects covering cycles, and per-root tables answer
"is there a covering a->b path", which is exactly a cycle through edge ab.

Kernels are numba-compiled (cache=True) because the n = 7 exhaustive runs
evaluate two million graphs; the pure-Python equivalents are kept as the
independent oracles in the test suite, not here.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _popcounts(size):
    pc = np.zeros(size, np.int64)
    for m in range(1, size):
        pc[m] = pc[m >> 1] + (m & 1)
    return pc


@njit(cache=True)
def vertex_weight_tables(adj, n):
    """Per-vertex longest-path length p[v] (edges) and longest-cycle length
    c[v] (vertices, 2 when v is on no cycle)."""
    size = 1 << n
    pc = _popcounts(size)
    f = np.zeros(size, np.int64)  # covering-path endpoints, free start
    g = np.zeros(size, np.int64)  # covering-path endpoints, start = min(mask)
    path_or = np.zeros(n + 1, np.int64)  # OR of path-coverable masks, by size
    cyc_or = np.zeros(n + 1, np.int64)   # OR of cycle-coverable masks, by size
    for mask in range(1, size):
        k = pc[mask]
        if k == 1:
            f[mask] = mask
            g[mask] = mask
            path_or[1] |= mask
            continue
        low = mask & (-mask)
        lowi = 0
        t = low >> 1
        while t:
            t >>= 1
            lowi += 1
        fe = 0
        ge = 0
        for e in range(n):
            b = 1 << e
            if mask & b:
                sub = mask ^ b
                if f[sub] & adj[e]:
                    fe |= b
                if b != low and (g[sub] & adj[e]):
                    ge |= b
        f[mask] = fe
        g[mask] = ge
        if fe:
            path_or[k] |= mask
        if k >= 3 and (ge & adj[lowi]):
            cyc_or[k] |= mask

    p = np.zeros(n, np.int64)
    c = np.full(n, 2, np.int64)
    assigned = 0
    cum = 0
    for k in range(n, 0, -1):
        cum |= path_or[k]
        new = cum & ~assigned
        if new:
            for v in range(n):
                if (new >> v) & 1:
                    p[v] = k - 1
            assigned |= new
    assigned = 0
    cum = 0
    for k in range(n, 2, -1):
        cum |= cyc_or[k]
        new = cum & ~assigned
        if new:
            for v in range(n):
                if (new >> v) & 1:
                    c[v] = k
            assigned |= new
    return p, c


@njit(cache=True)
def cover_end_lengths(adj, n, allowed):
    """out[v] = max #vertices of a simple path inside ``allowed`` ending at v.

    Paths are reversible, so this also answers "longest path starting at v".
    Vertices outside ``allowed`` get 0.
    """
    size = 1 << n
    pc = _popcounts(size)
    f = np.zeros(size, np.int64)
    out = np.zeros(n, np.int64)
    s = 0
    while s != allowed:
        s = (s - allowed) & allowed  # next submask in ascending numeric order
        k = pc[s]
        if k == 1:
            f[s] = s
        else:
            fe = 0
            for e in range(n):
                b = 1 << e
                if s & b and (f[s ^ b] & adj[e]):
                    fe |= b
            f[s] = fe
        ends = f[s]
        for v in range(n):
            if (ends >> v) & 1 and out[v] < k:
                out[v] = k
    return out


@njit(cache=True)
def edge_weight_tables(adj, n):
    """Per-edge tables: K[a,b] max clique order through edge ab, L[a,b] max
    path length (edges) through ab, W[a,b] max cycle length through ab or 2.
    Entries for non-edges are 0."""
    size = 1 << n
    pc = _popcounts(size)
    K = np.zeros((n, n), np.int64)
    L = np.zeros((n, n), np.int64)
    W = np.zeros((n, n), np.int64)
    for a in range(n):
        for b in range(n):
            if a != b and ((adj[a] >> b) & 1):
                K[a, b] = 2
                L[a, b] = 1
                W[a, b] = 2

    # K: sweep all clique masks once (incremental membership test).
    cl = np.zeros(size, np.uint8)
    cl[0] = 1
    for mask in range(1, size):
        low = mask & (-mask)
        lowi = 0
        t = low >> 1
        while t:
            t >>= 1
            lowi += 1
        rest = mask ^ low
        if cl[rest] and (rest & ~adj[lowi]) == 0:
            cl[mask] = 1
            sz = pc[mask]
            if sz >= 2:
                for a in range(n):
                    if (mask >> a) & 1:
                        for b in range(a + 1, n):
                            if ((mask >> b) & 1) and K[a, b] < sz:
                                K[a, b] = sz
                                K[b, a] = sz

    # W: covering a->b paths from per-root tables; closing edge ba gives the
    # unique decomposition of a cycle through edge ab.
    h = np.zeros(size, np.int64)
    for a in range(n):
        if adj[a] == 0:
            continue
        abit = 1 << a
        for mask in range(1, size):
            if not (mask & abit):
                continue
            if mask == abit:
                h[mask] = abit
                continue
            he = 0
            for e in range(n):
                b = 1 << e
                if e != a and (mask & b) and (h[mask ^ b] & adj[e]):
                    he |= b
            h[mask] = he
            if pc[mask] >= 3:
                ends = he & adj[a]
                if ends:
                    sz = pc[mask]
                    for b in range(n):
                        if (ends >> b) & 1 and W[a, b] < sz:
                            W[a, b] = sz
                            W[b, a] = sz

    # L: split a path through edge ab at that edge into two disjoint covering
    # paths ending at a resp. b; maximize |Ma| + |Mb| - 1 over the split.
    f = np.zeros(size, np.int64)
    for mask in range(1, size):
        if pc[mask] == 1:
            f[mask] = mask
            continue
        fe = 0
        for e in range(n):
            b = 1 << e
            if mask & b and (f[mask ^ b] & adj[e]):
                fe |= b
        f[mask] = fe
    best = np.zeros(size, np.int64)
    full = size - 1
    for b in range(n):
        if adj[b] == 0:
            continue
        bbit = 1 << b
        for mask in range(size):
            m = pc[mask] if ((f[mask] >> b) & 1) else 0
            for e in range(n):
                eb = 1 << e
                if mask & eb:
                    sub = best[mask ^ eb]
                    if sub > m:
                        m = sub
            best[mask] = m
        for a in range(b):
            if not ((adj[b] >> a) & 1):
                continue
            la = L[a, b]
            for mask in range(1, size):
                if mask & bbit:
                    continue
                if (f[mask] >> a) & 1:
                    cand = pc[mask] + best[full ^ mask] - 1
                    if cand > la:
                        la = cand
            L[a, b] = la
            L[b, a] = la
    return K, L, W
