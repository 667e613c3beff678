"""Vertex and edge weight tables against brute-force oracles."""

import pytest

from eglocal import (
    Graph,
    SizeCapError,
    circumference,
    complete_graph,
    edge_weights,
    enumerate_labeled,
    gen_gnp,
    longest_path_from,
    vertex_weights,
)
from oracles import (
    c_oracle,
    circumference_oracle,
    k_oracle,
    l_oracle,
    longest_path_from_oracle,
    p_oracle,
    w_oracle,
)


def test_fixture_vertex_weights(paw, diamond, chain33, star3, c4):
    wt = vertex_weights(paw)
    assert wt.p == (3, 3, 3, 3) and wt.c == (3, 3, 3, 2) and wt.circ == 3
    wt = vertex_weights(diamond)
    assert wt.p == (3, 3, 3, 3) and wt.c == (4, 4, 4, 4) and wt.circ == 4
    for n in (3, 4, 5, 6):
        wt = vertex_weights(complete_graph(n))
        assert wt.p == (n - 1,) * n and wt.c == (n,) * n
    assert circumference(c4) == 4
    assert circumference(star3) == 2
    assert circumference(chain33) == 3
    assert vertex_weights(chain33).p == (5,) * 6


def test_isolated_and_empty():
    wt = vertex_weights(Graph.empty(3))
    assert wt.p == (0, 0, 0) and wt.c == (2, 2, 2) and wt.circ == 2
    assert vertex_weights(Graph.empty(0)).p == ()
    with pytest.raises(ValueError):
        circumference(Graph.empty(0))


def test_fixture_edge_weights(paw, chain33, k4):
    ew = edge_weights(paw)
    assert ew.k == {(0, 1): 3, (0, 2): 3, (0, 3): 2, (1, 2): 3}
    assert ew.l == {(0, 1): 3, (0, 2): 3, (0, 3): 3, (1, 2): 3}
    assert ew.w == {(0, 1): 3, (0, 2): 3, (0, 3): 2, (1, 2): 3}
    ew = edge_weights(chain33)
    assert ew.w[(2, 3)] == 2
    assert all(w == 3 for e, w in ew.w.items() if e != (2, 3))
    ew = edge_weights(k4)
    assert set(ew.k.values()) == {4}
    assert set(ew.l.values()) == {3}
    assert set(ew.w.values()) == {4}


def test_vertex_weights_match_oracle_exhaustive():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            wt = vertex_weights(g)
            for v in range(n):
                assert wt.p[v] == p_oracle(g, v)
                assert wt.c[v] == c_oracle(g, v)
            assert wt.circ == circumference_oracle(g)


def test_edge_weights_match_oracle_exhaustive():
    for n in range(2, 6):
        for g in enumerate_labeled(n):
            ew = edge_weights(g)
            for u, v in g.edges():
                assert ew.k[(u, v)] == k_oracle(g, u, v)
                assert ew.l[(u, v)] == l_oracle(g, u, v)
                assert ew.w[(u, v)] == w_oracle(g, u, v)


def test_weights_match_oracle_random_n8():
    for seed in range(6):
        g = gen_gnp(8, 0.4, seed)
        wt = vertex_weights(g)
        ew = edge_weights(g)
        for v in range(8):
            assert wt.p[v] == p_oracle(g, v)
            assert wt.c[v] == c_oracle(g, v)
        for u, v in g.edges():
            assert ew.k[(u, v)] == k_oracle(g, u, v)
            assert ew.l[(u, v)] == l_oracle(g, u, v)
            assert ew.w[(u, v)] == w_oracle(g, u, v)


def test_weight_relations_exhaustive():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            wt = vertex_weights(g)
            ew = edge_weights(g)
            for v in range(n):
                assert wt.c[v] == 2 or 3 <= wt.c[v] <= n
                if wt.c[v] >= 3:
                    assert wt.p[v] >= wt.c[v] - 1
            for (a, b), l in ew.l.items():
                assert 1 <= l <= min(wt.p[a], wt.p[b])
            for (a, b), w in ew.w.items():
                if w >= 3:
                    assert w <= min(wt.c[a], wt.c[b])
                assert ew.k[(a, b)] == 2 or ew.k[(a, b)] <= w


def test_monotone_under_deletion():
    for seed in range(5):
        g = gen_gnp(7, 0.5, seed)
        wt = vertex_weights(g)
        sub, ids = g.delete_vertices({seed % 7})
        ws = vertex_weights(sub)
        for new, old in enumerate(ids):
            assert ws.p[new] <= wt.p[old]
            assert ws.c[new] <= wt.c[old]


def test_longest_path_from_fixtures(paw, k3):
    assert longest_path_from(paw, 3).seq == (3, 0, 1, 2)
    assert longest_path_from(k3, 0).seq == (0, 1, 2)
    g = Graph.from_edges(3, [(1, 2)])
    assert longest_path_from(g, 0).seq == (0,)


def test_longest_path_from_matches_oracle():
    for n in range(1, 5):
        for g in enumerate_labeled(n):
            for v0 in range(n):
                assert longest_path_from(g, v0).seq == longest_path_from_oracle(g, v0)
    for seed in range(8):
        g = gen_gnp(6, 0.5, seed)
        for v0 in range(6):
            assert longest_path_from(g, v0).seq == longest_path_from_oracle(g, v0)


def test_cap_refused():
    g = Graph.empty(21)
    with pytest.raises(SizeCapError):
        vertex_weights(g)
    with pytest.raises(SizeCapError):
        longest_path_from(g, 0)
    assert vertex_weights(g, max_n=21).p[0] == 0
