"""Simple transforms, closures, segments and the derived endpoint sets."""

import pytest

from eglocal import (
    ClosureCapError,
    Graph,
    VPath,
    closure,
    complete_graph,
    enumerate_labeled,
    gen_gnp,
    holes,
    is_good,
    longest_path_from,
    n_plus,
    segments,
    simple_transforms,
    transforms_ending_at,
    two_branch_at,
)


def test_vpath_accessors():
    p = VPath((3, 0, 1, 2))
    assert p.origin == 3 and p.terminal == 2 and p.length == 3
    assert p.dist(3, 2) == 3 and p.dist(0, 0) == 0
    assert p.pred(2, 2) == 0 and p.succ(3, 1) == 0
    with pytest.raises(ValueError):
        p.pred(3, 1)
    with pytest.raises(ValueError):
        p.succ(2, 1)
    with pytest.raises(ValueError):
        VPath((0, 1, 0))
    with pytest.raises(ValueError):
        VPath(())


def test_simple_transforms(diamond, p4):
    out = simple_transforms(diamond, VPath((0, 2, 1, 3)))
    assert [q.seq for q in out] == [(0, 3, 1, 2)]
    assert simple_transforms(p4, VPath((0, 1, 2))) == []
    # involution: applying the same chord again restores the path
    for q in out:
        assert VPath((0, 2, 1, 3)) in simple_transforms(diamond, q)


def test_simple_transform_involution_exhaustive():
    for g in enumerate_labeled(5):
        for v0 in range(5):
            p = longest_path_from(g, v0)
            for q in simple_transforms(g, p):
                assert p.seq in [r.seq for r in simple_transforms(g, q)]


def test_closure_diamond(diamond):
    cl = closure(diamond, VPath((0, 2, 1, 3)))
    assert [p.seq for p in cl.paths] == [(0, 2, 1, 3), (0, 3, 1, 2)]
    assert cl.L == {2, 3} and cl.L0 == frozenset()
    assert cl.S[3] == {0, 1} and cl.pivot[3] == 0
    assert cl.min_weight == 4 and cl.prefix_len == 1


def test_closure_star3(star3):
    cl = closure(star3, VPath((1, 0, 2)))
    assert [p.seq for p in cl.paths] == [(1, 0, 2)]
    assert cl.L == {2} and cl.L0 == {3} and cl.twin == {3: 2}
    assert [q.seq for q in transforms_ending_at(cl, 3)] == [(1, 0, 3)]
    assert [q.seq for q in transforms_ending_at(cl, 2)] == [(1, 0, 2)]
    with pytest.raises(ValueError):
        transforms_ending_at(cl, 0)


def test_closure_paw(paw):
    cl = closure(paw, VPath((3, 0, 1, 2)))
    assert cl.L == {1, 2} and cl.L0 == frozenset()
    assert cl.S[2] == {0} and cl.pivot[2] == 0


def test_closure_rejects_non_longest(paw):
    with pytest.raises(ValueError, match="longest"):
        closure(paw, VPath((3, 0, 1)))
    with pytest.raises(ValueError, match="adjacent"):
        closure(paw, VPath((3, 1, 2)))


def test_closure_cap():
    k6 = complete_graph(6)
    with pytest.raises(ClosureCapError):
        closure(k6, longest_path_from(k6, 0), cap=10)
    cl = closure(k6, longest_path_from(k6, 0), cap=1000)
    assert len(cl.paths) == 120  # all orderings of the other five vertices


def test_closure_membership_symmetric():
    for g in enumerate_labeled(4):
        for v0 in range(4):
            cl = closure(g, longest_path_from(g, v0))
            seqs = {p.seq for p in cl.paths}
            for q in cl.paths:
                assert {p.seq for p in closure(g, q).paths} == seqs


def test_closure_paths_share_vertex_set_and_origin():
    for seed in range(5):
        g = gen_gnp(7, 0.4, seed)
        p = longest_path_from(g, 0)
        cl = closure(g, p)
        for q in cl.paths:
            assert q.origin == 0
            assert set(q.seq) == set(p.seq)
            assert q.length == p.length


def test_segments(paw, diamond):
    segs = segments(VPath((3, 0, 1, 2)), 2, 3)
    assert segs.pivot == 0
    assert segs.back_star == (0, 1, 2) and segs.front == (3,)
    assert segs.front_star == (3, 0) and segs.back == (1, 2)
    segs = segments(VPath((0, 2, 1, 3)), 3, 4)
    assert segs.pivot == 0 and segs.back_star == (0, 2, 1, 3) and segs.front == ()
    segs = segments(VPath((0, 1, 2, 3)), 3, 2)
    assert segs.pivot == 2 and segs.back_star == (2, 3)
    with pytest.raises(ValueError, match="shorter"):
        segments(VPath((0, 1)), 1, 4)
    with pytest.raises(ValueError, match="terminal"):
        segments(VPath((0, 1)), 0, 2)


def test_n_plus_and_holes(paw, diamond, p4):
    assert n_plus(VPath((3, 0, 1, 2)), 2, paw) == {1, 2}
    assert holes(VPath((3, 0, 1, 2)), 2, paw, 3) == set()
    assert n_plus(VPath((0, 2, 1, 3)), 3, diamond) == {2, 3}
    assert holes(VPath((0, 2, 1, 3)), 3, diamond, 4) == set()
    assert holes(VPath((0, 1, 2, 3)), 3, p4, 2) == set()


def test_is_good():
    # triangle 0,1,2 with a tail 2-3-4: min over L* of c is 2
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    cl = closure(g, longest_path_from(g, 0))
    assert cl.min_weight == 2
    for v in cl.Lstar:
        for pv in transforms_ending_at(cl, v):
            assert is_good(cl, pv)
    # hand-built non-maximal path whose terminal sees deep into the prefix
    assert not is_good(cl, VPath((4, 3, 2, 0, 1)))
    # single-edge path: empty prefix is vacuously good
    assert is_good(cl, VPath((3, 4)))


def test_all_closure_paths_good_exhaustive():
    for g in enumerate_labeled(5):
        for v0 in range(5):
            cl = closure(g, longest_path_from(g, v0))
            for v in cl.Lstar:
                for pv in transforms_ending_at(cl, v):
                    assert is_good(cl, pv)


def test_two_branch_at(paw):
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)])
    assert two_branch_at(g, VPath((1, 2, 3, 0)), 0) == (4, 5)
    assert two_branch_at(g, VPath((5, 4, 0, 1, 2, 3)), 0) is None  # spanning
    assert two_branch_at(paw, VPath((3, 0, 1, 2)), 1) is None
    with pytest.raises(ValueError):
        two_branch_at(paw, VPath((3, 0, 1, 2)), 9)
