"""Generators: determinism, contracts, and reference vectors."""

import pytest

from eglocal import (
    BlockNode,
    BlockPlan,
    Graph,
    SplitMix64,
    bound_report,
    complete_graph,
    cycle_graph,
    decompose,
    enumerate_labeled,
    gen_block_graph,
    gen_clique_union,
    gen_gnm,
    gen_gnp,
    gen_parent_dominated,
    order_profile,
    path_graph,
    star,
    turan,
)


def test_splitmix64_reference_vector():
    # published reference outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(4)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
        0xF88BB8A8724C81EC,
    ]


def test_splitmix64_below_and_shuffle():
    rng = SplitMix64(42)
    draws = [rng.below(10) for _ in range(200)]
    assert all(0 <= d < 10 for d in draws) and len(set(draws)) == 10
    with pytest.raises(ValueError):
        rng.below(0)
    xs = list(range(8))
    SplitMix64(7).shuffle(xs)
    ys = list(range(8))
    SplitMix64(7).shuffle(ys)
    assert xs == ys and sorted(xs) == list(range(8))


def test_gen_clique_union():
    g = gen_clique_union([3, 3])
    assert g.n == 6 and g.edge_count() == 6
    rep = bound_report(g)
    assert rep.path_equality
    assert gen_clique_union([1]) == Graph.empty(1)
    assert gen_clique_union([4]) == complete_graph(4)
    with pytest.raises(ValueError):
        gen_clique_union([0])


def test_gen_block_graph_plans(paw, chain33):
    plan = BlockPlan((BlockNode(3), BlockNode(2, parent=0, attach=0)))
    assert gen_block_graph(plan) == paw
    plan = BlockPlan(
        (
            BlockNode(3),
            BlockNode(2, parent=0, attach=2),
            BlockNode(3, parent=1, attach=1),
        )
    )
    assert gen_block_graph(plan) == chain33
    assert gen_block_graph(BlockPlan((BlockNode(2),))) == complete_graph(2)
    d = decompose(gen_block_graph(plan))
    assert order_profile(d) == (2, 3, 3)


def test_block_plan_validation():
    with pytest.raises(ValueError):
        BlockPlan(())
    with pytest.raises(ValueError):
        BlockPlan((BlockNode(1),))
    with pytest.raises(ValueError):
        BlockPlan((BlockNode(3), BlockNode(2)))  # missing parent
    with pytest.raises(ValueError):
        BlockPlan((BlockNode(3), BlockNode(2, parent=0, attach=5)))
    assert BlockPlan((BlockNode(3), BlockNode(4, parent=0, attach=0))).is_parent_dominated() is False


def test_gen_parent_dominated_contract():
    for seed in range(60):
        g = gen_parent_dominated(seed, 1 + seed % 5, 2 + seed % 4)
        d = decompose(g)
        assert d.is_parent_dominated, seed
    assert gen_parent_dominated(3, 1, 6) == complete_graph(
        gen_parent_dominated(3, 1, 6).n
    )
    assert gen_parent_dominated(9, 4, 5) == gen_parent_dominated(9, 4, 5)


def test_gnp():
    assert gen_gnp(6, 0.0, 1).edge_count() == 0
    assert gen_gnp(6, 1.0, 1) == complete_graph(6)
    assert gen_gnp(9, 0.35, 5) == gen_gnp(9, 0.35, 5)
    assert gen_gnp(9, 0.35, 5) != gen_gnp(9, 0.35, 6)


def test_gnm():
    g = gen_gnm(7, 9, 12)
    assert g.n == 7 and g.edge_count() == 9
    assert gen_gnm(7, 9, 12) == g
    with pytest.raises(ValueError):
        gen_gnm(4, 7, 0)


def test_turan():
    g = turan(6, 3)
    assert g.edge_count() == 12
    assert g == Graph.from_edges(
        6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2]
    )
    assert turan(5, 2).edge_count() == 6  # parts 3 + 2
    assert turan(4, 4) == complete_graph(4)
    with pytest.raises(ValueError):
        turan(4, 0)


def test_basic_families(c4, p4, star3):
    assert cycle_graph(4) == c4
    assert path_graph(4) == p4
    assert star(4) == star3
    assert path_graph(1) == Graph.empty(1)
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_enumerate_labeled_counts():
    assert len(list(enumerate_labeled(0))) == 1
    assert len(list(enumerate_labeled(2))) == 2
    assert len(list(enumerate_labeled(3))) == 8
    graphs = list(enumerate_labeled(4))
    assert len(graphs) == 64
    assert len(set(graphs)) == 64
    assert graphs[0] == Graph.empty(4)
    assert graphs[-1] == complete_graph(4)
    with pytest.raises(ValueError):
        next(enumerate_labeled(8))
