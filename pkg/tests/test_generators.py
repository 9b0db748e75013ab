from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolwidth.decomposition import caterpillar_from_order, cut_bool, cut_rank, cut_values
from boolwidth.equivalence import build_table
from boolwidth.errors import InputError
from boolwidth.generators import (
    RANDOM_KINDS,
    HsuChainSpec,
    clique_chain_interval_model,
    group_order,
    hsu_clique_chain,
    hsu_graph,
    hsu_join_chain,
    hsu_stable_chain,
    random_graph,
    random_model,
    stable_chain_permutation_model,
)
from boolwidth.graph import Graph, full_set, graph_from_edges
from boolwidth.models import max_point_load, realize, validate_convex
from boolwidth.oracle import brute_cut_bool


def test_hsu_graph_examples():
    assert hsu_graph(1, 1).edges() == [(0, 1)]
    assert [hsu_graph(3, 3).degree(v) for v in range(3)] == [3, 2, 1]
    assert hsu_graph(2, 3).m == 5


def test_chain_examples():
    assert hsu_stable_chain(1, 2).edges() == [(0, 1)]
    assert hsu_clique_chain(2, 2).m == 5
    assert hsu_stable_chain(3, 4).m == 18


def test_custom_chain():
    path = graph_from_edges(3, [(0, 1), (1, 2)])
    spec = HsuChainSpec(2, 2, "custom", (path, path), ((0, 2), (2, 1)))
    g = hsu_join_chain(spec)
    assert g.n == 6
    # v-side (0, 2) of piece 0 meets u-side (5, 4) of piece 1
    assert {(0, 5), (0, 4), (2, 4)} <= set(g.edges())
    assert g.m == 4 + 3
    with pytest.raises(InputError):
        HsuChainSpec(2, 2, "custom", (path,), ((0, 1),))


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3), (3, 4), (4, 7), (5, 2)])
def test_chain_models_realize_generators(p, q):
    assert realize(stable_chain_permutation_model(p, q)) == hsu_stable_chain(p, q)
    m = clique_chain_interval_model(p, q)
    assert realize(m) == hsu_clique_chain(p, q)
    assert len({r - l for ((l, r),) in m.spans}) == 1


def test_unit_interval_path_for_width_one():
    assert hsu_clique_chain(1, 5).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]


@pytest.mark.parametrize("p", range(1, 13))
def test_hsu_gap(p):
    g = hsu_graph(p, p)
    A = full_set(p)
    assert cut_bool(g, A).count == p + 1
    assert cut_rank(g, A) == p
    if p <= 10:
        assert brute_cut_bool(g, A) == p + 1


@pytest.mark.parametrize("p,q", [(2, 5), (3, 10), (4, 13)])
def test_stable_chain_bipartite_by_parity(p, q):
    g = hsu_stable_chain(p, q)
    for u, v in g.edges():
        assert (u // p) % 2 != (v // p) % 2


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 5) for q in (2, 5, 9, 13)])
def test_group_order_classes(p, q):
    for g in (hsu_stable_chain(p, q), hsu_clique_chain(p, q)):
        t = caterpillar_from_order(group_order(p, q))
        for cut, _ in cut_values(g, t):
            assert len(build_table(g, cut.A, 1)) <= (p + 1) ** 2


@pytest.mark.parametrize("p", [2, 3, 4])
def test_middle_group_cut_rank(p):
    q = 3 * p + 1
    g = hsu_clique_chain(p, q)
    assert cut_rank(g, full_set(p * (q // 2))) == p


def _has_chordless_cycle(g: Graph) -> bool:
    for k in range(4, g.n + 1):
        for cyc in itertools.permutations(range(g.n), k):
            if cyc[0] != min(cyc) or cyc[1] > cyc[-1]:
                continue
            ring = all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
            if not ring:
                continue
            chords = any(
                g.has_edge(cyc[i], cyc[j])
                for i in range(k)
                for j in range(i + 2, k)
                if not (i == 0 and j == k - 1)
            )
            if not chords:
                return True
    return False


@given(st.integers(1, 7), st.integers(0, 10**6))
def test_random_interval_graphs_are_chordal(n, seed):
    assert not _has_chordless_cycle(realize(random_model("interval", n, seed)))


@given(st.integers(1, 60), st.integers(1, 8), st.integers(0, 10**6))
def test_interval_load_cap(n, cap, seed):
    assert max_point_load(random_model("interval", n, seed, max_load=cap)) <= cap


@pytest.mark.parametrize("kind", RANDOM_KINDS)
def test_random_models_reproducible(kind):
    a = random_model(kind, 9, 42)
    assert a == random_model(kind, 9, 42)
    if kind == "convex":
        assert validate_convex(a.graph, a.structure)
    elif not isinstance(a, Graph):
        realize(a)


def test_random_graph_extremes():
    assert random_graph(7, 0.0, 1).m == 0
    assert random_graph(7, 1.0, 1).m == 21
    assert random_graph(7, 0.5, 9) == random_graph(7, 0.5, 9)


def test_codegenerate_respects_k():
    from boolwidth.builders import order_co_degenerate

    for seed in range(20):
        g = random_model("codegenerate", 12, seed, k=2)
        assert 1 <= order_co_degenerate(g)[1] <= 2


def test_unknown_kind():
    with pytest.raises(InputError):
        random_model("nope", 3, 0)
