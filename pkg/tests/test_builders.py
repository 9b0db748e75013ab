from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolwidth.builders import (
    dilworth_chain_cover,
    order_circular_model,
    order_co_degenerate,
    order_convex,
    order_dilworth,
    order_for_class,
    order_linear_model,
    vicinal_leq,
)
from boolwidth.decomposition import caterpillar_from_order, cut_values
from boolwidth.errors import InputError
from boolwidth.generators import random_graph, random_model
from boolwidth.graph import complement, graph_from_edges
from boolwidth.models import (
    CircularPermutationModel,
    ConvexStructure,
    KTrapezoidModel,
    PermutationModel,
    arc_model,
    interval_model,
    max_point_load,
    realize,
)
from boolwidth.oracle import brute_dilworth

from conftest import graphs


def test_linear_orders():
    assert order_linear_model(interval_model([(1, 3), (2, 4), (5, 6)])) == [0, 1, 2]
    assert order_linear_model(PermutationModel((5, 1, 3), (0, 1, 2))) == [1, 2, 0]
    m = KTrapezoidModel(2, (((0, 7), (1, 2)), ((0, 1), (3, 4)), ((2, 9), (0, 5))))
    assert order_linear_model(m) == [1, 0, 2]


def test_circular_orders():
    assert order_circular_model(arc_model(12, [(11, 2), (3, 5), (6, 8)]), 0) == [0, 1, 2]
    # nothing contains 0: plain clockwise distance
    assert order_circular_model(arc_model(12, [(6, 8), (3, 5), (9, 10)]), 0) == [1, 0, 2]
    cp = CircularPermutationModel(12, (0, 3, 5), (7, 2, 10), (True, True, True))
    assert order_circular_model(cp, 0) == [1, 0, 2]
    assert order_circular_model(cp, 8) == [2, 1, 0]


def test_convex_orders():
    x1, x2, x3, y = 0, 1, 2, 3
    g = graph_from_edges(4, [(x1, y), (x2, y)])
    assert order_convex(g, ConvexStructure(4, (x1, x2, x3))) == [x1, x2, y, x3]
    g = graph_from_edges(5, [(1, 3), (1, 4), (0, 4)])
    assert order_convex(g, ConvexStructure(5, (0, 1, 2))) == [0, 1, 3, 4, 2]
    g = graph_from_edges(4, [])
    assert order_convex(g, ConvexStructure(4, (0, 1, 2))) == [3, 0, 1, 2]
    with pytest.raises(InputError):
        order_convex(graph_from_edges(4, [(0, 3), (2, 3)]), ConvexStructure(4, (0, 1, 2)))


def test_dilworth_examples():
    star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert len(dilworth_chain_cover(star)) == 1
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert dilworth_chain_cover(c4).chains == ((0, 2), (1, 3))
    assert order_dilworth(c4) == [0, 2, 1, 3]
    assert len(dilworth_chain_cover(graph_from_edges(5, []))) == 1
    kn = complement(graph_from_edges(5, []))
    assert order_dilworth(kn) == [0, 1, 2, 3, 4]


def test_co_degenerate_examples():
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    order, k = order_co_degenerate(c4)
    assert k == 1 and sorted(order) == [0, 1, 2, 3]
    assert order_co_degenerate(complement(graph_from_edges(5, [])))[1] == 0
    tree = graph_from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert order_co_degenerate(complement(tree))[1] == 1


def test_order_for_class_checks_input():
    with pytest.raises(InputError):
        order_for_class("interval", PermutationModel((0,), (0,)))
    with pytest.raises(InputError):
        order_for_class("trapezoid", interval_model([(0, 1)]))
    with pytest.raises(InputError):
        order_for_class("nonsense", None)


@given(graphs(max_n=9))
def test_chain_cover_is_minimum(g):
    cover = dilworth_chain_cover(g)
    assert cover.is_valid(g)
    assert len(cover) == brute_dilworth(g)


@given(graphs(max_n=9))
def test_vicinal_preorder_transitive(g):
    for x, y, z in itertools.permutations(range(g.n), 3):
        if vicinal_leq(g, x, y) and vicinal_leq(g, y, z):
            assert vicinal_leq(g, x, z)


@given(graphs(max_n=10))
def test_co_degenerate_order_certificate(g):
    order, k = order_co_degenerate(g)
    h = complement(g)
    assert sorted(order) == list(range(g.n))
    later = 0
    for v in reversed(order):
        assert (h.adj[v] & later).bit_count() <= k
        later |= 1 << v


@given(st.integers(2, 30), st.integers(0, 10**6))
def test_permutation_and_interval_class_bounds(n, seed):
    m = random_model("perm", n, seed)
    g = realize(m)
    t = caterpillar_from_order(order_for_class("permutation", m))
    assert max(v for _, v in cut_values(g, t)) <= n
    m = random_model("interval", n, seed, max_load=4)
    g = realize(m)
    t = caterpillar_from_order(order_for_class("interval", m))
    assert max(v for _, v in cut_values(g, t)) <= max_point_load(m)


@given(st.integers(2, 14), st.integers(0, 10**6))
def test_convex_class_count_at_most_middle_plus_one(n, seed):
    from boolwidth.decomposition import middle_vertices

    m = random_model("convex", n, seed)
    order = order_for_class("convex", m)
    for cut, count in cut_values(m.graph, caterpillar_from_order(order)):
        assert count <= middle_vertices(m.graph, cut.A).bit_count() + 1


def test_random_graph_orders_are_permutations():
    g = random_graph(12, 0.4, 3)
    assert sorted(order_dilworth(g)) == list(range(12))
