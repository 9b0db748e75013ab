from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolwidth.decomposition import (
    DecompositionTree,
    caterpillar_from_order,
    cut_bool,
    cut_rank,
    cut_values,
    cuts_of,
    format_tree,
    middle_vertices,
    parse_tree,
    random_decomposition,
    root_at_edge,
    rooted,
    tree_width_of,
)
from boolwidth.errors import CapExceededError, InputError
from boolwidth.generators import hsu_graph
from boolwidth.graph import complement, full_set, graph_from_edges, vset
from boolwidth.oracle import brute_cut_bool, brute_cut_rank

from conftest import graph_and_side


def test_caterpillar_text_form():
    t = caterpillar_from_order([0, 1, 2, 3])
    assert format_tree(t) == "(0,(1,(2,3)))"
    assert parse_tree("(0,(1,(2,3)))").edges() == t.edges()


def test_caterpillar_cuts_are_prefixes_and_leaves():
    order = [2, 0, 3, 1, 4]
    sides = set()
    for c in cuts_of(caterpillar_from_order(order)):
        sides.add(min(c.A, full_set(5) & ~c.A))
    parts = ([2], [0], [3], [1], [4], [2, 0], [2, 0, 3])
    want = {min(vset(s), full_set(5) & ~vset(s)) for s in parts}
    assert sides == want


def test_tree_validation():
    with pytest.raises(InputError):
        DecompositionTree(3, ((3,), (3,), (3,), (0, 1, 2), ()))
    with pytest.raises(InputError):
        caterpillar_from_order([0, 0, 1])
    with pytest.raises(InputError):
        parse_tree("(0,(1,1))")
    with pytest.raises(InputError):
        parse_tree("(0,1,2)")


def test_small_trees():
    assert cuts_of(caterpillar_from_order([0])) == []
    assert format_tree(parse_tree("0")) == "0"
    assert format_tree(caterpillar_from_order([1, 0])) == "(0,1)"


def test_hsu_cut_gap():
    g = hsu_graph(3, 3)
    assert cut_bool(g, 0b111).count == 4
    assert cut_bool(g, 0b111).bits == 2.0
    assert cut_rank(g, 0b111) == 3


def test_middle_vertices_collapse_twins():
    g = graph_from_edges(4, [(0, 2), (1, 2), (1, 3)])
    assert middle_vertices(g, 0b11) == 0b11
    twins = graph_from_edges(4, [(0, 2), (1, 2)])
    assert middle_vertices(twins, 0b11) == 0b01


def test_cap_error_names_edge():
    g = hsu_graph(4, 4)
    t = caterpillar_from_order([0, 1, 2, 3, 4, 5, 6, 7])
    with pytest.raises(CapExceededError) as info:
        cut_values(g, t, "bool", cap=3)
    assert info.value.where is not None


def test_width_of_complete_and_edgeless():
    n = 6
    kn = complement(graph_from_edges(n, []))
    t = random_decomposition(n, 1)
    assert tree_width_of(kn, t) == 1.0
    assert tree_width_of(graph_from_edges(n, []), t) == 0.0
    assert tree_width_of(kn, t, "rank") == 1


@given(st.integers(1, 30), st.integers(0, 10**6))
def test_random_decomposition_is_valid(n, seed):
    t = random_decomposition(n, seed)
    assert t.n == n

    def sides(tt):
        return sorted(min(c.A, full_set(n) & ~c.A) for c in cuts_of(tt))

    # the text form keeps every cut
    assert sides(parse_tree(format_tree(t))) == sides(t)


@given(st.integers(2, 20), st.integers(0, 10**6))
def test_rooting_partitions_leaves(n, seed):
    t = random_decomposition(n, seed)
    for edge in t.edges()[:3]:
        rd = root_at_edge(t, edge)
        assert rd.below[rd.root] == full_set(n)
        assert rd.postorder[-1] == rd.root
        for x, kids in enumerate(rd.children):
            if kids:
                a, b = kids
                assert rd.below[a] & rd.below[b] == 0
                assert rd.below[a] | rd.below[b] == rd.below[x]
    assert rooted(t).n == n


@given(graph_and_side(max_n=12))
def test_cut_bool_matches_brute(case):
    g, A = case
    bc = cut_bool(g, A)
    assert bc.count == brute_cut_bool(g, A)
    assert math.isclose(bc.bits, math.log2(bc.count))


@given(graph_and_side(max_n=12))
def test_cut_bool_symmetric(case):
    g, A = case
    assert cut_bool(g, A).count == cut_bool(g, g.vertices & ~A).count


@given(graph_and_side(max_n=12))
def test_cut_rank_matches_brute_and_bounds(case):
    g, A = case
    r = cut_rank(g, A)
    assert r == brute_cut_rank(g, A) == cut_rank(g, g.vertices & ~A)
    # a rank-r family has between r + 1 and 2^r union-closed members
    assert r + 1 <= cut_bool(g, A).count <= 2**r
