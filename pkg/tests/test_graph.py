from __future__ import annotations

import pytest
from hypothesis import given

from boolwidth.errors import InputError
from boolwidth.graph import (
    Graph,
    bits,
    complement,
    format_graph,
    graph_from_edges,
    lowest,
    neighborhood_of_set,
    parse_graph,
    popcount,
    read_graph,
    vset,
    write_graph,
)

from conftest import graphs


def test_bit_helpers():
    assert vset([0, 3, 5]) == 0b101001
    assert list(bits(0b101001)) == [0, 3, 5]
    assert popcount(0b1011) == 3
    assert lowest(0b1000) == 3


def test_edges_sorted_and_symmetric():
    g = graph_from_edges(4, [(2, 1), (0, 3), (1, 0), (1, 2)])
    assert g.edges() == [(0, 1), (0, 3), (1, 2)]
    assert g.m == 3
    assert g.has_edge(3, 0) and not g.has_edge(2, 3)
    assert g.degree(1) == 2


def test_rejects_bad_graphs():
    with pytest.raises(InputError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(InputError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(2, (0b10, 0))


def test_neighborhood_of_set():
    g = graph_from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert neighborhood_of_set(g, vset([0, 3]), vset([1, 2, 4])) == vset([1, 4])


def test_induced_relabels():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = g.induced([3, 2, 0])
    assert h.edges() == [(0, 1)]


def test_parse_format_round_trip(tmp_path):
    text = "# path\ngraph 3\ne 1 2\n\ne 0 1\n"
    g = parse_graph(text)
    assert format_graph(g) == "graph 3\ne 0 1\ne 1 2\n"
    path = tmp_path / "g.graph"
    write_graph(g, path)
    assert read_graph(path) == g


@pytest.mark.parametrize(
    "text", ["", "e 0 1\n", "graph x\n", "graph 2\ne 0\n", "graph 2\nf 0 1\n", "graph 2\ne 0 5\n"]
)
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_graph(text)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    h = complement(g)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert g.has_edge(u, v) != h.has_edge(u, v)


@given(graphs())
def test_format_parse_identity(g):
    assert parse_graph(format_graph(g)) == g
