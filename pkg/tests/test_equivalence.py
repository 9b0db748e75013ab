from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolwidth.equivalence import (
    EMPTY,
    NATURALS,
    build_table,
    cofinite,
    d_of_set,
    enumerate_classes,
    finite,
    format_class_table,
    member_trunc,
    parse_set,
    signature,
    witnesses,
)
from boolwidth.errors import CapExceededError, InputError
from boolwidth.generators import hsu_graph
from boolwidth.graph import bits, graph_from_edges, popcount
from boolwidth.oracle import brute_max_min_representative, brute_min_representative

from conftest import graph_and_side


def test_d_values():
    assert d_of_set(NATURALS) == 0
    assert d_of_set(finite(0)) == 1
    assert d_of_set(finite(1)) == 2
    assert d_of_set(cofinite(0)) == 1
    assert d_of_set(cofinite(0, 3)) == 4
    assert d_of_set(EMPTY) == 1


def test_parse_set_forms():
    assert parse_set("N") == NATURALS
    assert parse_set("{2, 0}") == finite(0, 2)
    assert parse_set("N\\{0}") == cofinite(0)
    assert parse_set("{}") == EMPTY
    for bad in ("M", "N{1}", "\\{1}", "{a}"):
        with pytest.raises(InputError):
            parse_set(bad)
    for mu in (NATURALS, finite(1, 4), cofinite(0, 2), EMPTY):
        assert parse_set(str(mu)) == mu


def test_member_trunc():
    assert member_trunc(cofinite(0), 1, 1)
    assert not member_trunc(cofinite(0), 0, 1)
    assert member_trunc(finite(1), 1, 2)
    assert not member_trunc(finite(1), 2, 2)
    assert member_trunc(NATURALS, 3, 3)
    with pytest.raises(InputError):
        member_trunc(finite(3), 0, 2)


@given(st.lists(st.integers(0, 6), max_size=4), st.booleans(), st.integers(0, 12))
def test_truncation_is_faithful(members, cofin, t):
    mu = cofinite(*members) if cofin else finite(*members)
    d = max(d_of_set(mu), 1)
    assert member_trunc(mu, min(t, d), d) == (t in mu)


def test_hsu_classes_nested():
    g = hsu_graph(3, 3)
    table = enumerate_classes(g, 0b111, 1)
    assert len(table) == 4
    assert sorted(popcount(r) for r in table.reps) == [0, 1, 1, 1]


def test_class_of_and_witnesses():
    g = graph_from_edges(5, [(0, 3), (1, 3), (1, 4), (2, 4)])
    A = 0b111
    assert witnesses(g, A) == [3, 4]
    assert signature(g, A, 2, 0b011) == (2, 1)
    assert signature(g, A, 2, 0b111) == (2, 2)
    table = build_table(g, A, 1)
    assert table.class_of(0b010) == table.class_of(0b011) == table.class_of(0b111)
    assert table.class_of(0b001) != table.class_of(0b010)
    text = format_class_table(g, table)
    assert text.splitlines()[0] == "class\trepresentative\tsignature"
    assert len(text.splitlines()) == len(table) + 1
    with pytest.raises(InputError):
        table.class_of(0b1000)


def test_cap():
    with pytest.raises(CapExceededError):
        build_table(hsu_graph(5, 5), 0b11111, 3, cap=4)


@given(graph_and_side(max_n=9), st.integers(1, 3))
def test_table_is_exact_partition(case, d):
    g, A = case
    table = build_table(g, A, d)
    sigs = {}
    sub = A
    while True:
        sigs.setdefault(signature(g, A, d, sub), []).append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & A
    assert len(table) == len(sigs)
    for members in sigs.values():
        classes = {table.class_of(x) for x in members}
        assert len(classes) == 1
        (c,) = classes
        assert popcount(table.reps[c]) == min(popcount(x) for x in members)


@given(graph_and_side(max_n=10), st.integers(1, 3))
def test_representatives_are_minimum(case, d):
    g, A = case
    table = build_table(g, A, d)
    assert max(popcount(r) for r in table.reps) == brute_max_min_representative(g, A, d)
    for rep in table.reps[:5]:
        over_all, within = brute_min_representative(g, A, d, rep)
        assert over_all == within == popcount(rep)


@given(graph_and_side(max_n=10), st.integers(1, 3), st.data())
def test_sum_keys_matches_union(case, d, data):
    g, A = case
    table = build_table(g, A, d)
    X = data.draw(st.integers(0, A)) & A
    Y = data.draw(st.integers(0, A)) & A & ~X
    assert table.sum_keys(table.key_of(X), table.key_of(Y)) == table.key_of(X | Y)
    counts = table.counts(table.key_of(X))
    for w, c in counts.items():
        assert c == min(d, popcount(g.adj[w] & X))
    assert set(counts) == set(bits(table.witness_mask))
