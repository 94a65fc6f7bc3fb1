import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_girth.graph import (
    ACYCLIC,
    LoopArc,
    ODGSyntaxError,
    OppositeArcs,
    OrientedGraph,
    VertexOutOfRange,
    directed_cycle,
    disjoint_union,
    girth,
    is_tournament,
    new_oriented_graph,
    parse,
    serialize,
    short_cycles,
    to_dot,
)
from oracles import all_cycles, brute_girth

TRIANGLE = directed_cycle(3)


@st.composite
def oriented_graphs(draw, max_order=8):
    n = draw(st.integers(0, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    states = draw(st.lists(st.sampled_from((0, 1, 2)), min_size=len(pairs), max_size=len(pairs)))
    arcs = [(i, j) if s == 1 else (j, i) for (i, j), s in zip(pairs, states) if s]
    return OrientedGraph(n, arcs)


def test_construction_and_dedupe():
    d = new_oriented_graph(3, [(0, 1), (1, 2), (2, 0), (0, 1)])
    assert d == TRIANGLE
    assert len(d.arcs) == 3


@pytest.mark.parametrize(
    "order, arcs, exc",
    [(2, [(0, 1), (1, 0)], OppositeArcs), (1, [(0, 0)], LoopArc), (2, [(0, 2)], VertexOutOfRange)],
)
def test_invalid_graphs(order, arcs, exc):
    with pytest.raises(exc):
        new_oriented_graph(order, arcs)


def test_girth_examples():
    assert girth(TRIANGLE) == 3
    assert girth(OrientedGraph(2, [(0, 1)])) == ACYCLIC
    assert girth(directed_cycle(7)) == 7
    assert girth(OrientedGraph(4)) >= 100
    assert ACYCLIC == math.inf


def test_short_cycles_examples():
    assert short_cycles(TRIANGLE, 4) == [(0, 1, 2)]
    assert short_cycles(TRIANGLE, 3) == []
    two = disjoint_union(TRIANGLE, TRIANGLE)
    cycles = short_cycles(two, 5)
    assert sorted(cycles) == [(0, 1, 2), (3, 4, 5)]
    assert not set(cycles[0]) & set(cycles[1])


def test_short_cycles_rotation():
    d = OrientedGraph(4, [(3, 1), (1, 2), (2, 3)])
    assert short_cycles(d, 5) == [(1, 2, 3)]


def test_is_tournament():
    assert is_tournament(TRIANGLE)
    assert not is_tournament(OrientedGraph(3, [(0, 1)]))
    assert is_tournament(OrientedGraph(1))


@settings(max_examples=200, deadline=None)
@given(oriented_graphs())
def test_girth_matches_brute_force(d):
    expected = brute_girth(d.order, d.arcs)
    assert girth(d) == (ACYCLIC if expected is None else expected)


@settings(max_examples=200, deadline=None)
@given(oriented_graphs(), st.integers(3, 9))
def test_short_cycles_match_brute_force(d, bound):
    found = short_cycles(d, bound)
    assert len(found) == len(set(found))
    assert set(found) == {c for c in all_cycles(d.order, d.arcs) if len(c) < bound}
    for cyc in found:
        assert cyc[0] == min(cyc)
        assert all(d.has_arc(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    assert (girth(d) < bound) == bool(found)


def test_parse_examples():
    assert parse("digraph 3\n0 1\n1 2\n2 0\n") == TRIANGLE
    with pytest.raises(OppositeArcs):
        parse("digraph 2\n0 1\n1 0\n")
    text = "# a comment\ndigraph 3\n2 0\n0 1\n1 2\n"
    assert serialize(parse(text)) == "digraph 3\n0 1\n1 2\n2 0\n"


@pytest.mark.parametrize(
    "text, lineno",
    [("digraph x\n", 1), ("digraph 3\n0  1\n", 2), ("# c\ndigraph 3\n0 1\n1\n", 4), ("0 1\n", 1)],
)
def test_parse_syntax_errors(text, lineno):
    with pytest.raises(ODGSyntaxError) as info:
        parse(text)
    assert info.value.lineno == lineno


def test_missing_header():
    with pytest.raises(ODGSyntaxError):
        parse("# only a comment\n")


@settings(max_examples=200, deadline=None)
@given(oriented_graphs())
def test_round_trip(d):
    text = serialize(d)
    assert text.endswith("\n")
    assert parse(text) == d
    assert serialize(parse(text)) == text


def test_dot_export():
    assert to_dot(OrientedGraph(3, [(1, 0)])) == "digraph G { 2; 1 -> 0; }\n"
