from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import c10, graphs
from evenhole.errors import OutOfRange, OverlapError, ParseError, RejectedNonSimple, UnknownEdge
from evenhole.generators import k4_subdivision
from evenhole.graph import (
    Graph,
    are_anticomplete,
    cycle_edges,
    edge_symmetric_difference,
    format_graph6,
    induced_subgraph,
    neighborhood,
    parse_graph,
    parse_graph6,
    serialize_graph,
    set_distance,
)
from evenhole.structure import enumerate_k4_subdivisions


def test_parse_path():
    g = parse_graph(b"3 2\n0 1\n1 2")
    assert g.n == 3 and g.sorted_edges() == [(0, 1), (1, 2)]


def test_parse_comments_and_trailing_newline():
    g = parse_graph("# a comment\n3 1\n# mid\n2 0\n")
    assert g.sorted_edges() == [(0, 2)]


def test_self_loop_rejected():
    with pytest.raises(RejectedNonSimple) as exc:
        parse_graph(b"2 1\n0 0")
    assert exc.value.line == 2


@pytest.mark.parametrize("text", [
    "3 2\n0 1\n1 0\n",  # repeated edge
    "3 1\n0 3\n",  # out of range
    "3 2\n0 1\n",  # too few edges
    "3 1\n0 1\n1 2\n",  # too many
    "3 1\r\n0 1\r\n",  # CR line endings
    "x y\n",
    "",
    "3 1\n0 -1\n",
])
def test_malformed_edge_lists(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_graph6_example_round_trip():
    g = parse_graph6("DQc")
    assert format_graph6(g) == "DQc"


def test_graph6_all_strings_up_to_5():
    # every labelled graph on n <= 5 vertices, checked against networkx's codec
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            g = Graph(n, edges)
            s = format_graph6(g)
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(edges)
            assert s == nx.to_graph6_bytes(h, header=False).decode().strip()
            assert parse_graph6(s) == g


def test_graph6_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_graph6("D")  # missing data
    with pytest.raises(ParseError):
        parse_graph6("D\x20c")
    with pytest.raises(OutOfRange):
        format_graph6(Graph(63))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_serialize_round_trip(g):
    for fmt in ("edge-list", "graph6"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_induced_subgraph_examples():
    g = c10()
    h, keep = induced_subgraph(g, range(10))
    assert h == g and keep == list(range(10))
    h, keep = induced_subgraph(g, {0, 1, 2})
    assert h.sorted_edges() == [(0, 1), (1, 2)]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_induced_subgraph_filter_oracle(g):
    u = [v for v in g.vertices() if v % 3 != 1]
    h, keep = induced_subgraph(g, u)
    assert {(keep[a], keep[b]) for a, b in h.edges} == {e for e in g.edges if e[0] in u and e[1] in u}
    assert induced_subgraph(g, g.vertices())[0] == g


def test_neighborhood_examples():
    g = c10()
    assert neighborhood(g, {0}) == {1, 9}
    assert neighborhood(g, range(10)) == frozenset()
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert neighborhood(star, {0}, closed=True) == set(range(5))
    with pytest.raises(OutOfRange):
        neighborhood(g, {10})


def test_anticomplete_and_distance_examples():
    g = c10()
    assert are_anticomplete(g, {0}, {5})
    assert not are_anticomplete(g, {0}, {1})
    assert set_distance(g, {0}, {3}) == 3
    assert set_distance(g, {0}, {5}) == 5
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert set_distance(two, {0}, {4}) is None
    with pytest.raises(OverlapError):
        are_anticomplete(g, {0, 1}, {1})


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_distance_properties(g):
    a, b = {0}, {g.n - 1}
    d = set_distance(g, a, b)
    assert d == set_distance(g, b, a)
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices())
    expect = nx.shortest_path_length(h, 0, g.n - 1) if nx.has_path(h, 0, g.n - 1) else None
    assert d == expect
    half = set(range(g.n // 2))
    rest = set(g.vertices()) - half
    if half and rest:
        scan = not any(g.has_edge(u, v) for u in half for v in rest)
        assert are_anticomplete(g, half, rest) == scan
        assert scan == (set_distance(g, half, rest) != 1)


def test_edge_symmetric_difference():
    g = k4_subdivision(2, 2, 2, 2, 2, 2)
    (h,), _ = enumerate_k4_subdivisions(g)
    faces = [cycle_edges(c) for _, c in sorted(h.face_cycles.items())]
    assert edge_symmetric_difference(g, faces[0], faces[0]) == frozenset()
    f1, f2 = faces[0], faces[1]
    # two faces share one ear; their sum is the cycle through the other four ears
    d = edge_symmetric_difference(g, f1, f2)
    degs = {}
    for u, v in d:
        degs[u] = degs.get(u, 0) + 1
        degs[v] = degs.get(v, 0) + 1
    assert set(degs.values()) == {2}
    assert nx.is_connected(nx.Graph(list(d)))
    with pytest.raises(UnknownEdge):
        edge_symmetric_difference(g, [(0, 1)], [])


def test_disjoint_symmetric_difference_is_union():
    g = c10()
    a = [(0, 1), (1, 2)]
    b = [(5, 6)]
    assert edge_symmetric_difference(g, a, b) == frozenset(a + b)
