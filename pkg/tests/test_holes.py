from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import c10, complete, graphs, petersen, sparse_graphs
from evenhole.errors import BudgetExhausted
from evenhole.generators import cycle, theta
from evenhole.graph import Graph
from evenhole.holes import (
    INFINITE,
    Hole,
    check_membership,
    enumerate_holes,
    find_hole,
    girth,
    holes_by_subsets,
    in_H,
)


def test_girth_examples():
    assert girth(c10()) == 10
    assert girth(Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])) == INFINITE
    assert girth(petersen()) == 5
    assert girth(complete(4)) == 3


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_girth_matches_networkx(g):
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices())
    assert girth(g) == nx.girth(h)


def test_holes_examples():
    hs = enumerate_holes(c10(), 4, 12)
    assert [h.length for h in hs.holes] == [10] and not hs.truncated
    assert sorted(h.length for h in enumerate_holes(theta(5, 5, 6)).holes) == [10, 11, 11]
    assert enumerate_holes(complete(5)).holes == []


def test_petersen_holes():
    # 12 pentagons and 10 induced hexagons; every longer cycle has a chord
    hs = enumerate_holes(petersen()).holes
    assert [h.length for h in hs] == [5] * 12 + [6] * 10


@settings(max_examples=300, deadline=None)
@given(sparse_graphs(max_n=11))
def test_holes_match_subset_oracle(g):
    assert enumerate_holes(g).holes == holes_by_subsets(g)


@settings(max_examples=100, deadline=None)
@given(sparse_graphs(max_n=11))
def test_hole_properties(g):
    hs = enumerate_holes(g).holes
    for h in hs:
        assert h.is_hole_in(g)
        assert h.length >= girth(g)
    if nx.is_bipartite(nx.Graph(list(g.edges))) if g.m else True:
        assert all(h.is_even for h in hs)
    lo = enumerate_holes(g, 6, 8).holes
    assert lo == [h for h in hs if 6 <= h.length <= 8]


def test_hole_canonical_form():
    h = Hole.from_cycle([3, 2, 1, 0, 5, 4])
    assert h.vertices[0] == 0 and h.vertices[1] < h.vertices[-1]
    assert h == Hole.from_cycle([0, 1, 2, 3, 4, 5][::-1])


def test_budget_truncates():
    hs = enumerate_holes(theta(4, 4, 4), budget=3)
    assert hs.truncated
    with pytest.raises(BudgetExhausted):
        check_membership(theta(5, 5, 6), 5, budget=3)


def test_find_hole_parity():
    g = theta(5, 5, 6)
    h, tr = find_hole(g, 4, None, parity=1)
    assert h is not None and h.length == 11 and not tr
    h, _ = find_hole(g, 12, None, parity=0)
    assert h is None


def test_membership_examples():
    r = check_membership(c10(), 5)
    assert r.in_H and not r.in_G and r.blocking_witness is None
    r = check_membership(theta(5, 5, 6), 5)
    assert r.in_H
    r = check_membership(theta(1, 5, 5), 5)
    assert not r.in_H
    assert r.blocking_witness["kind"] == "short-cycle" and r.blocking_witness["length"] == 6
    r = check_membership(petersen(), 2)
    assert r.in_G and not r.in_H


def test_membership_long_even_hole_witness():
    # girth 10 but a 12-hole: 5 + 7
    r = check_membership(theta(5, 7, 9), 5)
    assert r.girth == 12 and not r.in_H
    r = check_membership(theta(5, 5, 7), 5)
    assert not r.in_H and r.blocking_witness == {"kind": "hole", "vertices": r.blocking_witness["vertices"],
                                                 "length": 12, "parity": "even"}


def test_forest_is_never_a_member():
    r = check_membership(Graph(3, [(0, 1), (1, 2)]), 3)
    assert not r.in_H and not r.in_G
    assert r.to_json()["girth"] == "infinite"


@settings(max_examples=150, deadline=None)
@given(sparse_graphs(max_n=12))
def test_membership_exclusive_and_consistent(g):
    for ell in (2, 3, 4):
        r = check_membership(g, ell)
        assert not (r.in_H and r.in_G)
        assert r.in_H == in_H(g, ell)
        long_even = [h for h in holes_by_subsets(g) if h.is_even and h.length >= 2 * ell + 2]
        assert r.in_H == (girth(g) == 2 * ell and not long_even)


def test_ell_must_be_at_least_two():
    with pytest.raises(ValueError):
        check_membership(cycle(4), 1)
