from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import c10, sparse_graphs
from evenhole.errors import HoleMismatch, MalformedJump, NotAnEvenHole, PreconditionViolated
from evenhole.generators import cycle, theta
from evenhole.graph import Graph, PathWitness
from evenhole.holes import Hole, enumerate_holes
from evenhole.jumps import (
    JumpPairRelation,
    classify_jump,
    enumerate_jumps,
    extract_short_jump,
    hole_arcs,
    jumps_over,
    relate_jumps,
)
from evenhole.oracles import jump_paths_by_subsets


def _theta_hole(a: int, b: int, c: int) -> tuple[Graph, Hole, tuple[int, ...]]:
    """theta(a, b, c) with the hole made of the first two ears and the third ear as a path."""
    g = theta(a, b, c)
    first = [0] + list(range(2, a + 1)) + [1]
    second = [1] + list(range(a + b - 1, a, -1)) + [0]
    third = (0,) + tuple(range(a + b, a + b + c - 1)) + (1,)
    return g, Hole.from_cycle(first + second[1:-1]), third


def test_theta_555_unique_short_type_e_jump():
    g, c, ear = _theta_hole(5, 5, 5)
    js, tr = enumerate_jumps(g, c)
    assert not tr and len(js) == 1
    j = js[0]
    assert (j.kind, j.jtype, j.length) == ("short", "type-e", 5)
    assert j.path.vertices == ear


def test_theta_557_jump_parity():
    # 5 + 7 = 12 is even, so the jump is type-e (and the graph has a 12-hole)
    g, c, _ = _theta_hole(5, 5, 7)
    (j,), _ = enumerate_jumps(g, c)
    assert (j.kind, j.jtype, j.length) == ("short", "type-e", 7)
    g, c, _ = _theta_hole(5, 5, 6)
    (j,), _ = enumerate_jumps(g, c)
    assert (j.kind, j.jtype, j.length) == ("short", "type-o", 6)


def test_c10_has_no_jumps():
    c = Hole.from_cycle(range(10))
    assert enumerate_jumps(c10(), c) == ([], False)


def test_enumerate_jumps_needs_even_hole():
    g = cycle(9)
    with pytest.raises(NotAnEvenHole):
        enumerate_jumps(g, Hole.from_cycle(range(9)))
    js, _ = jumps_over(g, Hole.from_cycle(range(9)))
    assert js == []
    with pytest.raises(NotAnEvenHole):
        enumerate_jumps(c10(), Hole.from_cycle([0, 1, 2, 3]))


def test_local_and_other_jumps():
    g, c, ear = _theta_hole(5, 5, 5)
    q1, q2 = hole_arcs(c, 0, 1)
    # one extra edge from the jump's interior to the interior of one arc
    g1 = Graph(g.n, list(g.edges) + [(ear[2], q1[2])])
    j = classify_jump(g1, c, ear)
    assert j.kind == "local" and j.crossed_side == "Q1" and j.jtype == "n/a"
    assert not j.across_one_vertex
    g2 = Graph(g.n, list(g.edges) + [(ear[2], q2[2])])
    assert classify_jump(g2, c, ear).crossed_side == "Q2"
    g3 = Graph(g.n, list(g.edges) + [(ear[2], q1[2]), (ear[3], q2[3])])
    assert classify_jump(g3, c, ear).kind == "other"


def test_local_jump_across_one_vertex():
    # C6 with a jump from 0 to 2 whose interior sees vertex 1
    g = Graph(9, list(cycle(6).edges) + [(0, 6), (6, 7), (7, 8), (8, 2), (7, 1)])
    c = Hole.from_cycle(range(6))
    j = classify_jump(g, c, (0, 6, 7, 8, 2))
    assert j.kind == "local" and j.across_one_vertex


def test_classify_rejects_malformed():
    g, c, ear = _theta_hole(5, 5, 5)
    with pytest.raises(MalformedJump):
        classify_jump(g, c, ear[:-1])  # ends off the hole
    with pytest.raises(MalformedJump):
        classify_jump(c10(), Hole.from_cycle(range(10)), (0, 1))
    with pytest.raises(MalformedJump):
        classify_jump(g, c, (0, 2, 3))


def test_classify_reversal_invariant():
    g, c, ear = _theta_hole(5, 5, 6)
    assert classify_jump(g, c, ear) == classify_jump(g, c, ear[::-1])


def test_extract_short_jump_examples():
    g, c, ear = _theta_hole(5, 5, 5)
    j = extract_short_jump(g, c, ear)
    assert j.path.vertices == ear
    # C10 plus an outside (0,5)-path of length 6 with a shortcut chord inside it
    base = list(cycle(10).edges)
    p = (0, 10, 11, 12, 13, 14, 5)
    g2 = Graph(15, base + list(zip(p, p[1:])) + [(10, 13)])
    c10h = Hole.from_cycle(range(10))
    j = extract_short_jump(g2, c10h, p)
    assert j.kind == "short" and j.length < 6
    assert j.path.vertices == (0, 10, 13, 14, 5)
    # three interior vertices next to C
    g3 = Graph(15, base + list(zip(p, p[1:])) + [(12, 3)])
    with pytest.raises(PreconditionViolated):
        extract_short_jump(g3, c10h, p)
    with pytest.raises(PreconditionViolated):
        extract_short_jump(g2, c10h, (0, 10, 11, 1))


@pytest.mark.parametrize("e1, e2, expect", [
    ((0, 5), (1, 4), JumpPairRelation("parallel", None)),
    ((0, 5), (2, 7), JumpPairRelation("crossing", None)),
    ((0, 5), (5, 8), JumpPairRelation("parallel", 5)),
])
def test_relate_jump_examples(e1, e2, expect):
    g = Graph(14, list(cycle(10).edges) + [
        (e1[0], 10), (10, 11), (11, e1[1]),
        (e2[0], 12), (12, 13), (13, e2[1]),
    ])
    c = Hole.from_cycle(range(10))
    j1 = classify_jump(g, c, (e1[0], 10, 11, e1[1]))
    j2 = classify_jump(g, c, (e2[0], 12, 13, e2[1]))
    assert relate_jumps(c, j1, j2) == expect
    assert relate_jumps(c, j2, j1) == expect


def test_relate_needs_same_hole():
    g, c, ear = _theta_hole(5, 5, 5)
    j = classify_jump(g, c, ear)
    other = Hole.from_cycle((0,) + tuple(range(10, 14)) + (1,) + tuple(range(2, 6)))
    with pytest.raises(HoleMismatch):
        relate_jumps(other, j, j)


@settings(max_examples=300, deadline=None)
@given(sparse_graphs(min_n=5, max_n=10))
def test_jumps_match_oracle(g):
    for c in enumerate_holes(g).holes:
        js, tr = jumps_over(g, c)
        assert not tr
        assert [j.path for j in js] == jump_paths_by_subsets(g, c)


@settings(max_examples=150, deadline=None)
@given(sparse_graphs(min_n=5, max_n=11))
def test_jump_properties(g):
    for c in enumerate_holes(g).holes:
        if not c.is_even:
            continue
        js, _ = enumerate_jumps(g, c)
        for j in js:
            assert classify_jump(g, c, j.path.reversed()) == j
            q1, q2 = j.arcs()
            assert q1[0] == q2[0] == j.endpoints[0] and q1[-1] == q2[-1] == j.endpoints[1]
            assert len(q1) + len(q2) - 2 == c.length
            if j.kind == "short":
                assert (j.jtype == "type-o") == bool((j.length + len(q2) - 1) % 2)
        for a in js:
            for b in js:
                assert relate_jumps(c, a, b) == relate_jumps(c, b, a)


def test_jump_to_json():
    g, c, ear = _theta_hole(5, 5, 6)
    d = classify_jump(g, c, ear).to_json()
    assert d["path"] == list(ear) and d["jtype"] == "type-o" and d["length"] == 6
    assert PathWitness(tuple(d["path"])).is_induced_in(g)
