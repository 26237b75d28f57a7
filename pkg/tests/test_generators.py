from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evenhole.errors import GenerationFailed, InvalidSpec
from evenhole.generators import GeneratorSpec, from_recipe, generate, theta
from evenhole.holes import enumerate_holes, girth
from evenhole.structure import classify_k4, enumerate_k4_subdivisions


def test_cycle_example():
    g = generate(GeneratorSpec("cycle", (10,))).graph
    assert g.n == 10 and g.m == 10 and girth(g) == 10


def test_theta_556_counts():
    # 2 branch vertices + 4 + 4 + 5 interior vertices
    g = theta(5, 5, 6)
    assert (g.n, g.m) == (15, 16)
    assert sorted(h.length for h in enumerate_holes(g).holes) == [10, 11, 11]


def test_k4_all_fours():
    g = generate(GeneratorSpec("k4-subdivision", (4,) * 6)).graph
    (h,), _ = enumerate_k4_subdivisions(g)
    assert sorted(h.face_lengths.values()) == [12] * 4 and classify_k4(h)[0] == "even"


def test_labelling_branch_vertices_first():
    g = theta(2, 3, 4)
    assert g.degree(0) == g.degree(1) == 3
    assert all(g.degree(v) == 2 for v in range(2, g.n))
    assert g.has_edge(0, 2) and g.has_edge(2, 1)


@pytest.mark.parametrize("family, params", [
    ("theta", (1, 1, 3)),
    ("theta", (0, 2, 3)),
    ("theta", (2, 3)),
    ("k4-subdivision", (1, 1, 1, 1, 1, 0)),
    ("prism-fig-a", (-1, 1, 1, 1, 1, 1, 1, 1, 1)),
    ("cycle", (2,)),
    ("ear-attach", (10, 8, 2, 3)),
    ("random-girth", (5, 2000, 4)),
    ("mystery", (1,)),
])
def test_invalid_specs(family, params):
    with pytest.raises(InvalidSpec):
        generate(GeneratorSpec(family, params))


def test_parse_params():
    assert GeneratorSpec.parse("theta", "5,5,6").params == (5, 5, 6)
    with pytest.raises(InvalidSpec):
        GeneratorSpec.parse("theta", "5,x,6")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4))
def test_ear_attach_deterministic_and_replayable(seed, n_ears):
    spec = GeneratorSpec("ear-attach", (8, 9, n_ears, 6), seed)
    a, b = generate(spec), generate(spec)
    assert a.graph == b.graph and a.recipe == b.recipe
    assert girth(a.graph) >= 8
    assert from_recipe(a.recipe) == a.graph
    assert len(a.recipe) == 1 + n_ears


def test_ear_attach_gives_up():
    # a triangle cannot take an ear without creating a cycle shorter than 9
    with pytest.raises(GenerationFailed):
        generate(GeneratorSpec("ear-attach", (9, 9, 1, 1), 0))


@pytest.mark.parametrize("seed", range(5))
def test_random_girth(seed):
    res = generate(GeneratorSpec("random-girth", (14, 250, 5), seed))
    assert girth(res.graph) == 5 and res.graph.is_connected()
    assert res.graph == generate(GeneratorSpec("random-girth", (14, 250, 5), seed)).graph


def test_spec_json():
    spec = GeneratorSpec("theta", (5, 5, 6))
    assert spec.to_json() == {"family": "theta", "params": [5, 5, 6], "seed": None}
