"""Deterministic generators for cycles, thetas, K4-subdivisions, the two
prism-like families, ear-attachment growth and random graphs of given girth.

Labelling: branch vertices first, then ear interiors in parameter order,
each ear walked from its first-named end.

K4-subdivision parameters are ``a1, a2, b1, b2, d, q`` with branch
vertices ``u1..u4 = 0..3`` and ears ``A1 = u1u3``, ``A2 = u1u4``,
``B1 = u2u3``, ``B2 = u2u4``, ``D = u3u4``, ``Q = u1u2``.  So ``Q`` is the
ear opposite ``D``; the faces are ``Q+A1+B1``, ``Q+A2+B2``, ``D+A1+A2`` and
``D+B1+B2``.

Prism parameters are ``p, p1..p4, a1..a4``: rim vertices ``r1..r4 = 0..3``
in cyclic order, hub ends ``x = 4`` and ``y = 5`` (only ``x`` when
``p = 0``), spokes ``P_i`` from ``r_i`` to the hub and arcs ``A_i`` from
``r_i`` to ``r_{i+1}``.  In ``prism-fig-a`` spokes 1, 2 meet ``x`` and 3, 4
meet ``y``; in ``prism-fig-b`` spokes 1, 3 meet ``x`` and 2, 4 meet ``y``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import GenerationFailed, InvalidSpec
from .graph import Graph, PathWitness
from .holes import INFINITE, Hole, girth, shortest_cycle
from .structure import PrismWitness

FAMILIES = ("cycle", "theta", "k4-subdivision", "prism-fig-a", "prism-fig-b", "ear-attach", "random-girth")

K4_EARS = (("a1", 0, 2), ("a2", 0, 3), ("b1", 1, 2), ("b2", 1, 3), ("d", 2, 3), ("q", 0, 1))

MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple[int, ...]
    seed: int | None = None

    def validate(self) -> None:
        f, ps = self.family, self.params
        if f not in FAMILIES:
            raise InvalidSpec(f"unknown family {f!r}")
        need = {"cycle": 1, "theta": 3, "k4-subdivision": 6, "prism-fig-a": 9, "prism-fig-b": 9,
                "ear-attach": 4, "random-girth": 3}[f]
        if len(ps) != need:
            raise InvalidSpec(f"{f} takes {need} parameters, got {len(ps)}")
        if f == "cycle" and ps[0] < 3:
            raise InvalidSpec("a cycle needs at least 3 vertices")
        if f == "theta":
            if min(ps) < 1:
                raise InvalidSpec("theta ears need length >= 1")
            if sum(x == 1 for x in ps) > 1:
                raise InvalidSpec("at most one theta ear may have length 1")
        if f == "k4-subdivision" and min(ps) < 1:
            raise InvalidSpec("K4 ears need length >= 1")
        if f.startswith("prism"):
            if ps[0] < 0:
                raise InvalidSpec("p must be >= 0")
            if min(ps[1:]) < 1:
                raise InvalidSpec("spokes and arcs need length >= 1")
        if f == "ear-attach":
            gt, base, n_ears, max_len = ps
            if gt < 3 or base < gt or n_ears < 0 or max_len < 1:
                raise InvalidSpec("need girth_target >= 3, base_len >= girth_target, n_ears >= 0, max_ear_len >= 1")
        if f == "random-girth":
            n, permille, gt = ps
            if n < 3 or not 0 <= permille <= 1000 or gt < 3 or gt > n:
                raise InvalidSpec("need n >= 3, 0 <= permille <= 1000, 3 <= girth <= n")

    def to_json(self) -> dict:
        return {"family": self.family, "params": list(self.params), "seed": self.seed}

    @classmethod
    def parse(cls, family: str, params: str, seed: int | None = None) -> "GeneratorSpec":
        try:
            ps = tuple(int(x) for x in params.split(",") if x.strip())
        except ValueError as exc:
            raise InvalidSpec(f"bad parameter list {params!r}") from exc
        return cls(family, ps, seed)


@dataclass
class Generated:
    graph: Graph
    spec: GeneratorSpec
    recipe: list = field(default_factory=list)
    prism: PrismWitness | None = None


class _Builder:
    def __init__(self, n_branch: int) -> None:
        self.n = n_branch
        self.edges: list[tuple[int, int]] = []

    def ear(self, u: int, v: int, length: int) -> tuple[int, ...]:
        """Add a ``(u, v)``-path of the given length; returns its vertices."""
        vs = [u] + list(range(self.n, self.n + length - 1)) + [v]
        self.n += length - 1
        self.edges.extend(zip(vs, vs[1:]))
        return tuple(vs)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def theta(a: int, b: int, c: int) -> Graph:
    return generate(GeneratorSpec("theta", (a, b, c))).graph


def k4_subdivision(a1: int, a2: int, b1: int, b2: int, d: int, q: int) -> Graph:
    return generate(GeneratorSpec("k4-subdivision", (a1, a2, b1, b2, d, q))).graph


def _prism(spec: GeneratorSpec) -> Generated:
    p, *rest = spec.params
    ps, as_ = rest[:4], rest[4:]
    hub_n = 1 if p == 0 else 2
    bld = _Builder(4 + hub_n)
    x, y = 4, (4 if p == 0 else 5)
    hub = bld.ear(x, y, p) if p > 0 else (x,)
    at_x = (0, 1) if spec.family == "prism-fig-a" else (0, 2)
    spokes = [bld.ear(i, x if i in at_x else y, ps[i]) for i in range(4)]
    arcs = [bld.ear(i, (i + 1) % 4, as_[i]) for i in range(4)]
    g = bld.graph()
    rim_cycle = []
    for a in arcs:
        rim_cycle.extend(a[:-1])
    w = PrismWitness(
        Hole.from_cycle(rim_cycle),
        tuple(PathWitness(s) for s in spokes),  # type: ignore[arg-type]
        tuple(PathWitness(a) for a in arcs),  # type: ignore[arg-type]
        PathWitness(hub),
        spec.family[len("prism-"):],
    )
    return Generated(g, spec, prism=w)


def _ear_attach(spec: GeneratorSpec) -> Generated:
    target, base, n_ears, max_len = spec.params
    rng = random.Random(spec.seed or 0)
    n = base
    edges = [(i, (i + 1) % base) for i in range(base)]
    recipe: list = [["cycle", base]]
    for _ in range(n_ears):
        for _attempt in range(MAX_ATTEMPTS):
            u, v = sorted(rng.sample(range(n), 2))
            length = rng.randint(1, max_len)
            if length == 1 and ((u, v) in edges or (v, u) in edges):
                continue
            new = list(range(n, n + length - 1))
            vs = [u] + new + [v]
            cand = edges + list(zip(vs, vs[1:]))
            g = Graph(n + length - 1, cand)
            if girth(g) >= target:
                edges = cand
                n += length - 1
                recipe.append(["ear", u, v, length])
                break
        else:
            raise GenerationFailed(f"could not attach ear {len(recipe)} within {MAX_ATTEMPTS} attempts")
    return Generated(Graph(n, edges), spec, recipe)


def _random_girth(spec: GeneratorSpec) -> Generated:
    n, permille, target = spec.params
    rng = random.Random(spec.seed or 0)
    for attempt in range(MAX_ATTEMPTS):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() * 1000 < permille]
        removed = 0
        while True:
            g = Graph(n, edges)
            gir = girth(g)
            if gir == INFINITE or gir >= target:
                break
            cyc = shortest_cycle(g)
            k = len(cyc)
            i = rng.randrange(k)
            e = (min(cyc[i], cyc[(i + 1) % k]), max(cyc[i], cyc[(i + 1) % k]))
            edges.remove(e)
            removed += 1
        if gir == target and g.is_connected():
            return Generated(g, spec, [["attempt", attempt], ["edges_removed", removed]])
    raise GenerationFailed(f"no connected graph of girth {target} after {MAX_ATTEMPTS} attempts")


def generate(spec: GeneratorSpec) -> Generated:
    """Build the graph described by ``spec`` (deterministic given the seed)."""
    spec.validate()
    f, ps = spec.family, spec.params
    if f == "cycle":
        return Generated(cycle(ps[0]), spec)
    if f == "theta":
        bld = _Builder(2)
        for length in ps:
            bld.ear(0, 1, length)
        return Generated(bld.graph(), spec)
    if f == "k4-subdivision":
        bld = _Builder(4)
        for (_, u, v), length in zip(K4_EARS, ps):
            bld.ear(u, v, length)
        return Generated(bld.graph(), spec)
    if f.startswith("prism"):
        return _prism(spec)
    if f == "ear-attach":
        return _ear_attach(spec)
    return _random_girth(spec)


def from_recipe(recipe: Sequence) -> Graph:
    """Rebuild an ear-attach graph from its logged recipe."""
    (kind, base), *ears = recipe
    if kind != "cycle":
        raise InvalidSpec("a recipe starts with ['cycle', n]")
    bld = _Builder(base)
    bld.edges = [(i, (i + 1) % base) for i in range(base)]
    for _, u, v, length in ears:
        bld.ear(u, v, length)
    return bld.graph()
