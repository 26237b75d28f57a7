"""Constructed corpora of verified H_ell members.

Sources, in order: the cycle ``C_{2 ell}``; thetas ``(a, 2 ell - a, c)``;
K4-subdivisions whose cycle lengths are screened arithmetically; sampled
prism-like graphs; ear-attachment recipes.  Every candidate is confirmed
with :func:`in_H` and isomorphic duplicates are dropped, so
the first source to produce a graph owns it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .canon import certificate
from .errors import GenerationFailed, InvalidSpec
from .generators import GeneratorSpec, generate
from .graph import Graph
from .holes import in_H


@dataclass
class CorpusEntry:
    spec: GeneratorSpec
    graph: Graph
    recipe: list

    def to_json(self) -> dict:
        d = self.spec.to_json()
        if self.recipe:
            d["recipe"] = self.recipe
        return d


def _k4_candidates(ell: int, max_ear: int):
    """Ear vectors whose K4-subdivision has girth ``2 ell`` and no long even hole.

    The cycles of a K4-subdivision are its four faces (always induced) and
    three four-ear cycles, each induced unless one of the two remaining
    ears is a single edge.
    """
    g2 = 2 * ell
    rng = range(1, max_ear + 1)
    for a1, a2, b1, b2, d, q in product(rng, repeat=6):
        faces = (q + a1 + b1, q + a2 + b2, d + a1 + a2, d + b1 + b2)
        quads = (
            (a1 + b1 + b2 + a2, q > 1 and d > 1),
            (q + a1 + d + b2, a2 > 1 and b1 > 1),
            (q + a2 + d + b1, a1 > 1 and b2 > 1),
        )
        if min(min(faces), min(x for x, _ in quads)) != g2:
            continue
        if any(f % 2 == 0 and f != g2 for f in faces):
            continue
        if any(x % 2 == 0 and x != g2 and hole for x, hole in quads):
            continue
        yield (a1, a2, b1, b2, d, q)


def build_corpus(
    ell: int = 5,
    theta_max: int = 29,
    k4_max_ear: int = 11,
    prism_samples: int = 1500,
    ear_seeds: int = 400,
) -> list[CorpusEntry]:
    """A deterministic list of pairwise non-isomorphic H_ell members."""
    seen: set = set()
    out: list[CorpusEntry] = []

    def offer(spec: GeneratorSpec) -> None:
        try:
            res = generate(spec)
        except (InvalidSpec, GenerationFailed):
            return
        if not res.graph.is_connected() or not in_H(res.graph, ell):
            return
        cert = certificate(res.graph)
        if cert in seen:
            return
        seen.add(cert)
        out.append(CorpusEntry(spec, res.graph, res.recipe))

    g2 = 2 * ell
    offer(GeneratorSpec("cycle", (g2,)))
    for a in range(1, ell + 1):
        for c in range(2, theta_max + 1):
            offer(GeneratorSpec("theta", (a, g2 - a, c)))
    for ps in _k4_candidates(ell, k4_max_ear):
        offer(GeneratorSpec("k4-subdivision", ps))
    rng = random.Random(ell)
    for _ in range(prism_samples):
        fam = rng.choice(("prism-fig-a", "prism-fig-b"))
        ps = (rng.randint(0, ell),) + tuple(rng.randint(1, ell + 1) for _ in range(8))
        offer(GeneratorSpec(fam, ps))
    for seed in range(ear_seeds):
        for base in (g2, g2 + 1, g2 + 3):
            for n_ears in (2, 3, 4):
                offer(GeneratorSpec("ear-attach", (g2, base, n_ears, g2), seed))
    return out
