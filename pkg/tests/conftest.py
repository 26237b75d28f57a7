from __future__ import annotations

import random

from hypothesis import strategies as st

from evenhole.generators import cycle
from evenhole.graph import Graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def c10() -> Graph:
    return cycle(10)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def sparse_graphs(draw, min_n: int = 4, max_n: int = 12):
    """Graphs biased towards low density, where long holes are common."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(n - 1)] if draw(st.booleans()) else []
    extra = draw(st.integers(0, n))
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    return Graph(n, list({(min(e), max(e)) for e in edges}))
