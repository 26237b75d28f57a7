"""Brute-force reference implementations.

Each routine here answers the same question as a search routine elsewhere
in the package, but by exhaustive enumeration of vertex subsets (or of
vertices and edges), without sharing any code path with the search.  They
are exponential and only meant for graphs with roughly ten vertices.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, PathWitness, bits, to_mask
from .holes import Hole, holes_by_subsets
from .structure import K4Subdivision, ThetaWitness, _theta_canonical

__all__ = [
    "holes_by_subsets",
    "thetas_by_subsets",
    "k4_by_subsets",
    "jump_paths_by_subsets",
    "small_cut_bruteforce",
    "is_proper",
]


def _walk(mask: tuple[int, ...], s: int, start: int, first: int, stop: int) -> tuple[int, ...]:
    """Follow degree-2 vertices inside ``s`` from ``start`` via ``first`` until a vertex in ``stop``."""
    path = [start, first]
    prev, cur = start, first
    while not stop >> cur & 1:
        nxt = [w for w in bits(mask[cur] & s) if w != prev]
        prev, cur = cur, nxt[0]
        path.append(cur)
    return tuple(path)


def _degrees_in(mask: tuple[int, ...], s: int) -> dict[int, int]:
    return {v: (mask[v] & s).bit_count() for v in bits(s)}


def thetas_by_subsets(g: Graph) -> list[ThetaWitness]:
    """Every vertex subset inducing a theta graph."""
    mask = g.mask
    out = []
    for s in range(1 << g.n):
        k = s.bit_count()
        if k < 4:
            continue
        deg = _degrees_in(mask, s)
        if sum(deg.values()) != 2 * (k + 1):
            continue
        branch = [v for v, d in deg.items() if d == 3]
        if len(branch) != 2 or any(d not in (2, 3) for d in deg.values()):
            continue
        if not g.is_connected(s):
            continue
        x, y = branch
        stop = to_mask(branch)
        ears = [_walk(mask, s, x, w, stop) for w in bits(mask[x] & s)]
        if all(e[-1] == y for e in ears):
            out.append(_theta_canonical(x, y, ears))
    return sorted(out, key=lambda t: (t.branch_pair, tuple(e.vertices for e in t.ears)))


def k4_by_subsets(g: Graph) -> list[K4Subdivision]:
    """Every vertex subset inducing a subdivision of K4."""
    mask = g.mask
    out = []
    for s in range(1 << g.n):
        k = s.bit_count()
        if k < 4:
            continue
        deg = _degrees_in(mask, s)
        if sum(deg.values()) != 2 * (k + 2):
            continue
        branch = [v for v, d in deg.items() if d == 3]
        if len(branch) != 4 or any(d not in (2, 3) for d in deg.values()):
            continue
        if not g.is_connected(s):
            continue
        stop = to_mask(branch)
        ears: dict[tuple[int, int], tuple[int, ...]] = {}
        good = True
        for b in branch:
            for w in bits(mask[b] & s):
                e = _walk(mask, s, b, w, stop)
                a, c = e[0], e[-1]
                if a == c:
                    good = False
                    break
                key = (min(a, c), max(a, c))
                oriented = e if a < c else tuple(reversed(e))
                if key in ears and ears[key] != oriented:
                    good = False
                    break
                ears[key] = oriented
            if not good:
                break
        if good and len(ears) == 6:
            out.append(K4Subdivision.from_ears(branch, ears))
    return sorted(out, key=lambda h: (h.branch_vertices, tuple(p.vertices for _, p in sorted(h.ears.items()))))


def jump_paths_by_subsets(g: Graph, hole: Hole) -> list[PathWitness]:
    """All induced paths between non-adjacent hole vertices with interior off the hole.

    Paths are oriented from the smaller to the larger end id.
    """
    mask = g.mask
    cmask = to_mask(hole.vertices)
    outside = [v for v in g.vertices() if not cmask >> v & 1]
    out = []
    for s, t in combinations(sorted(hole.vertices), 2):
        if mask[s] >> t & 1:
            continue
        ends = 1 << s | 1 << t
        for r in range(1, len(outside) + 1):
            for inner in combinations(outside, r):
                sub = to_mask(inner) | ends
                deg = _degrees_in(mask, sub)
                if deg[s] != 1 or deg[t] != 1:
                    continue
                if any(deg[v] != 2 for v in inner):
                    continue
                if not g.is_connected(sub):
                    continue
                first = next(iter(bits(mask[s] & sub)))
                path = _walk(mask, sub, s, first, 1 << t)
                out.append(PathWitness(path))
    return sorted(out, key=lambda p: (p.ends, p.vertices))


def small_cut_bruteforce(g: Graph):
    """Try every vertex, then every edge (lexicographically), for a disconnecting removal."""
    full = g.all_mask
    for v in g.vertices():
        rest = full & ~(1 << v)
        if rest and not g.is_connected(rest):
            return ("K1", (v,))
    for u, v in g.sorted_edges():
        rest = full & ~(1 << u | 1 << v)
        if rest and not g.is_connected(rest):
            return ("K2", (u, v))
    return None


def is_proper(g: Graph, assignment: dict[int, int]) -> bool:
    """Edge scan: every vertex coloured and no edge monochromatic."""
    if set(assignment) != set(g.vertices()):
        return False
    return all(assignment[u] != assignment[v] for u, v in g.edges)
