"""Girth, induced-cycle (hole) enumeration and class membership."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExhausted
from .graph import Graph, bits, cycle_edges

DEFAULT_BUDGET = 10**7

INFINITE = math.inf


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the smallest id comes first and orient towards its smaller neighbour."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    if k > 2 and fwd[-1] < fwd[1]:
        fwd = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd


@dataclass(frozen=True, order=True)
class Hole:
    vertices: tuple[int, ...]

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> "Hole":
        return cls(canonical_cycle(cycle))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> str:
        return "even" if self.length % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self):
        return cycle_edges(self.vertices)

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def is_hole_in(self, g: Graph) -> bool:
        """Re-check against ``g``: length >= 4, a cycle, and no chords."""
        vs = self.vertices
        k = len(vs)
        if k < 4 or len(set(vs)) != k or any(not 0 <= v < g.n for v in vs):
            return False
        pos = self.position()
        for i, v in enumerate(vs):
            if not g.has_edge(v, vs[(i + 1) % k]):
                return False
            for w in g.adj(v):
                if w in pos and (pos[w] - i) % k not in (1, k - 1):
                    return False
        return True

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "length": self.length, "parity": self.parity}


@dataclass
class HoleSet:
    holes: list[Hole]
    truncated: bool = False
    budget_used: int = 0

    def to_json(self) -> dict:
        return {
            "holes": [h.to_json() for h in self.holes],
            "truncated": self.truncated,
            "budget_used": self.budget_used,
        }


# ---------------------------------------------------------------------------
# girth


def _bfs_cycle_through(g: Graph, root: int, bound: float) -> tuple[int, tuple[int, ...]] | None:
    """Shortest closed walk found by BFS from ``root`` that is a simple cycle."""
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    best: tuple[int, tuple[int, ...]] | None = None
    while queue:
        v = queue.popleft()
        if 2 * dist[v] + 1 >= (best[0] if best else bound):
            break
        for w in g.adj(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
            elif parent[v] != w and (w > v or dist[w] != dist[v]):
                length = dist[v] + dist[w] + 1
                if length >= (best[0] if best else bound):
                    continue
                left = [v]
                while parent[left[-1]] != -1:
                    left.append(parent[left[-1]])
                right = [w]
                while parent[right[-1]] != -1:
                    right.append(parent[right[-1]])
                cyc = list(reversed(left)) + right[:-1]
                if len(set(cyc)) == len(cyc) == length:
                    best = (length, tuple(cyc))
    return best


def shortest_cycle(g: Graph) -> tuple[int, ...] | None:
    """A cycle of minimum length, or ``None`` for forests."""
    best: tuple[int, tuple[int, ...]] | None = None
    for r in g.vertices():
        found = _bfs_cycle_through(g, r, best[0] if best else INFINITE)
        if found and (best is None or found[0] < best[0]):
            best = found
            if best[0] == 3:
                break
    return canonical_cycle(best[1]) if best else None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = INFINITE
    for r in g.vertices():
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in g.adj(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
        if best == 3:
            break
    return best if best == INFINITE else int(best)


# ---------------------------------------------------------------------------
# hole enumeration


class _Search:
    """Anchored DFS over induced paths.

    The anchor is the smallest vertex of the hole; every other path vertex
    is larger.  A candidate extension ``w`` of the path ``p0..pk`` may only
    touch ``pk`` (and, when it closes the hole, ``p0``).  Each hole is met
    twice (once per direction); only the direction with ``p1 < last`` is
    kept, which is exactly the canonical orientation.
    """

    def __init__(self, g: Graph, min_len: int, max_len: int, budget: int, parity: int | None):
        self.g = g
        self.min_len = min_len
        self.max_len = max_len
        self.budget = budget
        self.parity = parity
        self.used = 0
        self.truncated = False
        self.found: list[Hole] = []
        self.limit: int | None = None

    def run(self, limit: int | None = None) -> None:
        self.limit = limit
        g = self.g
        for a in g.vertices():
            if self.truncated or self._done():
                return
            allowed = g.all_mask & ~((1 << (a + 1)) - 1)
            if (g.mask[a] & allowed).bit_count() < 2:
                continue
            dist = self._distances_to(a, allowed)
            for p1 in bits(g.mask[a] & allowed):
                self._extend(a, [a, p1], (1 << a) | (1 << p1), 0, allowed, dist)
                if self.truncated or self._done():
                    return

    def _done(self) -> bool:
        return self.limit is not None and len(self.found) >= self.limit

    def _distances_to(self, a: int, allowed: int) -> dict[int, int]:
        g = self.g
        dist = {a: 0}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            for w in bits(g.mask[v] & allowed):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def _extend(self, a: int, path: list[int], on_path: int, inner: int, allowed: int, dist) -> None:
        # inner: neighbours of the path vertices strictly between the anchor and the last one
        self.used += 1
        if self.used > self.budget:
            self.truncated = True
            return
        g = self.g
        k = len(path)
        last = path[-1]
        anchor_nbrs = g.mask[a]
        free = g.mask[last] & allowed & ~on_path & ~inner
        if k >= 3:
            for w in bits(free & anchor_nbrs):
                if w <= path[1]:
                    continue
                length = k + 1
                if self.min_len <= length <= self.max_len and (
                    self.parity is None or length % 2 == self.parity
                ):
                    self.found.append(Hole(tuple(path) + (w,)))
                    if self._done():
                        return
        inner2 = inner | g.mask[last]
        for w in bits(free & ~anchor_nbrs):
            d = dist.get(w)
            if d is None or k + d > self.max_len:
                continue
            path.append(w)
            self._extend(a, path, on_path | (1 << w), inner2, allowed, dist)
            path.pop()
            if self.truncated or self._done():
                return


def enumerate_holes(
    g: Graph, min_len: int = 4, max_len: int | None = None, budget: int = DEFAULT_BUDGET
) -> HoleSet:
    """All holes with ``min_len <= length <= max_len``, canonical and sorted."""
    if max_len is None:
        max_len = g.n
    if not 4 <= min_len:
        raise ValueError("min_len must be at least 4")
    if max_len < min_len:
        return HoleSet([], False, 0)
    s = _Search(g, min_len, max_len, budget, None)
    s.run()
    holes = sorted(set(s.found), key=lambda h: (h.length, h.vertices))
    return HoleSet(holes, s.truncated, s.used)


def find_hole(
    g: Graph, min_len: int, max_len: int | None = None, parity: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[Hole | None, bool]:
    """First hole found in the length window (optionally of given parity).

    Returns ``(hole, truncated)``; ``hole`` is ``None`` when none exists or
    the budget ran out first.
    """
    if max_len is None:
        max_len = g.n
    if max_len < min_len:
        return None, False
    s = _Search(g, max(min_len, 4), max_len, budget, parity)
    s.run(limit=1)
    return (s.found[0] if s.found else None), s.truncated


def holes_by_subsets(g: Graph, min_len: int = 4, max_len: int | None = None) -> list[Hole]:
    """Reference oracle: test every vertex subset for inducing a cycle."""
    n = g.n
    if max_len is None:
        max_len = n
    mask = g.mask
    out = []
    for s in range(1 << n):
        k = s.bit_count()
        if k < max(min_len, 4) or k > max_len:
            continue
        if any((mask[v] & s).bit_count() != 2 for v in bits(s)):
            continue
        if not g.is_connected(s):
            continue
        # walk the 2-regular connected set
        start = (s & -s).bit_length() - 1
        cyc = [start]
        prev, cur = -1, start
        while True:
            nxt = [w for w in bits(mask[cur] & s) if w != prev][0]
            if nxt == start:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        out.append(Hole.from_cycle(cyc))
    return sorted(out, key=lambda h: (h.length, h.vertices))


# ---------------------------------------------------------------------------
# membership


@dataclass
class MembershipReport:
    ell: int
    girth: float
    in_H: bool
    in_G: bool
    blocking_witness: dict | None = None
    blocking_witness_g: dict | None = None
    budget_used: int = 0

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "girth": "infinite" if self.girth == INFINITE else int(self.girth),
            "in_H": self.in_H,
            "in_G": self.in_G,
            "blocking_witness": self.blocking_witness,
            "blocking_witness_g": self.blocking_witness_g,
        }


def _blocking(g: Graph, gir: float, target: int, parity: int, budget: int):
    """Witness against 'girth == target and no hole of given parity >= target + 2'."""
    if gir != INFINITE and gir < target:
        cyc = shortest_cycle(g)
        return {"kind": "short-cycle", "vertices": list(cyc), "length": len(cyc)}, 0
    hole, truncated = find_hole(g, target + 2, g.n, parity, budget)
    if truncated:
        raise BudgetExhausted("membership hole search", budget)
    if hole is not None:
        return {"kind": "hole", **hole.to_json()}, 0
    return None, 0


def check_membership(g: Graph, ell: int, budget: int = DEFAULT_BUDGET) -> MembershipReport:
    """Decide membership of ``g`` in H_ell (girth 2*ell, no even hole of length >= 2*ell+2)
    and in G_ell (girth 2*ell+1, no odd hole of length >= 2*ell+3).

    Raises :class:`BudgetExhausted` when the hole search cannot complete.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    gir = girth(g)
    wit_h, _ = _blocking(g, gir, 2 * ell, 0, budget)
    in_h = gir == 2 * ell and wit_h is None
    wit_g, _ = _blocking(g, gir, 2 * ell + 1, 1, budget)
    in_g = gir == 2 * ell + 1 and wit_g is None
    return MembershipReport(
        ell=ell,
        girth=gir,
        in_H=in_h,
        in_G=in_g,
        blocking_witness=None if in_h else wit_h,
        blocking_witness_g=None if in_g else wit_g,
    )


def in_H(g: Graph, ell: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Cheap membership test for H_ell alone."""
    if girth(g) != 2 * ell:
        return False
    hole, truncated = find_hole(g, 2 * ell + 2, g.n, 0, budget)
    if truncated:
        raise BudgetExhausted("membership hole search", budget)
    return hole is None
