"""Jumps over holes: enumeration, classification, short-jump extraction and
the parallel/crossing relation between two jumps."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import HoleMismatch, MalformedJump, NotAnEvenHole, PreconditionViolated
from .graph import Graph, PathWitness, bits, to_mask
from .holes import DEFAULT_BUDGET, Hole
from .structure import Budget, induced_paths


@dataclass(frozen=True)
class Jump:
    """An induced ``(s, t)``-path over a hole, oriented so that ``s < t``.

    ``Q1`` is the arc of the hole from ``s`` to ``t`` following the hole's
    vertex order, ``Q2`` the other arc.  ``crossed_side`` names the arc whose
    interior meets the jump's interior for local jumps.
    """

    hole: Hole
    endpoints: tuple[int, int]
    path: PathWitness
    kind: str  # short | local | other
    crossed_side: str | None
    across_one_vertex: bool
    jtype: str  # type-o | type-e | n/a

    @property
    def length(self) -> int:
        return self.path.length

    @property
    def interior(self) -> tuple[int, ...]:
        return self.path.interior

    def arcs(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return hole_arcs(self.hole, *self.endpoints)

    def to_json(self) -> dict:
        return {
            "hole": list(self.hole.vertices),
            "endpoints": list(self.endpoints),
            "path": list(self.path.vertices),
            "length": self.length,
            "kind": self.kind,
            "crossed_side": self.crossed_side,
            "across_one_vertex": self.across_one_vertex,
            "jtype": self.jtype,
        }


@dataclass(frozen=True)
class JumpPairRelation:
    relation: str  # parallel | crossing
    shared_end: int | None = None


def hole_arcs(c: Hole, s: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two ``(s, t)``-paths of the hole: forward from ``s`` first, then the other one."""
    vs = c.vertices
    k = len(vs)
    pos = c.position()
    i, j = pos[s], pos[t]
    q1 = tuple(vs[(i + d) % k] for d in range((j - i) % k + 1))
    q2 = tuple(vs[(i - d) % k] for d in range((i - j) % k + 1))
    return q1, q2


def classify_jump(g: Graph, c: Hole, p: PathWitness | Sequence[int]) -> Jump:
    """Classify an induced path over ``c`` as short, local or other."""
    if not isinstance(p, PathWitness):
        p = PathWitness(tuple(p))
    if not c.is_hole_in(g):
        raise MalformedJump("the cycle is not a hole of the graph")
    if p.length < 1 or not p.is_induced_in(g):
        raise MalformedJump(f"{p.vertices} is not an induced path")
    s, t = p.ends
    cset = c.vertex_set
    if s not in cset or t not in cset:
        raise MalformedJump("both ends must lie on the hole")
    if g.has_edge(s, t):
        raise MalformedJump("ends are adjacent")
    if cset & set(p.interior):
        raise MalformedJump("interior meets the hole")
    if s > t:
        p = p.reversed()
        s, t = t, s
    q1, q2 = hole_arcs(c, s, t)
    near = 0
    for v in p.interior:
        near |= g.mask[v]
    hit1 = bool(near & to_mask(q1[1:-1]))
    hit2 = bool(near & to_mask(q2[1:-1]))
    if not hit1 and not hit2:
        kind, side, one = "short", None, False
    elif hit1 and hit2:
        kind, side, one = "other", None, False
    else:
        kind = "local"
        side = "Q1" if hit1 else "Q2"
        crossed = q1 if hit1 else q2
        one = len(crossed) - 2 == 1
    if kind == "short" and c.is_even:
        jtype = "type-o" if (p.length + len(q1) - 1) % 2 else "type-e"
    else:
        jtype = "n/a"
    return Jump(c, (s, t), p, kind, side, one, jtype)


def jumps_over(g: Graph, c: Hole, budget: int = DEFAULT_BUDGET) -> tuple[list[Jump], bool]:
    """All jumps over any hole ``c`` (odd holes allowed), plus a truncation flag."""
    if not c.is_hole_in(g):
        raise NotAnEvenHole("the cycle is not a hole of the graph")
    b = Budget(budget)
    mask = g.mask
    cmask = to_mask(c.vertices)
    outside = g.all_mask & ~cmask
    found: list[tuple[int, ...]] = []

    def rec(path: list[int], blocked: int) -> None:
        # blocked: N[s] and the closed neighbourhoods of all interior vertices but the last
        if not b.tick():
            return
        last = path[-1]
        s = path[0]
        for t in bits(mask[last] & cmask & ~blocked):
            if t > s:
                found.append(tuple(path) + (t,))
        nxt = blocked | mask[last] | 1 << last
        for w in bits(mask[last] & outside & ~blocked):
            path.append(w)
            rec(path, nxt)
            path.pop()
            if b.exhausted:
                return

    for s in sorted(c.vertices):
        start = mask[s] | 1 << s
        for v1 in bits(mask[s] & outside):
            rec([s, v1], start)
            if b.exhausted:
                break
        if b.exhausted:
            break
    out = [classify_jump(g, c, p) for p in found]
    out.sort(key=lambda j: (j.endpoints, j.path.vertices))
    return out, b.exhausted


def enumerate_jumps(g: Graph, c: Hole, budget: int = DEFAULT_BUDGET) -> tuple[list[Jump], bool]:
    """All jumps over the even hole ``c``, classified, plus a truncation flag."""
    if not c.is_hole_in(g) or not c.is_even:
        raise NotAnEvenHole(f"{c.vertices} is not an even hole of the graph")
    return jumps_over(g, c, budget)


def _shortest_path_within(g: Graph, allowed: int, s: int, t: int) -> tuple[int, ...] | None:
    parent = {s: -1}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            break
        for w in bits(g.mask[v] & allowed):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if t not in parent:
        return None
    path = [t]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def extract_short_jump(g: Graph, c: Hole, p: PathWitness | Sequence[int]) -> Jump | None:
    """A short ``(s, t)``-jump inside ``G[V(P)]``.

    Takes a shortest ``(s, t)``-path of ``G[V(P)]``; if that one is not short
    (possible only outside the graph class), falls back to scanning every
    induced ``(s, t)``-path of ``G[V(P)]``.  Returns ``None`` when no short
    jump exists there.
    """
    if not isinstance(p, PathWitness):
        p = PathWitness(tuple(p))
    if not p.is_path_in(g):
        raise PreconditionViolated("P is not a path of the graph")
    s, t = p.ends
    cset = c.vertex_set
    if not c.is_hole_in(g):
        raise PreconditionViolated("C is not a hole of the graph")
    if s not in cset or t not in cset:
        raise PreconditionViolated("the ends of P must lie on C")
    if g.has_edge(s, t) or s == t:
        raise PreconditionViolated("the ends of P must be non-adjacent")
    if cset & set(p.interior):
        raise PreconditionViolated("V(P*) meets V(C)")
    cmask = to_mask(c.vertices)
    near_c = sum(1 for v in p.interior if g.mask[v] & cmask)
    if near_c > 2:
        raise PreconditionViolated(f"|V(P*) & N(C)| = {near_c} > 2")
    allowed = to_mask(p.vertices)
    sp = _shortest_path_within(g, allowed, s, t)
    if sp is not None:
        j = classify_jump(g, c, sp)
        if j.kind == "short":
            return j
    for q in induced_paths(g, s, t, allowed & ~cmask, Budget()):
        j = classify_jump(g, c, q)
        if j.kind == "short":
            return j
    return None


def relate_jumps(c: Hole, j1: Jump, j2: Jump) -> JumpPairRelation:
    """Parallel or crossing, after replacing each jump by a chord of ``c``."""
    if j1.hole != c or j2.hole != c:
        raise HoleMismatch("both jumps must be over the given hole")
    shared = set(j1.endpoints) & set(j2.endpoints)
    if shared:
        return JumpPairRelation("parallel", min(shared))
    pos = c.position()
    a, b = sorted(pos[v] for v in j1.endpoints)
    inside = [a < pos[v] < b for v in j2.endpoints]
    if inside[0] == inside[1]:
        return JumpPairRelation("parallel", None)
    return JumpPairRelation("crossing", None)
