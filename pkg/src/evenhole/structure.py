"""Induced theta subgraphs, induced K4-subdivisions, induced trees and
prism-like (wheel) witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import MalformedWitness, PreconditionViolated
from .graph import Graph, PathWitness, bits, cycle_edges, path_edges, to_mask
from .holes import DEFAULT_BUDGET, Hole, canonical_cycle, girth


class Budget:
    """Shared node counter for the exponential searches."""

    def __init__(self, limit: int = DEFAULT_BUDGET) -> None:
        self.limit = limit
        self.used = 0
        self.exhausted = False

    def tick(self, k: int = 1) -> bool:
        self.used += k
        if self.used > self.limit:
            self.exhausted = True
        return not self.exhausted


def induced_paths(
    g: Graph, x: int, y: int, allowed: int, budget: Budget, max_len: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Induced ``(x, y)``-paths whose interior lies in ``allowed`` (a bitmask).

    Yields full vertex tuples ``(x, ..., y)``.  When ``x`` and ``y`` are
    adjacent the only induced path is the edge itself.
    """
    mask = g.mask
    if mask[x] >> y & 1:
        yield (x, y)
        return
    allowed &= ~(1 << x | 1 << y)
    ny = mask[y]
    path = [x]

    def rec(last: int, blocked: int) -> Iterator[tuple[int, ...]]:
        # blocked: path vertices and neighbours of every path vertex but `last`
        if not budget.tick():
            return
        if max_len is not None and len(path) >= max_len:
            return
        nxt_blocked = blocked | mask[last]
        for w in bits(mask[last] & allowed & ~blocked):
            if ny >> w & 1:
                path.append(w)
                yield tuple(path) + (y,)
                path.pop()
                continue
            path.append(w)
            yield from rec(w, nxt_blocked | 1 << w)
            path.pop()
            if budget.exhausted:
                return

    for v1 in bits(mask[x] & allowed):
        if ny >> v1 & 1:
            yield (x, v1, y)
            continue
        path.append(v1)
        yield from rec(v1, mask[x] | 1 << x | 1 << v1)
        path.pop()
        if budget.exhausted:
            return


def _interior_mask(p: Sequence[int]) -> int:
    return to_mask(p[1:-1])


# ---------------------------------------------------------------------------
# thetas


@dataclass(frozen=True)
class ThetaWitness:
    branch_pair: tuple[int, int]
    ears: tuple[PathWitness, PathWitness, PathWitness]

    @property
    def ear_lengths(self) -> tuple[int, int, int]:
        return tuple(sorted(e.length for e in self.ears))  # type: ignore[return-value]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for e in self.ears for v in e.vertices)

    def cycles(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        """The three cycles, keyed by the ear indices they use."""
        out = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            cyc = self.ears[i].vertices + tuple(reversed(self.ears[j].vertices[1:-1]))
            out.append(((i, j), canonical_cycle(cyc)))
        return out

    def validate(self, g: Graph) -> None:
        x, y = self.branch_pair
        if x == y:
            raise MalformedWitness("branch vertices coincide")
        if sum(e.length == 1 for e in self.ears) > 1:
            raise MalformedWitness("two ears of length one")
        for e in self.ears:
            if set(e.ends) != {x, y} or not e.is_path_in(g):
                raise MalformedWitness(f"ear {e.vertices} is not an ({x},{y})-path")
        _check_induced_union(g, [e.vertices for e in self.ears])

    def to_json(self) -> dict:
        return {
            "branch_pair": list(self.branch_pair),
            "ears": [list(e.vertices) for e in self.ears],
            "ear_lengths": list(self.ear_lengths),
        }


def _check_induced_union(g: Graph, paths: Sequence[Sequence[int]]) -> None:
    interiors = [set(p[1:-1]) for p in paths]
    for a, b in combinations(range(len(interiors)), 2):
        if interiors[a] & interiors[b]:
            raise MalformedWitness("ear interiors intersect")
    ends = set()
    for p in paths:
        ends.update((p[0], p[-1]))
    for s in interiors:
        if s & ends:
            raise MalformedWitness("an ear interior contains a branch vertex")
    _check_edges_induced(g, paths)


def _check_edges_induced(g: Graph, paths: Sequence[Sequence[int]]) -> None:
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for p in paths:
        verts.update(p)
        edges |= path_edges(p)
    for u in verts:
        for w in g.adj(u):
            if w in verts and (min(u, w), max(u, w)) not in edges:
                raise MalformedWitness(f"union is not induced: extra edge {u}-{w}")


def _theta_canonical(x: int, y: int, ears: Sequence[tuple[int, ...]]) -> ThetaWitness:
    ws = sorted((PathWitness(e) for e in ears), key=lambda p: (p.length, p.vertices))
    return ThetaWitness((x, y), tuple(ws))  # type: ignore[arg-type]


def enumerate_thetas(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[list[ThetaWitness], bool]:
    """All induced theta subgraphs, one witness per subgraph, plus a truncation flag."""
    b = Budget(budget)
    out = []
    deg = g.degrees()
    cand = [v for v in g.vertices() if deg[v] >= 3]
    mask = g.mask
    full = g.all_mask
    for x, y in combinations(cand, 2):
        allowed = full & ~(1 << x | 1 << y)
        if mask[x] >> y & 1:
            # one ear is the edge xy; the other two must be longer
            paths = _long_paths(g, x, y, allowed, b)
            for (p, pm, pn), (q, qm, qn) in combinations(paths, 2):
                if pm & (qm | qn) == 0:
                    out.append(_theta_canonical(x, y, [(x, y), p, q]))
        else:
            paths = _long_paths(g, x, y, allowed, b)
            for i, j in combinations(range(len(paths)), 2):
                p, pm, pn = paths[i]
                q, qm, qn = paths[j]
                if pm & (qm | qn):
                    continue
                both = pm | qm
                both_n = pn | qn
                for k in range(j + 1, len(paths)):
                    r, rm, rn = paths[k]
                    if rm & (both | both_n) == 0:
                        out.append(_theta_canonical(x, y, [p, q, r]))
                b.tick()
        if b.exhausted:
            break
    out.sort(key=_theta_key)
    return out, b.exhausted


def _theta_key(t: ThetaWitness):
    return (t.branch_pair, tuple(e.vertices for e in t.ears))


def _long_paths(g: Graph, x: int, y: int, allowed: int, b: Budget):
    """Induced (x,y)-paths of length >= 2 through ``allowed``; an edge ``xy`` is ignored."""
    mask = g.mask
    if mask[x] >> y & 1:
        paths = _paths_ignoring_edge(g, x, y, allowed, b)
    else:
        paths = list(induced_paths(g, x, y, allowed, b))
    out = []
    for p in paths:
        nm = 0
        for v in p[1:-1]:
            nm |= mask[v]
        out.append((p, _interior_mask(p), nm))
    return out


def _paths_ignoring_edge(g: Graph, x: int, y: int, allowed: int, b: Budget) -> list[tuple[int, ...]]:
    """Paths x..y of length >= 2 that are induced apart from the edge xy itself."""
    mask = list(g.mask)
    mask[x] &= ~(1 << y)
    mask[y] &= ~(1 << x)
    h = _MaskView(g.n, tuple(mask))
    return list(induced_paths(h, x, y, allowed, b))  # type: ignore[arg-type]


class _MaskView:
    """Minimal stand-in exposing ``mask`` for searches on a modified edge set."""

    def __init__(self, n: int, mask: tuple[int, ...]) -> None:
        self.n = n
        self.mask = mask


# ---------------------------------------------------------------------------
# K4-subdivisions

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
TRIANGLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


@dataclass(frozen=True)
class K4Subdivision:
    """An induced subdivision of K4.

    ``ears[(a, b)]`` is the path between branch vertices ``a < b`` (actual
    vertex ids), oriented from ``a`` to ``b``.  ``face_cycles`` maps each
    triple of branch vertices to the cycle formed by its three ears.
    """

    branch_vertices: tuple[int, int, int, int]
    ears: dict[tuple[int, int], PathWitness] = field(hash=False, compare=True)
    face_cycles: dict[tuple[int, int, int], tuple[int, ...]] = field(hash=False, compare=True)

    @classmethod
    def from_ears(cls, branch: Sequence[int], ears: dict[tuple[int, int], Sequence[int]]) -> "K4Subdivision":
        bv = tuple(sorted(branch))
        norm: dict[tuple[int, int], PathWitness] = {}
        for (a, b), p in ears.items():
            p = tuple(p)
            if p[0] > p[-1]:
                p = tuple(reversed(p))
            norm[(min(a, b), max(a, b))] = PathWitness(p)
        faces = {}
        for i, j, k in TRIANGLES:
            a, b, c = bv[i], bv[j], bv[k]
            ab = norm[(a, b)].vertices
            bc = norm[(b, c)].vertices
            ac = norm[(a, c)].vertices
            cyc = ab + bc[1:] + tuple(reversed(ac[1:-1]))
            faces[(a, b, c)] = canonical_cycle(cyc)
        return cls(bv, norm, faces)  # type: ignore[arg-type]

    @property
    def ear_lengths(self) -> dict[tuple[int, int], int]:
        return {k: p.length for k, p in sorted(self.ears.items())}

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.ears.values() for v in p.vertices)

    @property
    def face_lengths(self) -> dict[tuple[int, int, int], int]:
        return {k: len(c) for k, c in sorted(self.face_cycles.items())}

    def face_ears(self, face: tuple[int, int, int]) -> list[tuple[int, int]]:
        a, b, c = face
        return [(a, b), (a, c), (b, c)]

    @property
    def kind(self) -> str:
        return classify_k4(self)[0]

    @property
    def balanced_type(self) -> str:
        return classify_k4(self)[1]

    def validate(self, g: Graph) -> None:
        bv = self.branch_vertices
        if len(set(bv)) != 4 or tuple(sorted(bv)) != bv:
            raise MalformedWitness("branch vertices must be 4 distinct sorted ids")
        if set(self.ears) != {(bv[i], bv[j]) for i, j in PAIRS}:
            raise MalformedWitness("ears must be keyed by the six branch pairs")
        for (a, b), p in self.ears.items():
            if p.ends != (a, b) or not p.is_induced_in(g):
                raise MalformedWitness(f"ear {p.vertices} is not an induced ({a},{b})-path")
        _check_induced_union(g, [p.vertices for p in self.ears.values()])
        classify_k4(self)

    def to_json(self) -> dict:
        kind, btype = classify_k4(self)
        return {
            "branch_vertices": list(self.branch_vertices),
            "ears": {f"{a}-{b}": list(p.vertices) for (a, b), p in sorted(self.ears.items())},
            "face_cycles": [list(c) for _, c in sorted(self.face_cycles.items())],
            "kind": kind,
            "balanced_type": btype,
        }


def classify_k4(h: K4Subdivision) -> tuple[str, str]:
    """``(kind, balanced_type)`` read off the stored face cycles.

    kind is ``odd`` / ``even`` / ``balanced`` for 4 / 0 / 2 odd faces; the
    balanced type is ``type-1`` when the ear shared by the two even faces
    has length one, ``type-l`` otherwise, and ``n/a`` for other kinds.
    """
    if len(h.face_cycles) != 4:
        raise MalformedWitness("a K4-subdivision has exactly four face cycles")
    for face, cyc in h.face_cycles.items():
        want = set()
        for key in h.face_ears(face):
            if key not in h.ears:
                raise MalformedWitness(f"missing ear {key}")
            want |= path_edges(h.ears[key].vertices)
        if cycle_edges(cyc) != want or len(set(cyc)) != len(cyc):
            raise MalformedWitness(f"face {face} does not match its ears")
    odd = [f for f, c in h.face_cycles.items() if len(c) % 2]
    if len(odd) == 4:
        return "odd", "n/a"
    if len(odd) == 0:
        return "even", "n/a"
    if len(odd) != 2:
        raise MalformedWitness(f"{len(odd)} odd face cycles; the count must be even")
    even = [f for f in h.face_cycles if f not in odd]
    shared = set(h.face_ears(even[0])) & set(h.face_ears(even[1]))
    (key,) = shared
    return "balanced", "type-1" if h.ears[key].length == 1 else "type-l"


def labelled_ear_lengths(h: K4Subdivision) -> dict[str, int]:
    """Ear lengths under the labelling used for balanced subdivisions.

    ``q`` is the ear shared by the two odd faces, ``d`` the one shared by
    the two even faces (the ear opposite ``q``).  With ``q = u1u2`` and
    ``d = u3u4``: ``a1 = u1u3``, ``a2 = u1u4``, ``b1 = u2u3``, ``b2 = u2u4``,
    so the even faces are ``d+a1+a2`` and ``d+b1+b2``.
    """
    kind, _ = classify_k4(h)
    if kind != "balanced":
        raise ValueError("labelled ear lengths are defined for balanced subdivisions")
    odd = [f for f, c in h.face_cycles.items() if len(c) % 2]
    even = [f for f in h.face_cycles if f not in odd]
    (q,) = set(h.face_ears(odd[0])) & set(h.face_ears(odd[1]))
    (d,) = set(h.face_ears(even[0])) & set(h.face_ears(even[1]))
    u1, u2 = q
    u3, u4 = d

    def ln(a: int, b: int) -> int:
        return h.ears[(min(a, b), max(a, b))].length

    return {
        "q": ln(u1, u2), "d": ln(u3, u4),
        "a1": ln(u1, u3), "a2": ln(u1, u4), "b1": ln(u2, u3), "b2": ln(u2, u4),
    }


def enumerate_k4_subdivisions(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[list[K4Subdivision], bool]:
    """All induced K4-subdivisions, one witness per subgraph, plus a truncation flag."""
    b = Budget(budget)
    mask = g.mask
    deg = g.degrees()
    cand = [v for v in g.vertices() if deg[v] >= 3]
    full = g.all_mask
    out: list[K4Subdivision] = []
    for quad in combinations(cand, 4):
        qm = to_mask(quad)
        options = []
        ok = True
        for i, j in PAIRS:
            a, c = quad[i], quad[j]
            others = qm & ~(1 << a | 1 << c)
            forbid = qm
            for o in bits(others):
                forbid |= mask[o]
            allowed = full & ~forbid
            paths = []
            for p in induced_paths(g, a, c, allowed, b):
                im = _interior_mask(p)
                nm = 0
                for v in p[1:-1]:
                    nm |= mask[v]
                paths.append((p, im, nm))
            if not paths:
                ok = False
                break
            options.append(paths)
        if b.exhausted:
            break
        if not ok:
            continue
        order = sorted(range(6), key=lambda k: len(options[k]))
        chosen: list = [None] * 6

        def rec(depth: int, used: int, near: int) -> None:
            if not b.tick():
                return
            if depth == 6:
                ears = {(quad[i], quad[j]): chosen[k][0] for k, (i, j) in enumerate(PAIRS)}
                out.append(K4Subdivision.from_ears(quad, ears))
                return
            k = order[depth]
            for opt in options[k]:
                p, im, nm = opt
                if im & (used | near):
                    continue
                chosen[k] = opt
                rec(depth + 1, used | im, near | nm)
                if b.exhausted:
                    return

        rec(0, 0, 0)
        if b.exhausted:
            break
    out.sort(key=lambda h: (h.branch_vertices, tuple(p.vertices for _, p in sorted(h.ears.items()))))
    return out, b.exhausted


# ---------------------------------------------------------------------------
# induced trees


@dataclass(frozen=True)
class InducedTree:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1 and bool(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def find_induced_tree(g: Graph, s: Sequence[int]) -> InducedTree | None:
    """Shrink ``V(G)`` to an inclusion-minimal connected induced subgraph containing ``s``.

    When ``girth(g) > |s|`` the result is a tree; otherwise ``None`` is
    returned.  Raises :class:`PreconditionViolated` when ``g`` is
    disconnected or ``s`` contains a vertex of degree other than one.
    """
    sset = sorted(set(s))
    for v in sset:
        if not 0 <= v < g.n or g.degree(v) != 1:
            raise PreconditionViolated(f"vertex {v} is not a degree-1 vertex")
    if not g.is_connected():
        raise PreconditionViolated("graph is not connected")
    if not sset:
        return None
    if girth(g) <= len(sset):
        return None
    smask = to_mask(sset)
    alive = g.all_mask
    changed = True
    while changed:
        changed = False
        for x in bits(alive & ~smask):
            rest = alive & ~(1 << x)
            for comp in g.components(rest):
                if comp & smask == smask:
                    alive = comp
                    changed = True
                    break
            if changed:
                break
    vs = tuple(bits(alive))
    edges = tuple(sorted((u, w) for u, w in g.edges if alive >> u & 1 and alive >> w & 1))
    return InducedTree(vs, edges)


# ---------------------------------------------------------------------------
# prism-like witnesses (a hole with a four-spoked hub)


@dataclass(frozen=True)
class PrismWitness:
    """A hole ``C`` with four rim vertices ``r1..r4`` (in cyclic order) joined by
    spokes ``P1..P4`` to a hub path ``P = x..y`` (a single vertex when ``p = 0``).

    In ``fig-a`` the spokes ``P1, P2`` end at ``x`` and ``P3, P4`` at ``y``;
    in ``fig-b`` ``P1, P3`` end at ``x`` and ``P2, P4`` at ``y``.  ``A_i`` is the
    rim arc from ``r_i`` to ``r_{i+1}``.  Spokes are oriented rim -> hub.
    """

    base_hole: Hole
    spokes: tuple[PathWitness, PathWitness, PathWitness, PathWitness]
    arcs: tuple[PathWitness, PathWitness, PathWitness, PathWitness]
    hub: PathWitness
    variant: str

    @property
    def p(self) -> int:
        return self.hub.length

    @property
    def p_lengths(self) -> tuple[int, ...]:
        return tuple(s.length for s in self.spokes)

    @property
    def a_lengths(self) -> tuple[int, ...]:
        return tuple(a.length for a in self.arcs)

    def hub_end(self, i: int) -> int:
        x, y = self.hub.vertices[0], self.hub.vertices[-1]
        at_x = (0, 1) if self.variant == "fig-a" else (0, 2)
        return x if i in at_x else y

    def _hub_segment(self, start: int, stop: int) -> tuple[int, ...]:
        hub = self.hub.vertices
        if start == stop:
            return (start,)
        return hub if hub[0] == start else tuple(reversed(hub))

    def face_cycles(self) -> list[tuple[int, ...]]:
        """``C`` followed by ``C1..C4`` (``C_i`` uses ``A_i``, ``P_i`` and ``P_{i+1}``)."""
        out = [self.base_hole.vertices]
        for i in range(4):
            j = (i + 1) % 4
            arc = self.arcs[i].vertices
            si, sj = self.spokes[i].vertices, self.spokes[j].vertices
            seg = self._hub_segment(sj[-1], si[-1])
            cyc = arc + sj[1:] + seg[1:] + tuple(reversed(si[1:-1]))
            out.append(canonical_cycle(cyc))
        return out

    def validate(self, g: Graph) -> None:
        if self.variant not in ("fig-a", "fig-b"):
            raise MalformedWitness(f"unknown variant {self.variant}")
        if not self.base_hole.is_hole_in(g):
            raise MalformedWitness("base cycle is not a hole")
        if any(s.length < 1 for s in self.spokes) or any(a.length < 1 for a in self.arcs):
            raise MalformedWitness("spokes and arcs need length >= 1")
        rim = [s.vertices[0] for s in self.spokes]
        for i in range(4):
            arc = self.arcs[i].vertices
            if arc[0] != rim[i] or arc[-1] != rim[(i + 1) % 4]:
                raise MalformedWitness("arcs do not join consecutive rim vertices")
        if sorted(v for a in self.arcs for v in a.vertices[:-1]) != sorted(self.base_hole.vertices):
            raise MalformedWitness("arcs do not tile the base hole")
        for i, s in enumerate(self.spokes):
            if s.vertices[-1] != self.hub_end(i):
                raise MalformedWitness(f"spoke P{i + 1} ends at the wrong hub end")
        named = [(f"A{i}", a.vertices) for i, a in enumerate(self.arcs)]
        named += [(f"P{i}", s.vertices) for i, s in enumerate(self.spokes)]
        if self.hub.length > 0:
            named.append(("H", self.hub.vertices))
        for _, p in named:
            if not PathWitness(tuple(p)).is_path_in(g):
                raise MalformedWitness(f"{p} is not a path of the graph")
        for (na, pa), (nb, pb) in combinations(named, 2):
            if set(pa) & set(pb) != self._expected_overlap(na, nb):
                raise MalformedWitness(f"{na} and {nb} overlap incorrectly")
        _check_edges_induced(g, [p for _, p in named])

    def _expected_overlap(self, na: str, nb: str) -> set[int]:
        # names: A<i> rim arcs, P<i> spokes, H the hub (always listed last)
        rim = [s.vertices[0] for s in self.spokes]
        i = int(na[1:])
        if nb == "H":
            return {self.hub_end(i)} if na[0] == "P" else set()
        j = int(nb[1:])
        if na[0] == "A" and nb[0] == "A":
            if (i + 1) % 4 == j:
                return {rim[j]}
            if (j + 1) % 4 == i:
                return {rim[i]}
            return set()
        if na[0] == "A":
            return {rim[j]} if j in (i, (i + 1) % 4) else set()
        return {self.hub_end(i)} if self.hub_end(i) == self.hub_end(j) else set()

    def to_json(self) -> dict:
        return {
            "base_hole": list(self.base_hole.vertices),
            "spokes": [list(s.vertices) for s in self.spokes],
            "arcs": [list(a.vertices) for a in self.arcs],
            "hub": list(self.hub.vertices),
            "variant": self.variant,
            "p": self.p,
            "p_lengths": list(self.p_lengths),
            "a_lengths": list(self.a_lengths),
        }


def prism_from_parts(hole: Hole, rim: Sequence[int], spokes: Sequence[Sequence[int]],
                     hub: Sequence[int]) -> PrismWitness:
    """Assemble a witness from four rim vertices (any order), their spokes
    (rim -> hub end) and the hub path.  The rim order follows the hole."""
    pos = hole.position()
    k = hole.length
    order = sorted(range(4), key=lambda i: pos[rim[i]])
    rim = [rim[i] for i in order]
    spokes = [tuple(spokes[i]) for i in order]
    arcs = []
    for i in range(4):
        a, b = pos[rim[i]], pos[rim[(i + 1) % 4]]
        steps = (b - a) % k
        arcs.append(PathWitness(tuple(hole.vertices[(a + t) % k] for t in range(steps + 1))))
    hub_t = tuple(hub)
    ends = [s[-1] for s in spokes]
    variant = "fig-a"
    if len(hub_t) > 1:
        if ends[1] == ends[2]:
            rim, spokes, arcs = rim[1:] + rim[:1], spokes[1:] + spokes[:1], arcs[1:] + arcs[:1]
            ends = [s[-1] for s in spokes]
        elif ends[0] == ends[2]:
            variant = "fig-b"
        if hub_t[0] != ends[0]:
            hub_t = tuple(reversed(hub_t))
    return PrismWitness(hole, tuple(PathWitness(s) for s in spokes),  # type: ignore[arg-type]
                        tuple(arcs), PathWitness(hub_t), variant)  # type: ignore[arg-type]
