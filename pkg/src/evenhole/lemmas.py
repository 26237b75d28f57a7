"""Executable lemma statements.

Every checker enumerates the instances named by a statement's hypotheses
(holes, thetas, K4-subdivisions, jumps, paths) and evaluates its
conclusion on each.  Class hypotheses are always re-checked, so a verdict
is meaningful for any input graph:

* ``vacuous``: a graph-level hypothesis fails (not in H_ell, ell below the
  statement's bound, or the graph has a vertex of degree <= 2 or a K1/K2
  cut where the statement excludes those);
* ``holds``: hypotheses hold and no instance violates the conclusion
  (possibly with zero instances);
* ``violated``: at least one instance fails; witnesses describe them;
* ``budget_exhausted``: some enumeration was truncated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from .coloring import _lowest_low_degree, _small_cut
from .errors import BudgetExhausted, MalformedWitness
from .graph import Graph, PathWitness, bits, to_mask
from .holes import DEFAULT_BUDGET, Hole, check_membership, enumerate_holes, girth
from .jumps import Jump, classify_jump, extract_short_jump, hole_arcs, jumps_over, relate_jumps
from .structure import (
    Budget,
    K4Subdivision,
    PrismWitness,
    ThetaWitness,
    enumerate_k4_subdivisions,
    enumerate_thetas,
    labelled_ear_lengths,
    find_induced_tree,
    prism_from_parts,
)

LEMMA_IDS = (
    "L-InducedTree",
    "L-ThetaEars",
    "L-HoleNbr",
    "L-ShortJumpExtract",
    "L-XYZ",
    "L-JumpLength",
    "L-OddK4",
    "L-EvenK4",
    "L-BalK4",
    "L-Prism",
    "L-TypeE",
    "L-JumpParity",
    "L-4Vtx",
    "L-ParJumps",
    "L-SPath",
    "T-Decomp",
)

MAX_WITNESSES = 20
STATUSES = ("holds", "violated", "vacuous", "budget_exhausted")


@dataclass
class LemmaVerdict:
    lemma_id: str
    status: str
    instances_checked: int = 0
    witnesses: list[dict] = field(default_factory=list)
    violations: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }

    @classmethod
    def from_json(cls, d: dict) -> "LemmaVerdict":
        return cls(d["lemma_id"], d["status"], d["instances_checked"], d["witnesses"],
                   d["violations"], d["notes"])


class _Vacuous(Exception):
    pass


class _Acc:
    def __init__(self) -> None:
        self.instances = 0
        self.violations = 0
        self.witnesses: list[dict] = []
        self.notes: list[str] = []
        self.truncated = False

    def check(self, ok: bool, witness: Callable[[], dict]) -> None:
        self.instances += 1
        if not ok:
            self.violations += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness())


class Context:
    """Per-graph caches shared by all checkers run on the same graph."""

    def __init__(self, g: Graph, ell: int, budget: int = DEFAULT_BUDGET, check_hypotheses: bool = True) -> None:
        if ell < 2:
            raise ValueError("ell must be at least 2")
        self.g = g
        self.ell = ell
        self.budget = budget
        self.check_hypotheses = check_hypotheses
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def membership(self):
        return self._memo("membership", lambda: check_membership(self.g, self.ell, self.budget))

    def decomposable(self) -> str | None:
        """Why the graph has a vertex of degree <= 2 or a K1/K2-cut, or ``None``."""

        def find():
            g = self.g
            if g.n and not g.is_connected():
                return "disconnected"
            v = _lowest_low_degree(g, g.all_mask)
            if v is not None:
                return f"vertex {v} has degree {g.degree(v)}"
            cut = _small_cut(g, g.all_mask)
            if cut is not None:
                return f"{cut.kind}-cut {list(cut.vertices)}"
            return None

        return self._memo("decomp", find)

    def holes(self) -> tuple[list[Hole], bool]:
        def run():
            hs = enumerate_holes(self.g, 4, self.g.n, self.budget)
            return hs.holes, hs.truncated

        return self._memo("holes", run)

    def even_holes(self) -> tuple[list[Hole], bool]:
        hs, tr = self.holes()
        return [h for h in hs if h.is_even], tr

    def jumps(self, c: Hole) -> tuple[list[Jump], bool]:
        return self._memo(("jumps", c), lambda: jumps_over(self.g, c, self.budget))

    def thetas(self):
        return self._memo("thetas", lambda: enumerate_thetas(self.g, self.budget))

    def k4s(self):
        return self._memo("k4s", lambda: enumerate_k4_subdivisions(self.g, self.budget))

    # hypothesis gates -------------------------------------------------

    def require_class(self, min_ell: int) -> None:
        if not self.check_hypotheses:
            return
        if self.ell < min_ell:
            raise _Vacuous(f"needs ell >= {min_ell}")
        if not self.membership().in_H:
            raise _Vacuous(f"graph is not in H_{self.ell}")

    def require_no_decomposition(self) -> None:
        if not self.check_hypotheses:
            return
        why = self.decomposable()
        if why is not None:
            raise _Vacuous(f"graph has a degree-2 vertex or a small cut ({why})")


# ---------------------------------------------------------------------------
# helpers


def _jump_json(j: Jump) -> dict:
    d = j.to_json()
    d.pop("hole")
    return d


def _crossed_interior(j: Jump) -> tuple[int, ...]:
    q1, q2 = j.arcs()
    return (q1 if j.crossed_side == "Q1" else q2)[1:-1]


def _one_vertex(j: Jump) -> bool:
    return j.kind == "local" and j.across_one_vertex


# ---------------------------------------------------------------------------
# checkers


def _induced_tree(ctx: Context, acc: _Acc) -> None:
    g = ctx.g
    if ctx.check_hypotheses and g.n and not g.is_connected():
        raise _Vacuous("graph is not connected")
    leaves = [v for v in g.vertices() if g.degree(v) == 1]
    gir = girth(g)
    b = Budget(ctx.budget)
    for k in range(1, len(leaves) + 1):
        if not gir > k:
            break
        for s in combinations(leaves, k):
            if not b.tick(g.n):
                acc.truncated = True
                return
            tree = find_induced_tree(g, s)
            ok = tree is not None and tree.is_tree() and set(s) <= set(tree.vertices)
            if ok:
                vm = to_mask(tree.vertices)
                ok = g.is_connected(vm) and len(tree.edges) == sum(
                    (g.mask[v] & vm).bit_count() for v in tree.vertices) // 2
            acc.check(ok, lambda: {"S": list(s), "tree": tree.to_json() if tree else None})


def _theta_ears(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(2)
    ell = ctx.ell
    thetas, tr = ctx.thetas()
    acc.truncated |= tr
    for t in thetas:
        lens = [e.length for e in t.ears]
        odd_pairs = [(i, j) for i, j in ((0, 1), (0, 2), (1, 2)) if (lens[i] + lens[j]) % 2]
        if not odd_pairs:
            ok = all(x == ell for x in lens) or sum(x == 1 for x in lens) == 1
        else:
            (q,) = set(odd_pairs[0]) & set(odd_pairs[1])
            others = [lens[i] for i in range(3) if i != q]
            ok = lens[q] == 1 or lens[q] > max(ell, *others)
        acc.check(ok, lambda: {"theta": t.to_json()})


def _hole_nbr(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(3)
    g = ctx.g
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        cm = to_mask(c.vertices)
        for v in bits(g.all_mask & ~cm):
            nb = list(bits(g.mask[v] & cm))
            acc.check(len(nb) <= 1, lambda: {"hole": list(c.vertices), "vertex": v, "neighbours": nb})


def _short_jump_extract(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(3)
    g = ctx.g
    mask = g.mask
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    b = Budget(ctx.budget)
    for c in holes:
        cm = to_mask(c.vertices)
        outside = g.all_mask & ~cm
        near_c = 0
        for v in c.vertices:
            near_c |= mask[v]
        near_c &= outside

        def rec(path: list[int], on: int, near: int) -> None:
            if not b.tick():
                return
            last = path[-1]
            s = path[0]
            for t in bits(mask[last] & cm):
                if t > s and not mask[s] >> t & 1:
                    p = tuple(path) + (t,)
                    j = extract_short_jump(g, c, p)
                    ok = j is not None and set(j.path.vertices) <= set(p) and set(j.endpoints) == {s, t}
                    acc.check(ok, lambda: {"hole": list(c.vertices), "path": list(p)})
            for w in bits(mask[last] & outside & ~on):
                k = near + (near_c >> w & 1)
                if k > 2:
                    continue
                path.append(w)
                rec(path, on | 1 << w, k)
                path.pop()
                if b.exhausted:
                    return

        for s in c.vertices:
            for v1 in bits(mask[s] & outside):
                rec([s, v1], 1 << s | 1 << v1, 1)
        if b.exhausted:
            acc.truncated = True
            return


def _xyz(ctx: Context, acc: _Acc) -> None:
    ctx.require_no_decomposition()
    g = ctx.g
    holes, tr = ctx.holes()
    acc.truncated |= tr
    for c in holes:
        cm = to_mask(c.vertices)
        if any((g.mask[v] & cm).bit_count() >= 2 for v in bits(g.all_mask & ~cm)):
            continue
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        short_ends = {v for j in jumps if j.kind == "short" for v in j.endpoints}
        one = [j for j in jumps if _one_vertex(j)]
        one_ends = {v for j in one for v in j.endpoints}
        k = c.length
        for i in range(k):
            x, y, z = c.vertices[i - 1], c.vertices[i], c.vertices[(i + 1) % k]
            c1 = x in short_ends or z in short_ends
            c2 = any(set(j.endpoints) == {x, z} and _crossed_interior(j) == (y,) for j in one)
            c3 = y in short_ends or y in one_ends
            acc.check(c1 or c2 or c3, lambda: {"hole": list(c.vertices), "xyz": [x, y, z]})


def _jump_length(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(2)
    ell = ctx.ell
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        for j in jumps:
            if j.kind != "short":
                continue
            q1, q2 = j.arcs()
            ok = j.length >= ell and (j.length == ell) == (j.jtype == "type-e")
            if j.length == ell:
                ok = ok and len(q1) - 1 == ell and len(q2) - 1 == ell
            acc.check(ok, lambda: {"hole": list(c.vertices), "jump": _jump_json(j),
                                   "arc_lengths": [len(q1) - 1, len(q2) - 1]})


def _two_unit_ears_at_a_vertex(h: K4Subdivision) -> bool:
    for b in h.branch_vertices:
        unit = [k for k, p in h.ears.items() if b in k and p.length == 1]
        if len(unit) >= 2:
            return True
    return False


def _odd_k4(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(2)
    k4s, tr = ctx.k4s()
    acc.truncated |= tr
    for h in k4s:
        if h.kind == "odd":
            acc.check(_two_unit_ears_at_a_vertex(h), lambda: {"k4": h.to_json()})


def _even_k4(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(3)
    k4s, tr = ctx.k4s()
    acc.truncated |= tr
    for h in k4s:
        acc.check(h.kind != "even", lambda: {"k4": h.to_json()})


def _bal_k4(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(2)
    ell = ctx.ell
    k4s, tr = ctx.k4s()
    acc.truncated |= tr
    for h in k4s:
        if h.kind != "balanced":
            continue
        f = labelled_ear_lengths(h)
        ok = f["q"] > 1
        if ok and f["d"] > 1:
            ok = f["q"] > ell and f["a1"] + f["a2"] == ell and f["b1"] + f["b2"] == ell and f["d"] == ell
            if ok and ell > 3 and ctx.decomposable() is None:
                ok = (f["a1"] == f["b1"] == 1) or (f["a2"] == f["b2"] == 1)
        acc.check(ok, lambda: {"k4": h.to_json(), "lengths": f})


def _prisms_over(ctx: Context, c: Hole, jumps: list[Jump]) -> list[PrismWitness]:
    """Prism-like configurations made of ``c`` and two jumps meeting in a subpath."""
    g = ctx.g
    seen = set()
    out = []
    for j1, j2 in combinations(jumps, 2):
        if len(set(j1.endpoints) | set(j2.endpoints)) != 4:
            continue
        p1, p2 = j1.path.vertices, j2.path.vertices
        common = set(p1) & set(p2)
        if not common:
            continue
        idx1 = [i for i, v in enumerate(p1) if v in common]
        idx2 = [i for i, v in enumerate(p2) if v in common]
        if idx1[-1] - idx1[0] + 1 != len(idx1) or idx2[-1] - idx2[0] + 1 != len(idx2):
            continue
        a, b = idx1[0], idx1[-1]
        x = p1[a]
        hub = p1[a:b + 1]
        seg = p2[idx2[0]:idx2[-1] + 1]
        if seg == hub[::-1] and seg != hub:
            p2 = p2[::-1]
        elif seg != hub:
            continue
        k = p2.index(x)
        spokes = [p1[:a + 1], tuple(reversed(p1[b:])), p2[:k + 1], tuple(reversed(p2[k + len(hub) - 1:]))]
        rim = [s[0] for s in spokes]
        try:
            w = prism_from_parts(c, rim, spokes, hub)
            w.validate(g)
        except (MalformedWitness, ValueError, KeyError):
            continue
        key = frozenset(v for s in spokes for v in s) | frozenset(c.vertices)
        if key in seen:
            continue
        seen.add(key)
        out.append(w)
    return out


def _prism_conclusion(w: PrismWitness, ell: int) -> bool:
    a = w.a_lengths
    p = w.p_lengths
    if (a[0] == a[2] == 1) or (a[1] == a[3] == 1):
        return True
    if w.variant == "fig-a" and w.p >= 2 * ell - 2 and sorted((a[0], a[2])) == sorted((1, ell)):
        # i in {2, 4}: 0-based arcs 1 and 3 with spokes i, i+1
        for i in (1, 3):
            if a[i] == p[i] == p[(i + 1) % 4] == 1:
                return True
    if w.variant == "fig-b" or w.p == 0:
        if any(a[i] == a[(i + 1) % 4] == 1 for i in range(4)):
            return True
    return False


def _prism(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(4)
    ctx.require_no_decomposition()
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        for w in _prisms_over(ctx, c, jumps):
            acc.check(_prism_conclusion(w, ctx.ell), lambda: {"prism": w.to_json()})


def _type_e(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(3)
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        te = [j for j in jumps if j.kind == "short" and j.jtype == "type-e"]
        if not te:
            continue
        first = te[0].endpoints
        for j in te:
            acc.check(j.endpoints == first, lambda: {"hole": list(c.vertices),
                                                     "jumps": [_jump_json(te[0]), _jump_json(j)]})


def _jump_parity(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(2)
    g = ctx.g
    ell = ctx.ell
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        qual = [j for j in jumps if (j.kind == "short" and j.jtype == "type-o") or _one_vertex(j)]
        for j in qual:
            if j.kind == "local" and j.length <= 2 * ell:
                acc.notes.append(
                    f"local jump {list(j.path.vertices)} over {list(c.vertices)} has length "
                    f"{j.length} <= 2*ell (auxiliary bound; logged only)")
        for j1, j2 in combinations(qual, 2):
            if relate_jumps(c, j1, j2).relation != "parallel":
                continue
            i1, i2 = set(j1.interior), set(j2.interior)
            if i1 & i2:
                continue
            m2 = to_mask(i2)
            linked = any(g.mask[v] & m2 for v in i1)
            acc.check(linked, lambda: {"hole": list(c.vertices), "jumps": [_jump_json(j1), _jump_json(j2)]})


def _on_c_path(c: Hole, a: int, b: int, m: int) -> bool:
    """``a b m`` is a path on the hole: ``b`` is adjacent on ``c`` to both ``a`` and ``m``."""
    pos = c.position()
    k = c.length

    def adj(u: int, v: int) -> bool:
        return (pos[u] - pos[v]) % k in (1, k - 1)

    return a != m and adj(a, b) and adj(b, m)


def _four_vertex(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(4)
    ctx.require_no_decomposition()
    g = ctx.g
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        short = [j for j in jumps if j.kind == "short"]
        for j1, j2 in combinations(short, 2):
            e1, e2 = set(j1.endpoints), set(j2.endpoints)
            if e1 == e2:
                continue
            rel = relate_jumps(c, j1, j2)
            if rel.relation == "parallel" and not (j1.jtype == j2.jtype == "type-o"):
                continue
            if len(e1 & e2) == 1:
                (u,) = e1 & e2
                (v1,) = e1 - {u}
                (v2,) = e2 - {u}
                ok = g.has_edge(v1, v2)
            else:
                ok = False
                for (u1, v1), (u2, v2) in product((j1.endpoints, j1.endpoints[::-1]),
                                                  (j2.endpoints, j2.endpoints[::-1])):
                    if g.has_edge(u1, u2) and g.has_edge(v1, v2):
                        ok = True
                    if _on_c_path(c, u1, u2, v1) or _on_c_path(c, u2, u1, v2):
                        ok = True
            acc.check(ok, lambda: {"hole": list(c.vertices), "relation": rel.relation,
                                   "jumps": [_jump_json(j1), _jump_json(j2)]})


def _par_jumps(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(4)
    ctx.require_no_decomposition()
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        short_pairs = {frozenset(j.endpoints) for j in jumps if j.kind == "short"}
        locals1 = [j for j in jumps if _one_vertex(j)]
        for j1 in locals1:
            (s1,) = _crossed_interior(j1)
            for j2 in jumps:
                if j2 is j1 or j2.kind not in ("short", "local"):
                    continue
                if relate_jumps(c, j1, j2).relation != "parallel":
                    continue
                share = bool(set(j1.endpoints) & set(j2.endpoints))
                if _one_vertex(j2) and not share:
                    (s2,) = _crossed_interior(j2)
                    wants = [frozenset((s1, w)) for w in (*j2.endpoints, s2)]
                    wants += [frozenset((s2, w)) for w in (*j1.endpoints, s1)]
                    ok = any(p in short_pairs for p in wants)
                elif j2.kind == "short" and j2.jtype == "type-o":
                    ok = share
                else:
                    continue
                acc.check(ok, lambda: {"hole": list(c.vertices), "jumps": [_jump_json(j1), _jump_json(j2)]})


def _s_path(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(4)
    ctx.require_no_decomposition()
    holes, tr = ctx.even_holes()
    acc.truncated |= tr
    for c in holes:
        jumps, jt = ctx.jumps(c)
        acc.truncated |= jt
        short = [j for j in jumps if j.kind == "short"]
        if not any(j.jtype == "type-o" for j in short):
            continue
        s = {v for j in short for v in j.endpoints}
        k = c.length
        for i in range(k):
            q = [c.vertices[(i + d) % k] for d in range(6)]
            acc.check(bool(set(q[1:5]) & s), lambda: {"hole": list(c.vertices), "path": q, "S": sorted(s)})


def _decomp(ctx: Context, acc: _Acc) -> None:
    ctx.require_class(5)
    why = ctx.decomposable()
    acc.check(why is not None, lambda: {"note": "min degree >= 3, 2-connected and no K2-cut"})
    if why is not None:
        acc.notes.append(why)


CHECKERS: dict[str, Callable[[Context, _Acc], None]] = {
    "L-InducedTree": _induced_tree,
    "L-ThetaEars": _theta_ears,
    "L-HoleNbr": _hole_nbr,
    "L-ShortJumpExtract": _short_jump_extract,
    "L-XYZ": _xyz,
    "L-JumpLength": _jump_length,
    "L-OddK4": _odd_k4,
    "L-EvenK4": _even_k4,
    "L-BalK4": _bal_k4,
    "L-Prism": _prism,
    "L-TypeE": _type_e,
    "L-JumpParity": _jump_parity,
    "L-4Vtx": _four_vertex,
    "L-ParJumps": _par_jumps,
    "L-SPath": _s_path,
    "T-Decomp": _decomp,
}


def run_checker(ctx: Context, lemma_id: str) -> LemmaVerdict:
    if lemma_id not in CHECKERS:
        raise ValueError(f"unknown lemma id {lemma_id!r}")
    acc = _Acc()
    try:
        CHECKERS[lemma_id](ctx, acc)
    except _Vacuous as why:
        return LemmaVerdict(lemma_id, "vacuous", 0, [], 0, [str(why)])
    except BudgetExhausted as exc:
        return LemmaVerdict(lemma_id, "budget_exhausted", acc.instances, acc.witnesses,
                            acc.violations, acc.notes + [str(exc)])
    if acc.violations:
        status = "violated"
    elif acc.truncated:
        status = "budget_exhausted"
    else:
        status = "holds"
    return LemmaVerdict(lemma_id, status, acc.instances, acc.witnesses, acc.violations, acc.notes)


def verify_lemma(g: Graph, lemma_id: str, ell: int, budget: int = DEFAULT_BUDGET,
                 check_hypotheses: bool = True) -> LemmaVerdict:
    """Check one statement on ``g``.

    With ``check_hypotheses=False`` the class and structure gates are
    skipped and only the conclusion is evaluated on every instance, which
    is useful for probing graphs outside the class.
    """
    return run_checker(Context(g, ell, budget, check_hypotheses), lemma_id)


def verify_suite(g: Graph, lemma_ids, ell: int, budget: int = DEFAULT_BUDGET) -> list[LemmaVerdict]:
    """Run several checkers sharing one set of cached enumerations."""
    ctx = Context(g, ell, budget)
    return [run_checker(ctx, lid) for lid in lemma_ids]


def revalidate_witness(g: Graph, w: dict) -> bool:
    """Re-check the structural parts of a violation witness against ``g``."""
    try:
        if "hole" in w and not Hole(tuple(w["hole"])).is_hole_in(g):
            return False
        c = Hole(tuple(w["hole"])) if "hole" in w else None
        for key in ("jump", "jumps"):
            if key in w:
                items = w[key] if key == "jumps" else [w[key]]
                for j in items:
                    if classify_jump(g, c, j["path"]).kind != j["kind"]:
                        return False
        if "path" in w and c is not None and not PathWitness(tuple(w["path"])).is_path_in(g):
            return False
        if "theta" in w:
            t = w["theta"]
            ThetaWitness(tuple(t["branch_pair"]), tuple(PathWitness(tuple(e)) for e in t["ears"])).validate(g)
        if "k4" in w:
            k = w["k4"]
            ears = {tuple(int(x) for x in key.split("-")): v for key, v in k["ears"].items()}
            K4Subdivision.from_ears(k["branch_vertices"], ears).validate(g)
        if "prism" in w:
            p = w["prism"]
            prism_from_parts(Hole(tuple(p["base_hole"])), [s[0] for s in p["spokes"]],
                             p["spokes"], p["hub"]).validate(g)
    except (MalformedWitness, KeyError, ValueError, TypeError):
        return False
    return True


__all__ = [
    "LEMMA_IDS",
    "LemmaVerdict",
    "Context",
    "verify_lemma",
    "verify_suite",
    "revalidate_witness",
    "hole_arcs",
]
