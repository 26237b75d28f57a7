"""Decomposition-based 3-colouring (strip low-degree vertices, split on K1/K2
cuts) and an exact backtracking chromatic-number oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import Disconnected
from .graph import Graph, bits, to_mask
from .holes import INFINITE, girth


@dataclass(frozen=True)
class Cut:
    kind: str  # K1 | K2
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass
class Coloring:
    assignment: dict[int, int]

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def is_proper(self, g: Graph) -> bool:
        if set(self.assignment) != set(g.vertices()):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges)

    def to_json(self) -> dict:
        return {
            "assignment": [[v, self.assignment[v]] for v in sorted(self.assignment)],
            "colors_used": self.colors_used,
        }


@dataclass(frozen=True)
class Exceeds:
    """The graph needs more than ``k_max`` colours."""

    k_max: int


# ---------------------------------------------------------------------------
# structure search, all relative to a vertex mask of a host graph


def _degree(g: Graph, v: int, within: int) -> int:
    return (g.mask[v] & within).bit_count()


def _lowest_low_degree(g: Graph, within: int) -> int | None:
    for v in bits(within):
        if _degree(g, v, within) <= 2:
            return v
    return None


def _small_cut(g: Graph, within: int) -> Cut | None:
    for v in bits(within):
        rest = within & ~(1 << v)
        if rest and not g.is_connected(rest):
            return Cut("K1", (v,))
    for u in bits(within):
        for v in bits(g.mask[u] & within):
            if v < u:
                continue
            rest = within & ~(1 << u | 1 << v)
            if rest and not g.is_connected(rest):
                return Cut("K2", (u, v))
    return None


def find_degree2(g: Graph) -> int | None:
    """Lowest-id vertex of degree at most 2, or ``None``."""
    return _lowest_low_degree(g, g.all_mask)


def find_small_cut(g: Graph) -> Cut | None:
    """A cut vertex if one exists, else an adjacent disconnecting pair (lexicographically least)."""
    if not g.is_connected():
        raise Disconnected("graph is already disconnected")
    if g.n < 3:
        return None
    return _small_cut(g, g.all_mask)


# ---------------------------------------------------------------------------
# exact colouring


def _vertex_order(g: Graph, within: int) -> list[int]:
    """Descending degree; ties go to vertices with more already-ordered neighbours, then lower id."""
    remaining = set(bits(within))
    placed = 0
    order = []
    while remaining:
        v = max(remaining, key=lambda u: (_degree(g, u, within), (g.mask[u] & placed).bit_count(), -u))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def _try_color(g: Graph, within: int, k: int) -> dict[int, int] | None:
    order = _vertex_order(g, within)
    if not order:
        return {}
    full = (1 << k) - 1
    forbidden = {v: 0 for v in order}
    color: dict[int, int] = {}

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # symmetry breaking: a fresh colour is always the next unused one
        for c in range(min(k, used + 1)):
            if forbidden[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            dead = False
            for w in bits(g.mask[v] & within):
                if w in color or forbidden[w] >> c & 1:
                    continue
                forbidden[w] |= 1 << c
                touched.append(w)
                if forbidden[w] == full:
                    dead = True
            if not dead and rec(i + 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            del color[v]
        return False

    return dict(color) if rec(0, 0) else None


def exact_coloring(g: Graph, k: int, within: int | None = None) -> dict[int, int] | None:
    """A proper colouring with colours ``0..k-1``, or ``None`` if none exists."""
    return _try_color(g, g.all_mask if within is None else within, k)


def exact_chromatic(g: Graph, k_max: int) -> int | Exceeds:
    """Chromatic number when it is at most ``k_max``, else :class:`Exceeds`."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if g.n == 0:
        return 0
    for k in range(1, k_max + 1):
        if _try_color(g, g.all_mask, k) is not None:
            return k
    return Exceeds(k_max)


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class StructureMiss:
    """A residual subgraph with min degree >= 3, no cut vertex and no K2-cut."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    note: dict = field(default_factory=dict)

    def validate(self, g: Graph) -> bool:
        within = to_mask(self.vertices)
        if len(self.vertices) < 4 or not g.is_connected(within):
            return False
        if any(_degree(g, v, within) < 3 for v in self.vertices):
            return False
        return _small_cut(g, within) is None

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "note": self.note,
        }


@dataclass
class DecompositionTree:
    """Flat node list; node 0 is the root.  All vertex ids are root labels.

    Node ops: ``strip`` (vertex, neighbours, child), ``components``
    (children), ``split`` (cut, parts [G1, G2] with their vertex lists) and
    ``leaf`` (vertices, method, coloring).
    """

    nodes: list[dict]

    def to_json(self) -> dict:
        return {"nodes": self.nodes}

    def replay(self, g: Graph) -> dict[int, int]:
        """Rebuild the colouring bottom-up from the leaf colourings alone."""

        def solve(i: int) -> dict[int, int]:
            node = self.nodes[i]
            op = node["op"]
            if op == "leaf":
                return {v: c for v, c in node["coloring"]}
            if op == "components":
                out: dict[int, int] = {}
                for ch in node["children"]:
                    out.update(solve(ch))
                return out
            if op == "split":
                c1 = solve(node["parts"][0]["node"])
                c2 = solve(node["parts"][1]["node"])
                return _merge(c1, c2, node["cut"]["vertices"])
            # strip chains can be long, so unwind them iteratively
            chain = []
            while self.nodes[i]["op"] == "strip":
                chain.append(self.nodes[i])
                i = self.nodes[i]["child"]
            col = solve(i)
            for node in reversed(chain):
                col[node["vertex"]] = _least_absent(col[w] for w in node["neighbors"])
            return col

        return solve(0)


@dataclass
class ColorResult:
    coloring: Coloring
    tree: DecompositionTree
    misses: list[StructureMiss]

    @property
    def colors_used(self) -> int:
        return self.coloring.colors_used

    def to_json(self) -> dict:
        return {
            "coloring": self.coloring.to_json(),
            "tree": self.tree.to_json(),
            "misses": [m.to_json() for m in self.misses],
        }


def _least_absent(colors: Iterable[int]) -> int:
    taken = set(colors)
    c = 0
    while c in taken:
        c += 1
    return c


def _merge(c1: dict[int, int], c2: dict[int, int], cut: Iterable[int]) -> dict[int, int]:
    """Least colour permutation of ``c2`` agreeing with ``c1`` on the cut clique."""
    perm = {c2[v]: c1[v] for v in cut}
    images = set(perm.values())
    free = (c for c in range(len(c2) + len(images) + 1) if c not in images)
    for c in sorted(set(c2.values())):
        if c not in perm:
            perm[c] = next(free)
    out = dict(c1)
    for v, c in c2.items():
        out.setdefault(v, perm[c])
    return out


class _Colorer:
    def __init__(self, g: Graph, ell: int | None) -> None:
        self.g = g
        self.ell = ell
        self.nodes: list[dict] = []
        self.misses: list[StructureMiss] = []

    def _new(self, node: dict) -> int:
        node["id"] = len(self.nodes)
        self.nodes.append(node)
        return node["id"]

    def solve(self, within: int) -> tuple[int, dict[int, int]]:
        g = self.g
        chain: list[tuple[int, int, tuple[int, ...]]] = []
        while True:
            if within.bit_count() <= 3 or not g.is_connected(within):
                break
            v = _lowest_low_degree(g, within)
            if v is None:
                break
            nbrs = tuple(bits(g.mask[v] & within))
            node: dict = {"op": "strip", "vertex": v, "neighbors": list(nbrs), "child": None}
            within &= ~(1 << v)
            if self.ell is not None:
                gir = girth(_induced(g, within))
                node["girth_after"] = "infinite" if gir == INFINITE else gir
                node["leaves_girth_class"] = gir != 2 * self.ell
            chain.append((self._new(node), v, nbrs))
        root_id, col = self._solve_core(within)
        child = root_id
        for nid, v, nbrs in reversed(chain):
            self.nodes[nid]["child"] = child
            col[v] = _least_absent(col[w] for w in nbrs)
            child = nid
        return child, col

    def _leaf(self, within: int, col: dict[int, int], method: str, miss: bool = False) -> int:
        return self._new({
            "op": "leaf",
            "vertices": list(bits(within)),
            "method": method,
            "structure_miss": miss,
            "coloring": [[v, col[v]] for v in sorted(col)],
        })

    def _solve_core(self, within: int) -> tuple[int, dict[int, int]]:
        g = self.g
        if within.bit_count() <= 3:
            col: dict[int, int] = {}
            for v in bits(within):
                col[v] = _least_absent(col[w] for w in bits(g.mask[v] & within) if w in col)
            return self._leaf(within, col, "greedy"), col
        comps = g.components(within)
        if len(comps) > 1:
            nid = self._new({"op": "components", "children": []})
            col = {}
            for comp in comps:
                ch, c = self.solve(comp)
                self.nodes[nid]["children"].append(ch)
                col.update(c)
            return nid, col
        cut = _small_cut(g, within)
        if cut is not None:
            cmask = to_mask(cut.vertices)
            parts = g.components(within & ~cmask)
            g1 = cmask | parts[0]
            g2 = within & ~parts[0]
            nid = self._new({"op": "split", "cut": cut.to_json(), "parts": []})
            id1, c1 = self.solve(g1)
            id2, c2 = self.solve(g2)
            self.nodes[nid]["parts"] = [
                {"node": id1, "vertices": list(bits(g1))},
                {"node": id2, "vertices": list(bits(g2))},
            ]
            return nid, _merge(c1, c2, cut.vertices)
        vs = tuple(bits(within))
        sub_edges = tuple((u, v) for u in vs for v in bits(g.mask[u] & within) if u < v)
        k = 1
        col = None
        while col is None:
            col = _try_color(g, within, k)
            k += 1
        miss = StructureMiss(vs, sub_edges, {
            "min_degree": min(_degree(g, v, within) for v in vs),
            "cut_vertex": False,
            "k2_cut": False,
            "fallback_colors": len(set(col.values())),
        })
        self.misses.append(miss)
        return self._leaf(within, col, "exact", True), col


def _induced(g: Graph, within: int) -> Graph:
    return Graph(g.n, [(u, v) for u, v in g.edges if within >> u & 1 and within >> v & 1])


def color3(g: Graph, ell: int | None = None) -> ColorResult:
    """Colour ``g`` by recursive decomposition; see :class:`DecompositionTree`.

    Structure misses are reported in-band and coloured exactly.  When
    ``ell`` is given each strip step records the girth left behind.
    """
    c = _Colorer(g, ell)
    if g.n == 0:
        c._new({"op": "leaf", "vertices": [], "method": "greedy", "structure_miss": False, "coloring": []})
        return ColorResult(Coloring({}), DecompositionTree(c.nodes), [])
    # reserve node 0 for the root by solving, then reorder
    root, col = c.solve(g.all_mask)
    tree = DecompositionTree(_reroot(c.nodes, root))
    return ColorResult(Coloring(dict(sorted(col.items()))), tree, c.misses)


def _reroot(nodes: list[dict], root: int) -> list[dict]:
    """Renumber nodes in preorder so the root is node 0."""
    order: list[int] = []
    stack = [root]
    while stack:
        i = stack.pop()
        order.append(i)
        node = nodes[i]
        kids = []
        if node["op"] == "strip":
            kids = [node["child"]]
        elif node["op"] == "components":
            kids = list(node["children"])
        elif node["op"] == "split":
            kids = [p["node"] for p in node["parts"]]
        stack.extend(reversed(kids))
    new_id = {old: new for new, old in enumerate(order)}
    out = []
    for old in order:
        node = dict(nodes[old])
        node["id"] = new_id[old]
        if node["op"] == "strip":
            node["child"] = new_id[node["child"]]
        elif node["op"] == "components":
            node["children"] = [new_id[c] for c in node["children"]]
        elif node["op"] == "split":
            node["parts"] = [dict(p, node=new_id[p["node"]]) for p in node["parts"]]
        out.append(node)
    return out
