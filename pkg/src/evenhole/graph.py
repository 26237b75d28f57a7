"""Immutable simple graphs, basic set primitives and file I/O.

Vertices are the dense integers ``0..n-1``.  Besides sorted neighbour
tuples every graph keeps a bitmask per vertex (``mask[v]`` has bit ``u`` set
iff ``uv`` is an edge); most of the search code works on those masks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import OutOfRange, OverlapError, ParseError, RejectedNonSimple, UnknownEdge

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; equality compares vertex count
    and edge set, so two graphs are equal only if they are identical as
    labelled graphs.
    """

    __slots__ = ("_n", "_edges", "_adj", "_mask", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise RejectedNonSimple(0, f"self-loop at {u}")
            key = _norm(u, v)
            if key in seen:
                raise RejectedNonSimple(0, f"repeated edge {key}")
            seen.add(key)
        adj: list[list[int]] = [[] for _ in range(n)]
        mask = [0] * n
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
            mask[u] |= 1 << v
            mask[v] |= 1 << u
        self._n = n
        self._edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._mask = tuple(mask)
        self._hash = hash((n, self._edges))

    # basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def mask(self) -> tuple[int, ...]:
        return self._mask

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._mask[u] >> v & 1)

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    # derived graphs ----------------------------------------------------

    def without(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return induced_subgraph(self, [v for v in range(self._n) if v not in drop])

    def is_connected(self, within: int | None = None) -> bool:
        """Connectivity of the subgraph induced on ``within`` (a bitmask)."""
        alive = self.all_mask if within is None else within
        if alive == 0:
            return True
        start = alive & -alive
        seen = start
        frontier = start
        mask = self._mask
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= mask[v]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        return seen == alive

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of the induced subgraph, as bitmasks sorted by least vertex."""
        alive = self.all_mask if within is None else within
        out = []
        mask = self._mask
        while alive:
            start = alive & -alive
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= mask[v]
                nxt &= alive & ~seen
                seen |= nxt
                frontier = nxt
            out.append(seen)
            alive &= ~seen
        return out


def _check_set(g: Graph, vs: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(v) for v in vs)
    for v in s:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return s


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[U]`` relabelled to ``0..|U|-1`` plus the map new id -> old id.

    The relabelling keeps the relative order of the original ids.
    """
    keep = sorted(_check_set(g, u))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(keep), edges), keep


def neighborhood(g: Graph, h: Iterable[int], closed: bool = False) -> frozenset[int]:
    """``N(H)``: vertices outside ``H`` with a neighbour in ``H`` (``N[H]`` when closed)."""
    hs = _check_set(g, h)
    out = set()
    for v in hs:
        out.update(g.adj(v))
    out -= hs
    if closed:
        out |= hs
    return frozenset(out)


def are_anticomplete(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    sa, sb = _check_set(g, a), _check_set(g, b)
    if sa & sb:
        raise OverlapError(f"sets overlap in {sorted(sa & sb)}")
    mb = to_mask(sb)
    return all(g.mask[v] & mb == 0 for v in sa)


def set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> int | None:
    """Length of a shortest ``(A, B)``-path, or ``None`` when no such path exists.

    The interior of the path avoids ``A`` and ``B``.
    """
    sa, sb = _check_set(g, a), _check_set(g, b)
    if sa & sb:
        raise OverlapError(f"sets overlap in {sorted(sa & sb)}")
    if not sa or not sb:
        raise ValueError("both sets must be non-empty")
    dist = {v: 0 for v in sa}
    queue = deque(sorted(sa))
    while queue:
        v = queue.popleft()
        for w in g.adj(v):
            if w in sb:
                return dist[v] + 1
            if w in dist:
                continue
            dist[w] = dist[v] + 1
            queue.append(w)
    return None


def edge_symmetric_difference(
    g: Graph, h1: Iterable[Sequence[int]], h2: Iterable[Sequence[int]]
) -> frozenset[Edge]:
    s1 = frozenset(_norm(int(e[0]), int(e[1])) for e in h1)
    s2 = frozenset(_norm(int(e[0]), int(e[1])) for e in h2)
    for e in s1 | s2:
        if e not in g.edges:
            raise UnknownEdge(f"{e} is not an edge of the graph")
    return s1 ^ s2


def cycle_edges(cycle: Sequence[int]) -> frozenset[Edge]:
    k = len(cycle)
    return frozenset(_norm(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def path_edges(path: Sequence[int]) -> frozenset[Edge]:
    return frozenset(_norm(path[i], path[i + 1]) for i in range(len(path) - 1))


@dataclass(frozen=True)
class PathWitness:
    """An ordered vertex sequence ``v0..vk``; its length is the edge count ``k``."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def reversed(self) -> "PathWitness":
        return PathWitness(tuple(reversed(self.vertices)))

    def is_path_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or not vs:
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def is_induced_in(self, g: Graph) -> bool:
        if not self.is_path_in(g):
            return False
        pos = {v: i for i, v in enumerate(self.vertices)}
        for v in self.vertices:
            for w in g.adj(v):
                if w in pos and abs(pos[w] - pos[v]) != 1:
                    return False
        return True


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: bytes | str) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(0, "input is not ASCII") from exc
    if "\r" in text:
        raise ParseError(0, "CR characters are not allowed (LF line endings only)")
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, raw in enumerate(lines, start=1):
        if raw.startswith("#"):
            continue
        parts = raw.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(lineno, f"expected two non-negative integers, got {raw!r}")
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            header = (a, b)
            continue
        n = header[0]
        if len(edges) >= header[1]:
            raise ParseError(lineno, f"more than the declared {header[1]} edges")
        if a >= n or b >= n:
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if a == b:
            raise RejectedNonSimple(lineno, f"self-loop at {a}")
        key = _norm(a, b)
        if key in seen:
            raise RejectedNonSimple(lineno, f"repeated edge {key}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError(len(lines), "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(len(lines), f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# graph6 (short form only, n <= 62)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError(1, "empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise ParseError(1, "graph6 characters must lie in 63..126")
    n = codes[0]
    if n == 63:
        raise ParseError(1, "only the short graph6 form (n <= 62) is supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(codes) - 1 != need:
        raise ParseError(1, f"expected {need} data characters for n={n}, got {len(codes) - 1}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c, off = divmod(k, 6)
            if codes[1 + c] >> (5 - off) & 1:
                edges.append((i, j))
            k += 1
    total = need * 6
    for pad in range(k, total):
        c, off = divmod(pad, 6)
        if codes[1 + c] >> (5 - off) & 1:
            raise ParseError(1, "non-zero padding bits")
    return Graph(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise OutOfRange("graph6 short form supports at most 62 vertices")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    mask = g.mask
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (mask[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph(text: bytes | str, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {format!r}")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        return format_edge_list(g)
    if format == "graph6":
        return format_graph6(g) + "\n"
    raise ValueError(f"unknown format {format!r}")
