"""Canonical labelling of small graphs and exhaustive generation of connected graphs.

Canonical forms use colour refinement followed by individualisation with
backtracking; the certificate is the lexicographically least tuple of
relabelled adjacency masks over all leaves of the search tree.  Twins
(vertices with identical neighbourhoods apart from each other) are
interchangeable by an automorphism, so only one twin per class is
individualised.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, bits

Certificate = tuple[int, ...]


def _refine(mask: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            cell_masks.append(m)
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                mv = mask[v]
                sig = tuple((mv & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                for sig in sorted(groups):
                    out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(mask: tuple[int, ...], order: list[int]) -> Certificate:
    pos = {v: i for i, v in enumerate(order)}
    cert = []
    for v in order:
        m = 0
        for w in bits(mask[v]):
            m |= 1 << pos[w]
        cert.append(m)
    return tuple(cert)


def canonical_labeling(g: Graph) -> tuple[Certificate, list[int]]:
    """Return ``(certificate, order)`` where ``order[i]`` is the vertex given label ``i``.

    Two graphs are isomorphic iff their certificates are equal.
    """
    mask = g.mask
    n = g.n
    if n == 0:
        return (), []
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(mask[v].bit_count(), []).append(v)
    cells = _refine(mask, [by_degree[d] for d in sorted(by_degree)])
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (target < 0 or len(c) < len(cells[target])):
                target = i
        if target < 0:
            order = [c[0] for c in cells]
            cert = _certificate(mask, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            mv = mask[v]
            if any((mv & ~(1 << u)) == (mask[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(mask, split))

    search(cells)
    return best[0], best[1]


def certificate(g: Graph) -> Certificate:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    cert, _ = canonical_labeling(g)
    return from_certificate(cert)


def from_certificate(cert: Certificate) -> Graph:
    n = len(cert)
    edges = [(i, j) for i in range(n) for j in bits(cert[i]) if i < j]
    return Graph(n, edges)


def relabel(g: Graph, order: list[int]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


# ---------------------------------------------------------------------------
# generation


def _articulation_free(g: Graph) -> list[int]:
    """Vertices whose removal keeps the graph connected."""
    out = []
    full = g.all_mask
    for v in g.vertices():
        if g.is_connected(full & ~(1 << v)):
            out.append(v)
    return out


def _distances(g: Graph, src: int) -> list[int]:
    n = g.n
    dist = [-1] * n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    d = 0
    mask = g.mask
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= mask[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _attachment_sets(g: Graph, min_girth: int | None, max_size: int) -> Iterator[int]:
    """Non-empty vertex sets (bitmasks) the new vertex may be joined to."""
    n = g.n
    if min_girth is None or min_girth <= 3:
        conflict = [0] * n
    else:
        conflict = []
        for v in range(n):
            dist = _distances(g, v)
            m = 0
            for w in range(n):
                if w != v and 0 <= dist[w] and dist[w] + 2 < min_girth:
                    m |= 1 << w
            conflict.append(m)

    def rec(start: int, chosen: int, size: int, forbidden: int) -> Iterator[int]:
        for v in range(start, n):
            if forbidden >> v & 1:
                continue
            s = chosen | 1 << v
            yield s
            if size + 1 < max_size:
                yield from rec(v + 1, s, size + 1, forbidden | conflict[v])

    yield from rec(0, 0, 0, 0)


def connected_graphs(
    n_max: int, min_girth: int | None = None, n_min: int = 1
) -> Iterator[tuple[int, list[Graph]]]:
    """Yield ``(n, graphs)`` for ``n = 1..n_max``: all connected graphs on ``n``
    vertices (with girth >= ``min_girth`` when given), one canonical
    representative per isomorphism class, sorted by certificate.

    Every connected graph on ``n+1`` vertices arises from one on ``n``
    vertices by adding a vertex of minimum degree among its non-cut
    vertices; that constraint prunes the attachment sets tried.
    """
    level = [Graph(1)]
    if n_min <= 1:
        yield 1, level
    for n in range(2, n_max + 1):
        found: dict[Certificate, None] = {}
        for parent in level:
            noncut = _articulation_free(parent)
            degs = parent.degrees()
            bound = min(degs[w] for w in noncut) + 1 if noncut else 1
            for s in _attachment_sets(parent, min_girth, max(1, bound)):
                k = s.bit_count()
                if k >= 2 and any(degs[w] + (s >> w & 1) < k for w in noncut):
                    continue
                edges = list(parent.edges) + [(w, n - 1) for w in bits(s)]
                child = Graph(n, edges)
                found[certificate(child)] = None
        certs = sorted(found)
        level = [from_certificate(c) for c in certs]
        if n >= n_min:
            yield n, level


def all_connected(n_max: int, min_girth: int | None = None) -> list[Graph]:
    out: list[Graph] = []
    for _, graphs in connected_graphs(n_max, min_girth):
        out.extend(graphs)
    return out


def dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    """Drop isomorphic duplicates, keeping first occurrences in input order."""
    seen: set[Certificate] = set()
    out = []
    for g in graphs:
        c = certificate(g)
        if c not in seen:
            seen.add(c)
            out.append(g)
    return out
