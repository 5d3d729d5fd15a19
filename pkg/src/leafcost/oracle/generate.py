"""Isomorph-free generation of small graphs.

General graphs are built one vertex at a time: every graph on ``k`` vertices is
some graph on ``k - 1`` vertices plus a new vertex of minimum degree, so
extending each representative of the previous order by every admissible
neighbourhood and keeping one copy per canonical form is complete.

2-connected cubic graphs are built from ``K4`` by two operations that keep a
cubic graph bridgeless: subdivide two distinct edges and join the two new
vertices, or replace an edge by a chain through a diamond (``K4`` minus an
edge).  Completeness is checked against an independent slow enumeration in the
test suite.

Canonical forms come from colour refinement followed by individualisation,
keeping the smallest relabelled adjacency over all leaves of the search tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from ..errors import TooLarge
from ..graph import Connectivity, Graph, connectivity_class, girth, is_bipartite, iter_bits

MAX_GENERAL_ORDER = 9
MAX_CUBIC_ORDER = 14


class ConnectivityFilter(Enum):
    ANY = "any"
    CONNECTED = "connected"
    TWO_CONNECTED = "2-connected"
    THREE_CONNECTED = "3-connected"

    @property
    def minimum(self) -> Connectivity:
        return {
            ConnectivityFilter.ANY: Connectivity.DISCONNECTED,
            ConnectivityFilter.CONNECTED: Connectivity.CONNECTED,
            ConnectivityFilter.TWO_CONNECTED: Connectivity.TWO_CONNECTED,
            ConnectivityFilter.THREE_CONNECTED: Connectivity.THREE_CONNECTED,
        }[self]


@dataclass(frozen=True)
class GraphClassFilter:
    min_girth: int | None = None
    connectivity: ConnectivityFilter = ConnectivityFilter.ANY
    regular_degree: int | None = None
    bipartite_only: bool = False
    max_edges: int | None = None

    def __post_init__(self):
        if self.regular_degree is not None and self.regular_degree < 0:
            raise ValueError("regular degree must be non-negative")
        if (
            self.regular_degree is not None
            and self.regular_degree < 2
            and self.connectivity.minimum >= Connectivity.TWO_CONNECTED
        ):
            raise ValueError("a 2-connected graph cannot be regular of degree below 2")
        if self.min_girth is not None and self.min_girth < 3:
            raise ValueError("girth is at least 3")

    def accepts(self, g: Graph) -> bool:
        if self.max_edges is not None and g.num_edges() > self.max_edges:
            return False
        if self.regular_degree is not None and any(d != self.regular_degree for d in g.degrees()):
            return False
        if self.connectivity is not ConnectivityFilter.ANY:
            if connectivity_class(g) < self.connectivity.minimum:
                return False
        if self.min_girth is not None and girth(g) < self.min_girth:
            return False
        if self.bipartite_only and not is_bipartite(g):
            return False
        return True

    def describe(self) -> str:
        parts = [self.connectivity.value]
        if self.regular_degree is not None:
            parts.append(f"{self.regular_degree}-regular")
        if self.min_girth is not None:
            parts.append(f"girth>={self.min_girth}")
        if self.bipartite_only:
            parts.append("bipartite")
        if self.max_edges is not None:
            parts.append(f"edges<={self.max_edges}")
        return ",".join(parts)


# canonical form ------------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until nothing changes."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for k in keys:
                out.append([v for v in cell if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _relabel(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for new, old in enumerate(order):
        pos[old] = new
    out = []
    for old in order:
        m = 0
        for u in iter_bits(adj[old]):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


def canonical_adjacency(g: Graph) -> tuple[int, ...]:
    """Relabelled adjacency that is identical for exactly the graphs isomorphic to ``g``."""
    adj = g.adj
    if g.n == 0:
        return ()
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    start = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best: list[tuple[int, ...] | None] = [None]

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cand = _relabel(adj, [c[0] for c in cells])
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        cell = cells[target]
        for v in cell:
            split = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:]
            search(_refine(adj, split))

    search(start)
    assert best[0] is not None
    return best[0]


def canonical_form(g: Graph) -> Graph:
    return Graph(g.n, canonical_adjacency(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_adjacency(g) == canonical_adjacency(h)


# general graphs -------------------------------------------------------------


def _extensions(g: Graph, min_size: int = 0, max_edges: int | None = None) -> Iterator[Graph]:
    """``g`` plus one new vertex that has minimum degree in the result."""
    n = g.n
    degs = g.degrees()
    top = n if max_edges is None else min(n, max_edges - g.num_edges())
    for size in range(min_size, top + 1):
        for s in itertools.combinations(range(n), size):
            smask = 0
            for u in s:
                smask |= 1 << u
            if any(size > degs[u] + (smask >> u & 1) for u in range(n)):
                continue
            adj = [nb | (1 << n if smask >> u & 1 else 0) for u, nb in enumerate(g.adj)]
            adj.append(smask)
            yield Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def all_graphs(n: int, max_edges: int | None = None) -> tuple[Graph, ...]:
    """One canonical representative of every graph on ``n`` vertices (with at most ``max_edges`` edges).

    Deleting a vertex never adds edges, so the edge cap applies at every level.
    """
    if n > MAX_GENERAL_ORDER - 1:
        raise TooLarge(f"complete graph lists are kept up to {MAX_GENERAL_ORDER - 1} vertices")
    if max_edges is not None and max_edges >= n * (n - 1) // 2:
        max_edges = None
    if n == 0:
        return (Graph.empty(0),)
    seen: set[tuple[int, ...]] = set()
    for g in all_graphs(n - 1, max_edges):
        for h in _extensions(g, 0, max_edges):
            seen.add(canonical_adjacency(h))
    return tuple(Graph(n, a) for a in sorted(seen))


def _general(n: int, flt: GraphClassFilter) -> list[Graph]:
    if n > MAX_GENERAL_ORDER:
        raise TooLarge(f"general generation is limited to {MAX_GENERAL_ORDER} vertices")
    if n == 0:
        return [Graph.empty(0)] if flt.accepts(Graph.empty(0)) else []
    need = flt.connectivity.minimum
    cap = flt.max_edges
    if need < Connectivity.TWO_CONNECTED:
        if n < MAX_GENERAL_ORDER:
            return [g for g in all_graphs(n, cap) if flt.accepts(g)]
        parents = all_graphs(n - 1, cap)
        min_size = 1 if need >= Connectivity.CONNECTED else 0
    else:
        # deleting a vertex of a 2-connected graph leaves it connected
        parents = tuple(g for g in all_graphs(n - 1, cap) if connectivity_class(g) >= Connectivity.CONNECTED)
        min_size = 2
    seen: set[tuple[int, ...]] = set()
    for g in parents:
        for h in _extensions(g, min_size, cap):
            if flt.accepts(h):
                seen.add(canonical_adjacency(h))
    return [Graph(n, a) for a in sorted(seen)]


# cubic graphs ---------------------------------------------------------------


def _insert_edge(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Graph:
    n = g.n
    a, b = e1
    c, d = e2
    x, y = n, n + 1
    adj = list(g.adj) + [0, 0]

    def link(p: int, q: int) -> None:
        adj[p] |= 1 << q
        adj[q] |= 1 << p

    def unlink(p: int, q: int) -> None:
        adj[p] &= ~(1 << q)
        adj[q] &= ~(1 << p)

    unlink(a, b)
    unlink(c, d)
    link(a, x)
    link(x, b)
    link(c, y)
    link(y, d)
    link(x, y)
    return Graph(n + 2, tuple(adj))


def _insert_diamond(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge ``ab`` by ``a - p``, a diamond on ``p, q, r, s`` with tips ``p, s``, and ``s - b``."""
    n = g.n
    a, b = e
    p, q, r, s = range(n, n + 4)
    extra = [(a, p), (p, q), (p, r), (q, r), (q, s), (r, s), (s, b)]
    adj = list(g.adj) + [0] * 4
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    for u, v in extra:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n + 4, tuple(adj))


@lru_cache(maxsize=None)
def two_connected_cubic(n: int) -> tuple[Graph, ...]:
    """Every 2-connected cubic graph on ``n`` vertices, one per isomorphism class."""
    if n % 2 or n < 4:
        return ()
    if n > MAX_CUBIC_ORDER:
        raise TooLarge(f"cubic generation is limited to {MAX_CUBIC_ORDER} vertices")
    if n == 4:
        return (canonical_form(Graph.from_edges(4, itertools.combinations(range(4), 2))),)
    seen: set[tuple[int, ...]] = set()
    for g in two_connected_cubic(n - 2):
        for e1, e2 in itertools.combinations(g.edges(), 2):
            seen.add(canonical_adjacency(_insert_edge(g, e1, e2)))
    if n >= 8:
        for g in two_connected_cubic(n - 4):
            for e in g.edges():
                seen.add(canonical_adjacency(_insert_diamond(g, e)))
    return tuple(Graph(n, a) for a in sorted(seen))


def generate_nonisomorphic(n: int, flt: GraphClassFilter | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices passing ``flt``."""
    flt = flt or GraphClassFilter()
    if flt.regular_degree == 3:
        if flt.connectivity.minimum < Connectivity.TWO_CONNECTED:
            raise ValueError("cubic generation covers 2-connected graphs only")
        for g in two_connected_cubic(n):
            if flt.accepts(g):
                yield g
        return
    yield from _general(n, flt)


__all__ = [
    "ConnectivityFilter",
    "GraphClassFilter",
    "all_graphs",
    "are_isomorphic",
    "canonical_adjacency",
    "canonical_form",
    "two_connected_cubic",
    "generate_nonisomorphic",
]
