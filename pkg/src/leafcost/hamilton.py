"""Hamiltonian cycles and paths by pruned depth-first search.

All searches share one routine: extend a path from a fixed start through every
vertex of a vertex set, finishing on a vertex of an allowed end set.  A cycle
through the anchor ``s`` is a path from ``s`` ending on a neighbour of ``s``;
traceability is a cycle in the graph plus one universal vertex.

Pruning at every search node (``U`` = unvisited vertices, ``c`` = current end):

* a vertex of ``U`` with at most one neighbour in ``U + c`` must be the final
  vertex, so there can be only one and it must be an allowed end;
* a vertex of ``U`` that is not an allowed end and whose only two neighbours in
  ``U + c`` include ``c`` must come next;
* ``G[U]`` must be connected.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import IndexOutOfRange, TooSmall
from .graph import Graph, delete_vertex, iter_bits, reach

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


class WitnessKind(Enum):
    CYCLE = "cycle"
    PATH = "path"


@dataclass(frozen=True)
class PathWitness:
    order: tuple[int, ...]
    kind: WitnessKind

    def __len__(self) -> int:
        return len(self.order)

    @property
    def ends(self) -> tuple[int, int]:
        return self.order[0], self.order[-1]

    def is_valid_in(self, g: Graph, spanning: bool = True) -> bool:
        order = self.order
        if len(set(order)) != len(order):
            return False
        if spanning and len(order) != g.n:
            return False
        if any(not g.has_edge(a, b) for a, b in zip(order, order[1:])):
            return False
        if self.kind is WitnessKind.CYCLE:
            return len(order) >= 3 and g.has_edge(order[-1], order[0])
        return True


def _reach(adj: Sequence[int], start: int, within: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def _path_search(adj: Sequence[int], start: int, within: int, end_mask: int) -> list[int] | None:
    """Path from ``start`` through all of ``within``, last vertex in ``end_mask``."""
    single_end = end_mask if end_mask & (end_mask - 1) == 0 else 0
    path = [start]

    def rec(cur: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(end_mask >> cur & 1)
        if not unvisited & end_mask:
            return False
        curbit = 1 << cur
        base = unvisited | curbit
        dead = 0
        forced = -1
        for x in iter_bits(unvisited):
            a = adj[x] & base
            rest = a & (a - 1)
            if not rest:
                # at most one usable neighbour: x has to be the last vertex
                xbit = 1 << x
                if not a or dead or not end_mask & xbit:
                    return False
                if a == curbit and unvisited != xbit:
                    return False
                dead = xbit
            elif a & curbit and not rest & (rest - 1) and not end_mask >> x & 1:
                if forced >= 0:
                    return False
                forced = x
        low = unvisited & -unvisited
        if _reach(adj, low.bit_length() - 1, unvisited) != unvisited:
            return False
        if forced >= 0:
            cands = [forced]
        else:
            nb = adj[cur] & unvisited
            if single_end and unvisited != single_end:
                nb &= ~single_end
            cands = sorted(iter_bits(nb), key=lambda x: (adj[x] & unvisited).bit_count())
        for x in cands:
            path.append(x)
            if rec(x, unvisited & ~(1 << x)):
                return True
            path.pop()
        return False

    if rec(start, within & ~(1 << start)):
        return path
    return None


def _min_degree_vertex(adj: Sequence[int], within: int) -> int:
    return min(iter_bits(within), key=lambda v: ((adj[v] & within).bit_count(), v))


def _cycle_search(adj: Sequence[int], within: int) -> list[int] | None:
    if within.bit_count() < 3:
        return None
    for v in iter_bits(within):
        if (adj[v] & within).bit_count() < 2:
            return None
    anchor = _min_degree_vertex(adj, within)
    return _path_search(adj, anchor, within, adj[anchor] & within)


def hamiltonian_cycle(g: Graph) -> PathWitness | None:
    """A hamiltonian cycle of ``g``, or ``None``.  ``K1`` and ``K2`` are not hamiltonian."""
    if g.n < 3:
        return None
    order = _cycle_search(g.adj, g.full_mask)
    return PathWitness(tuple(order), WitnessKind.CYCLE) if order else None


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g) is not None


def hamiltonian_path_between(g: Graph, u: int, v: int) -> PathWitness | None:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexOutOfRange(f"vertex outside 0..{g.n - 1}")
    if u == v:
        raise ValueError("endpoints must differ")
    order = _path_search(g.adj, u, g.full_mask, 1 << v)
    return PathWitness(tuple(order), WitnessKind.PATH) if order else None


def _traceable_search(adj: Sequence[int], within: int) -> list[int] | None:
    """Hamiltonian path of ``G[within]`` via a cycle through one extra universal vertex."""
    size = within.bit_count()
    if size <= 2:
        if size == 0:
            return None
        verts = list(iter_bits(within))
        if size == 2 and not adj[verts[0]] >> verts[1] & 1:
            return None
        return verts
    if sum(1 for v in iter_bits(within) if (adj[v] & within).bit_count() <= 1) > 2:
        return None
    z = max(len(adj), within.bit_length())
    zbit = 1 << z
    ext = list(adj) + [0] * (z + 1 - len(adj))
    for v in iter_bits(within):
        ext[v] = adj[v] | zbit
    ext[z] = within
    order = _cycle_search(ext, within | zbit)
    if order is None:
        return None
    i = order.index(z)
    return order[i + 1:] + order[:i]


def _endpoint_pairs(adj: Sequence[int], within: int, open_ends: Sequence[int]) -> set[tuple[int, int]]:
    found: set[tuple[int, int]] = set()
    for u, ends in enumerate(open_ends):
        ends &= within
        if not ends or not within >> u & 1:
            continue
        while ends:
            order = _path_search(adj, u, within, ends)
            if order is None:
                break
            e = order[-1]
            found.add((min(u, e), max(u, e)))
            ends &= ~(1 << e)
    return found


def nonadjacent_pairs(adj: Sequence[int], within: int) -> list[int]:
    """Per vertex ``u``, the mask of larger non-adjacent partners inside ``within``."""
    out = [0] * len(adj)
    for u in iter_bits(within):
        above = within & ~((2 << u) - 1)
        out[u] = above & ~adj[u]
    return out


def hamiltonian_path(g: Graph) -> PathWitness | None:
    """Any hamiltonian path, found as a hamiltonian cycle of ``g`` plus a universal vertex."""
    order = _traceable_search(g.adj, g.full_mask)
    return PathWitness(tuple(order), WitnessKind.PATH) if order else None


def is_traceable(g: Graph) -> bool:
    return hamiltonian_path(g) is not None


def hamiltonian_path_endpoints(g: Graph, pairs: Sequence[tuple[int, int]] | None = None) -> set[tuple[int, int]]:
    """All pairs ``(u, v)``, ``u < v``, among ``pairs`` joined by a hamiltonian path.

    ``pairs`` defaults to every non-adjacent pair.  Each start vertex is searched
    with the whole set of still-open partner vertices as allowed ends, so a
    start with no further partners costs one exhaustive search instead of one
    per pair.
    """
    if pairs is None:
        open_ends = nonadjacent_pairs(g.adj, g.full_mask)
    else:
        open_ends = [0] * g.n
        for u, v in pairs:
            if u == v:
                raise ValueError("endpoints must differ")
            u, v = min(u, v), max(u, v)
            open_ends[u] |= 1 << v
    return _endpoint_pairs(g.adj, g.full_mask, open_ends)


def longest_path(g: Graph) -> PathWitness:
    """A path with the maximum number of vertices (exhaustive; meant for small inputs)."""
    n = g.n
    if n == 0:
        raise TooSmall("the empty graph has no paths")
    adj = g.adj
    best: list[int] = [0]
    full = g.full_mask

    def rec(path: list[int], cur: int, unvisited: int) -> bool:
        if len(path) > len(best):
            best[:] = path
            if len(best) == n:
                return True
        avail = _reach(adj, cur, unvisited | (1 << cur))
        if len(path) + avail.bit_count() - 1 <= len(best):
            return False
        for x in iter_bits(adj[cur] & unvisited):
            path.append(x)
            if rec(path, x, unvisited & ~(1 << x)):
                return True
            path.pop()
        return False

    for s in sorted(range(n), key=lambda v: (g.degree(v), v)):
        if rec([s], s, full & ~(1 << s)):
            break
    return PathWitness(tuple(best), WitnessKind.PATH)


def is_1_hamiltonian(g: Graph) -> bool:
    """``g`` and every vertex-deleted subgraph are hamiltonian."""
    if g.n < 3:
        raise TooSmall("1-hamiltonicity needs at least 3 vertices")
    if g.n == 3 or g.min_degree() < 3:
        return False
    if not is_hamiltonian(g):
        return False
    return all(is_hamiltonian(delete_vertex(g, v)[0]) for v in range(g.n))


__all__ = [
    "PathWitness",
    "WitnessKind",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "hamiltonian_path_between",
    "hamiltonian_path_endpoints",
    "is_1_hamiltonian",
    "is_hamiltonian",
    "is_traceable",
    "longest_path",
    "reach",
]
