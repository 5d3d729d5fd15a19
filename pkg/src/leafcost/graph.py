"""Bit-mask graph representation, graph6 codec and structural queries.

Vertices are labelled ``0..n-1`` and ``adj[v]`` is the neighbourhood of ``v``
as an integer bit mask.  Graphs are immutable; every operation returns a new
value.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, MalformedGraph6, NotASeparator

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def max_degree(self) -> int:
        return max((nb.bit_count() for nb in self.adj), default=0)

    def min_degree(self) -> int:
        return min((nb.bit_count() for nb in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={emit_graph6(self)!r})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (no ``>>graph6<<`` header, no sparse6)."""
    s = line.strip()
    if not s:
        raise MalformedGraph6("empty graph6 line")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"character outside the 63..126 range in {s!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise MalformedGraph6(f"unsupported size prefix in {s!r}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n > MAX_ORDER:
        raise MalformedGraph6(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"body length {len(body)} does not fit order {n}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6(f"nonzero padding bits in {s!r}")
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    acc = 0
    nacc = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return "".join(map(chr, out))


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

class Connectivity(IntEnum):
    DISCONNECTED = 0
    CONNECTED = 1
    TWO_CONNECTED = 2
    THREE_CONNECTED = 3


def reach(g: Graph, start: int, within: int) -> int:
    """Mask of vertices reachable from ``start`` inside the vertex set ``within``."""
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    rest = g.full_mask if within is None else within
    comps = []
    while rest:
        c = reach(g, (rest & -rest).bit_length() - 1, rest)
        comps.append(c)
        rest &= ~c
    return comps


def is_connected(g: Graph, within: int | None = None) -> bool:
    mask = g.full_mask if within is None else within
    if not mask:
        return True
    return reach(g, (mask & -mask).bit_length() - 1, mask) == mask


def cut_vertices(g: Graph) -> list[int]:
    full = g.full_mask
    return [v for v in range(g.n) if not is_connected(g, full & ~(1 << v))]


def connectivity_class(g: Graph) -> Connectivity:
    """Connectivity capped at 3; ``k``-connected requires more than ``k`` vertices."""
    n = g.n
    if n <= 1 or not is_connected(g):
        return Connectivity.DISCONNECTED
    if n == 2 or cut_vertices(g):
        return Connectivity.CONNECTED
    if n == 3 or two_separators(g):
        return Connectivity.TWO_CONNECTED
    return Connectivity.THREE_CONNECTED


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def two_separators(g: Graph) -> list[tuple[int, int]]:
    """All pairs ``(x, y)``, ``x < y``, whose removal leaves at least two components."""
    full = g.full_mask
    seps = []
    for y in range(g.n):
        for x in range(y):
            rest = full & ~(1 << x) & ~(1 << y)
            if rest and not is_connected(g, rest):
                seps.append((x, y))
    return seps


def fragments_of(g: Graph, sep: Sequence[int]) -> list[tuple[Graph, tuple[int, ...]]]:
    """The 2-fragments ``G[V(H) + X]``, one per component ``H`` of ``G - X``.

    Each fragment comes with the tuple mapping its labels back to ``g``'s.
    """
    x, y = sep
    xy = (1 << x) | (1 << y)
    comps = components(g, g.full_mask & ~xy)
    if len(comps) < 2:
        raise NotASeparator(f"{{{x}, {y}}} does not separate the graph")
    return [induced_subgraph(g, iter_bits(c | xy)) for c in comps]


# ---------------------------------------------------------------------------
# cycles and colourings
# ---------------------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


# ---------------------------------------------------------------------------
# derived graphs
# ---------------------------------------------------------------------------

def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G[X]`` relabelled compactly, plus the new-to-old label tuple."""
    keep = tuple(sorted(set(vertices)))
    _check_vertex(g, *keep)
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        nb = 0
        for u in iter_bits(g.adj[v]):
            if u in pos:
                nb |= 1 << pos[u]
        adj.append(nb)
    return Graph(len(keep), tuple(adj)), keep


def delete_vertices(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, (v for v in range(g.n) if not mask >> v & 1))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int | None, ...]]:
    """``G - v`` with labels compacted; the map sends old labels to new ones (``None`` for ``v``)."""
    _check_vertex(g, v)
    h, keep = delete_vertices(g, 1 << v)
    old_to_new: list[int | None] = [None] * g.n
    for new, old in enumerate(keep):
        old_to_new[old] = new
    return h, tuple(old_to_new)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u, v)
    if u == v:
        raise ValueError("cannot add a loop")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u, v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def identify(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Merge ``vertices`` into one vertex; loops and parallel edges collapse.

    The merged vertex takes the smallest label of the set; the remaining labels
    are compacted.  Returns the old-to-new label map.
    """
    group = sorted(set(vertices))
    _check_vertex(g, *group)
    if not group:
        return g, tuple(range(g.n))
    rep = group[0]
    old_to_new = []
    nxt = 0
    for v in range(g.n):
        if v in group and v != rep:
            old_to_new.append(-1)
        else:
            old_to_new.append(nxt)
            nxt += 1
    for v in group[1:]:
        old_to_new[v] = old_to_new[rep]
    edges = set()
    for u, v in g.edges():
        a, b = old_to_new[u], old_to_new[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(nxt, edges), tuple(old_to_new)


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[int]]:
    """Disjoint union; returns the label offset of each operand."""
    offsets = []
    adj: list[int] = []
    for h in graphs:
        off = len(adj)
        offsets.append(off)
        adj.extend(nb << off for nb in h.adj)
    return Graph(len(adj), tuple(adj)), offsets


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        nb = 0
        for u in iter_bits(g.adj[v]):
            nb |= 1 << perm[u]
        adj[perm[v]] = nb
    return Graph(g.n, tuple(adj))
