"""Minimum leaf numbers and the degree sequences of all minimum-leaf subgraphs.

The profile computation has three tiers:

1. hamiltonian graph: the single profile with every degree 2;
2. traceable graph: one profile per non-adjacent pair joined by a hamiltonian
   path, with the pair at degree 1 and everything else at degree 2;
3. otherwise a backtracking search over spanning trees that keeps every
   distinct degree sequence among the trees with fewest leaves.

Every routine works on a vertex mask of the host graph, so the profiles of
``G - v`` are indexed by the labels of ``G`` and carry ``deleted = v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import Disconnected, IndexOutOfRange
from .graph import Graph, is_connected, iter_bits
from .hamilton import _cycle_search, _endpoint_pairs, _traceable_search, nonadjacent_pairs


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees of one minimum-leaf subgraph, over the labels of the host graph."""

    degrees: tuple[int, ...]
    deleted: int | None = None
    leaf_mask: int = field(default=0, compare=False)
    deg2_mask: int = field(default=0, compare=False)
    branches: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int], deleted: int | None = None) -> "DegreeProfile":
        degrees = tuple(degrees)
        if deleted is not None and degrees[deleted] != 0:
            raise ValueError("the deleted vertex cannot carry a degree")
        leaf = deg2 = 0
        branches = []
        for v, d in enumerate(degrees):
            if v == deleted:
                continue
            if d == 1:
                leaf |= 1 << v
            elif d == 2:
                deg2 |= 1 << v
            elif d >= 3:
                branches.append((v, d))
        return cls(degrees, deleted, leaf, deg2, tuple(branches))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def num_leaves(self) -> int:
        return self.leaf_mask.bit_count()

    @property
    def leaves(self) -> list[int]:
        return list(iter_bits(self.leaf_mask))

    def is_leaf(self, v: int) -> bool:
        return bool(self.leaf_mask >> v & 1)


class ProfileKind(Enum):
    HAM_CYCLE = "ham_cycle"
    HAM_PATH = "ham_path"
    TREE = "tree"


@dataclass(frozen=True)
class MlProfile:
    """``ml`` and every distinct degree profile of the ml-subgraphs.

    ``bound_exceeded`` is set (with ``ml`` None and no profiles) when a leaf
    bound was supplied and no spanning tree meets it.
    """

    ml: int | None
    kind: ProfileKind
    profiles: frozenset[DegreeProfile]
    bound_exceeded: bool = False

    def sorted_profiles(self) -> list[DegreeProfile]:
        return sorted(self.profiles, key=lambda p: p.degrees)

    def leaf_union(self) -> int:
        out = 0
        for p in self.profiles:
            out |= p.leaf_mask
        return out


def _exceeded() -> MlProfile:
    return MlProfile(None, ProfileKind.TREE, frozenset(), True)


def _pad(g: Graph, degrees: dict[int, int], deleted: int | None) -> DegreeProfile:
    out = [0] * g.n
    for v, d in degrees.items():
        out[v] = d
    return DegreeProfile.from_degrees(out, deleted)


class _TreeSearch:
    """Backtracking over spanning trees of ``G[within]``.

    Each node grows the current subtree by one edge chosen as follows: the tree
    vertex with an unused outward edge that has the fewest undecided incident
    edges (``d_G - d_T - d_F``), then its outside neighbour with the fewest
    undecided edges; ties go to the lowest label.  The edge is first added and
    then forbidden.  A branch is cut when some outside vertex can no longer be
    reached through non-forbidden edges, or when a lower bound on the final
    leaf count exceeds the best count seen.
    """

    def __init__(self, g: Graph, within: int, bound: int, keep_ties: bool = True):
        self.g = g
        self.adj = [nb & within for nb in g.adj]
        self.within = within
        self.best = bound
        self.keep_ties = keep_ties
        self.found: set[tuple[int, ...]] = set()
        self.tdeg = [0] * g.n
        self.forb = [0] * g.n
        self.deg = [nb.bit_count() for nb in self.adj]
        self.nodes = 0

    def run(self) -> None:
        root = min(iter_bits(self.within), key=lambda v: (-self.deg[v], v))
        self._rec(1 << root, 0)

    def _record(self, leaves: int) -> None:
        if leaves < self.best:
            self.best = leaves
            self.found.clear()
        self.found.add(tuple(self.tdeg))

    def _rec(self, tree: int, leaves: int) -> None:
        self.nodes += 1
        within = self.within
        if tree == within:
            if leaves < self.best or (leaves == self.best and self.keep_ties):
                self._record(leaves)
            return
        adj, forb, tdeg, deg = self.adj, self.forb, self.tdeg, self.deg
        outside = within & ~tree

        # every outside vertex must stay reachable from the tree
        seen = tree
        frontier = tree
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u] & ~forb[u]
            frontier = nxt & outside & ~seen
            seen |= frontier
        if seen != within:
            return

        # vertices certain to end as leaves
        forced = 0
        for x in iter_bits(outside):
            if (adj[x] & ~forb[x]).bit_count() == 1:
                forced += 1
        best_v = -1
        best_key = None
        for v in iter_bits(tree):
            out = adj[v] & ~forb[v] & outside
            if not out:
                if tdeg[v] == 1:
                    forced += 1
                continue
            key = deg[v] - tdeg[v] - forb[v].bit_count()
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
        bound = max(leaves, forced)
        if bound > self.best or (bound == self.best and not self.keep_ties):
            return
        v = best_v
        cands = adj[v] & ~forb[v] & outside
        w = min(iter_bits(cands), key=lambda x: (deg[x] - forb[x].bit_count(), x))
        wbit = 1 << w

        old = tdeg[v]
        tdeg[v] = old + 1
        tdeg[w] = 1
        if old == 0:
            gained = 2
        elif old == 1:
            gained = 0
        else:
            gained = 1
        self._rec(tree | wbit, leaves + gained)
        tdeg[v] = old
        tdeg[w] = 0

        forb[v] |= wbit
        forb[w] |= 1 << v
        self._rec(tree, leaves)
        forb[v] &= ~wbit
        forb[w] &= ~(1 << v)


def _profile_within(g: Graph, within: int, deleted: int | None, upper: int | None) -> MlProfile:
    adj = g.adj
    size = within.bit_count()
    if size == 0:
        raise Disconnected("empty vertex set")
    if not is_connected(g, within):
        raise Disconnected("graph is disconnected")
    if size == 1:
        (v,) = iter_bits(within)
        prof = _pad(g, {v: 0}, deleted)
        if upper is not None and upper < 0:
            return _exceeded()
        return MlProfile(0, ProfileKind.TREE, frozenset([prof]))
    if size == 2:
        if upper is not None and upper < 2:
            return _exceeded()
        prof = _pad(g, {v: 1 for v in iter_bits(within)}, deleted)
        return MlProfile(2, ProfileKind.HAM_PATH, frozenset([prof]))

    if _cycle_search(adj, within) is not None:
        if upper is not None and upper < 1:
            return _exceeded()
        prof = _pad(g, {v: 2 for v in iter_bits(within)}, deleted)
        return MlProfile(1, ProfileKind.HAM_CYCLE, frozenset([prof]))
    if upper is not None and upper < 2:
        return _exceeded()

    if _traceable_search(adj, within) is not None:
        pairs = _endpoint_pairs(adj, within, nonadjacent_pairs(adj, within))
        profs = set()
        for u, v in pairs:
            degs = {x: 2 for x in iter_bits(within)}
            degs[u] = degs[v] = 1
            profs.add(_pad(g, degs, deleted))
        return MlProfile(2, ProfileKind.HAM_PATH, frozenset(profs))
    if upper is not None and upper < 3:
        return _exceeded()

    bound = size if upper is None else upper
    search = _TreeSearch(g, within, bound)
    search.run()
    if not search.found:
        return _exceeded()
    profs = frozenset(DegreeProfile.from_degrees(d, deleted) for d in search.found)
    return MlProfile(search.best, ProfileKind.TREE, profs)


def ml_profile(g: Graph) -> MlProfile:
    """ml(g) and the distinct degree profiles of all its ml-subgraphs."""
    return _profile_within(g, g.full_mask, None, None)


def ml_profile_with_bound(g: Graph, upper: int) -> MlProfile:
    """As :func:`ml_profile`, searching only subgraphs with at most ``upper`` leaves."""
    return _profile_within(g, g.full_mask, None, upper)


def ml_profile_deleted(g: Graph, v: int, upper: int | None = None) -> MlProfile:
    """Profiles of ``g - v`` indexed by the labels of ``g``, with ``deleted = v``."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return _profile_within(g, g.full_mask & ~(1 << v), v, upper)


def _ml_within(g: Graph, within: int) -> float:
    size = within.bit_count()
    if size == 0 or not is_connected(g, within):
        return math.inf
    if size == 1:
        return 0
    if size == 2:
        return 2
    if _cycle_search(g.adj, within) is not None:
        return 1
    if _traceable_search(g.adj, within) is not None:
        return 2
    search = _TreeSearch(g, within, size, keep_ties=False)
    search.run()
    return search.best


def ml_number(g: Graph) -> float:
    """Minimum leaf number; ``math.inf`` for disconnected graphs, ``ml(K1) = 0``, ``ml(K2) = 2``."""
    if g.n == 0:
        return math.inf
    return _ml_within(g, g.full_mask)


def ml_number_deleted(g: Graph, v: int) -> float:
    return _ml_within(g, g.full_mask & ~(1 << v))


__all__ = [
    "DegreeProfile",
    "MlProfile",
    "ProfileKind",
    "ml_number",
    "ml_number_deleted",
    "ml_profile",
    "ml_profile_deleted",
    "ml_profile_with_bound",
]
