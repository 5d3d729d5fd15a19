"""Definitional reference computations, kept deliberately naive.

Nothing here uses the pruned searches: spanning trees are enumerated edge by
edge, hamiltonicity is a plain permutation or DFS scan, and fault costs are
the literal min-max-min over every pair of ml-subgraph profiles.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator

from ..errors import Disconnected, TooLarge
from ..faultcost import FaultCostReport
from ..graph import Graph, delete_vertex, is_connected
from ..mlst import DegreeProfile, MlProfile, ProfileKind

MAX_TREE_ORDER = 12
MAX_FC_ORDER = 10


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def all_spanning_trees(g: Graph) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every spanning tree of ``g`` once, as a tuple of edges."""
    if g.n > MAX_TREE_ORDER:
        raise TooLarge(f"spanning tree enumeration is limited to {MAX_TREE_ORDER} vertices")
    if g.n == 0 or not is_connected(g):
        raise Disconnected("spanning trees need a connected graph")
    edges = g.edges()
    need = g.n - 1
    chosen: list[tuple[int, int]] = []

    def rec(i: int, parent: list[int]) -> Iterator[tuple[tuple[int, int], ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(edges) - i < need - len(chosen):
            return
        u, v = edges[i]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            merged = parent.copy()
            merged[ru] = rv
            chosen.append((u, v))
            yield from rec(i + 1, merged)
            chosen.pop()
        yield from rec(i + 1, parent)

    yield from rec(0, list(range(g.n)))


def _permutation_cycle(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    for rest in itertools.permutations(range(1, n)):
        order = (0,) + rest
        if rest[0] > rest[-1]:
            continue
        if all(g.has_edge(a, b) for a, b in zip(order, order[1:] + (0,))):
            return True
    return False


def _dfs_cycle(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    full = g.full_mask

    def rec(cur: int, seen: int) -> bool:
        if seen == full:
            return g.has_edge(cur, 0)
        for x in g.neighbors(cur):
            if not seen >> x & 1 and rec(x, seen | 1 << x):
                return True
        return False

    return rec(0, 1)


def naive_is_hamiltonian(g: Graph) -> bool:
    return _permutation_cycle(g) if g.n <= 8 else _dfs_cycle(g)


def naive_hamiltonian_paths(g: Graph) -> set[tuple[int, int]]:
    """Endpoint pairs ``(u, v)``, ``u < v``, of all hamiltonian paths."""
    out = set()
    n = g.n
    for order in itertools.permutations(range(n)):
        if n > 1 and order[0] > order[-1]:
            continue
        if all(g.has_edge(a, b) for a, b in zip(order, order[1:])):
            out.add((order[0], order[-1]))
    return out


def _lift(degrees: list[int], new_to_old: tuple[int, ...], n: int, deleted: int) -> tuple[int, ...]:
    out = [0] * n
    for new, old in enumerate(new_to_old):
        out[old] = degrees[new]
    return tuple(out)


def brute_ml_profile(g: Graph) -> MlProfile:
    """ml and ml-subgraph profiles straight from the definitions."""
    if g.n > MAX_TREE_ORDER:
        raise TooLarge(f"brute-force profiles are limited to {MAX_TREE_ORDER} vertices")
    if g.n == 0 or not is_connected(g):
        raise Disconnected("graph is disconnected")
    if g.n == 1:
        return MlProfile(0, ProfileKind.TREE, frozenset([DegreeProfile.from_degrees((0,))]))
    if naive_is_hamiltonian(g):
        return MlProfile(1, ProfileKind.HAM_CYCLE, frozenset([DegreeProfile.from_degrees((2,) * g.n)]))
    best = math.inf
    seqs: set[tuple[int, ...]] = set()
    for tree in all_spanning_trees(g):
        deg = [0] * g.n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        leaves = deg.count(1)
        if leaves < best:
            best = leaves
            seqs = set()
        if leaves == best:
            seqs.add(tuple(deg))
    kind = ProfileKind.HAM_PATH if best == 2 else ProfileKind.TREE
    return MlProfile(int(best), kind, frozenset(DegreeProfile.from_degrees(s) for s in seqs))


def brute_ml_profile_deleted(g: Graph, v: int) -> MlProfile:
    h, old_to_new = delete_vertex(g, v)
    new_to_old = tuple(old for old, new in enumerate(old_to_new) if new is not None)
    sub = brute_ml_profile(h)
    lifted = frozenset(
        DegreeProfile.from_degrees(_lift(list(p.degrees), new_to_old, g.n, v), v) for p in sub.profiles
    )
    return MlProfile(sub.ml, sub.kind, lifted)


def brute_ml_number(g: Graph) -> float:
    if g.n == 0 or not is_connected(g):
        return math.inf
    return brute_ml_profile(g).ml


def naive_transition_cost(s: DegreeProfile, sv: DegreeProfile) -> int:
    return sum(1 for w in range(s.n) if w != sv.deleted and s.degrees[w] != sv.degrees[w])


def brute_fault_cost(g: Graph) -> FaultCostReport:
    """Literal min over S, max over v, min over S_v of the transition cost."""
    if g.n > MAX_FC_ORDER:
        raise TooLarge(f"brute-force fault cost is limited to {MAX_FC_ORDER} vertices")
    base = brute_ml_profile(g)
    subs = [brute_ml_profile_deleted(g, v) for v in range(g.n)]
    per_profile = {}
    best = None
    for s in sorted(base.profiles, key=lambda p: p.degrees):
        costs = tuple(
            min(naive_transition_cost(s, sv) for sv in subs[v].profiles) for v in range(g.n)
        )
        per_profile[s] = max(costs)
        if best is None or max(costs) < best[0]:
            best = (max(costs), s, costs)
    assert best is not None
    return FaultCostReport(best[0], best[1], best[2], per_profile, base.ml, tuple(p.ml for p in subs))


def independence_number(g: Graph) -> int:
    """Largest independent set size by subset scan (with a simple branch on the lowest vertex)."""
    if g.n > 20:
        raise TooLarge("independence number is limited to 20 vertices")

    def rec(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        without = rec(avail & ~(1 << v))
        with_v = 1 + rec(avail & ~(1 << v) & ~g.adj[v])
        return max(without, with_v)

    return rec(g.full_mask)


__all__ = [
    "all_spanning_trees",
    "brute_fault_cost",
    "brute_ml_number",
    "brute_ml_profile",
    "brute_ml_profile_deleted",
    "independence_number",
    "naive_hamiltonian_paths",
    "naive_is_hamiltonian",
    "naive_transition_cost",
]
