"""Transition costs and the fault cost of a 2-connected graph.

For an ml-subgraph ``S`` of ``G`` and an ml-subgraph ``S_v`` of ``G - v`` the
transition cost counts the surviving vertices whose degree differs.  The
fault cost is ``min_S max_v min_{S_v} tau(S, S_v)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LabelSpaceMismatch, NotTwoConnected
from .graph import Graph, is_two_connected
from .mlst import DegreeProfile, MlProfile, ml_profile, ml_profile_deleted


@dataclass(frozen=True)
class FaultCostReport:
    phi: int
    optimal_profile: DegreeProfile
    per_vertex_cost: tuple[int, ...]
    per_profile_phi: dict[DegreeProfile, int]
    ml: int
    ml_deleted: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "phi": self.phi,
            "ml": self.ml,
            "ml_deleted": list(self.ml_deleted),
            "optimal_profile": list(self.optimal_profile.degrees),
            "per_vertex": list(self.per_vertex_cost),
        }


def transition_cost(s: DegreeProfile, sv: DegreeProfile, ceiling: int | None = None) -> int:
    """Number of vertices other than ``sv.deleted`` whose degree differs.

    With a ``ceiling`` the scan stops as soon as the count exceeds it; the
    returned value is then only guaranteed to be larger than the ceiling.
    """
    if s.n != sv.n or s.deleted is not None or sv.deleted is None:
        raise LabelSpaceMismatch("need a profile of G and a profile of G - v over the same labels")
    live = ~(1 << sv.deleted)
    diff = ((s.leaf_mask ^ sv.leaf_mask) | (s.deg2_mask ^ sv.deg2_mask)) & live
    count = diff.bit_count()
    if ceiling is not None and count > ceiling:
        return count
    other = sv.degrees
    dv = sv.deleted
    for w, d in s.branches:
        if w != dv and not diff >> w & 1 and other[w] != d:
            count += 1
            if ceiling is not None and count > ceiling:
                return count
    return count


def _min_cost(s: DegreeProfile, options: list[DegreeProfile], early_exit: bool) -> int:
    best = None
    for sv in options:
        if early_exit and best is not None:
            c = transition_cost(s, sv, best - 1)
        else:
            c = transition_cost(s, sv)
        if best is None or c < best:
            best = c
            if best == 0:
                break
    assert best is not None
    return best


def deleted_profiles(g: Graph, base: MlProfile) -> list[MlProfile]:
    """ml-profiles of every ``g - v``, bounded by what ``base`` already implies.

    If ``v`` is a leaf of some ml-subgraph of ``g``, removing it leaves a
    spanning tree of ``g - v`` with at most ``ml(g)`` leaves.  Otherwise the
    search is bounded by ``ml(g) + max degree`` and repeated without a bound
    in the (never observed) case that this bound is too small.
    """
    leafy = base.leaf_union()
    loose = base.ml + g.max_degree()
    out = []
    for v in range(g.n):
        upper = base.ml if leafy >> v & 1 else loose
        prof = ml_profile_deleted(g, v, max(upper, 2))
        if prof.bound_exceeded:
            prof = ml_profile_deleted(g, v)
        out.append(prof)
    return out


def fault_cost(g: Graph, early_exit: bool = True) -> FaultCostReport:
    """Fault cost with the optimal ml-subgraph profile and per-vertex costs."""
    if not is_two_connected(g):
        raise NotTwoConnected("fault cost needs a 2-connected graph")
    base = ml_profile(g)
    assert base.ml is not None
    subs = deleted_profiles(g, base)
    ml_deleted = tuple(p.ml for p in subs)
    if base.ml == 1 and all(m == 1 for m in ml_deleted):
        # 1-hamiltonian: every profile is all 2s, nothing changes
        (s,) = base.profiles
        return FaultCostReport(0, s, (0,) * g.n, {s: 0}, 1, ml_deleted)

    options = [p.sorted_profiles() for p in subs]
    per_profile: dict[DegreeProfile, int] = {}
    best_phi = None
    best: tuple[DegreeProfile, tuple[int, ...]] | None = None
    for s in base.sorted_profiles():
        costs = tuple(_min_cost(s, options[v], early_exit) for v in range(g.n))
        phi_s = max(costs)
        per_profile[s] = phi_s
        if best_phi is None or phi_s < best_phi:
            best_phi = phi_s
            best = (s, costs)
    assert best is not None and best_phi is not None
    return FaultCostReport(best_phi, best[0], best[1], per_profile, base.ml, ml_deleted)


def phi(g: Graph) -> int:
    return fault_cost(g).phi


def transition_table(s: DegreeProfile, subs: list[MlProfile]) -> list[list[int]]:
    """For each deleted vertex, the sorted transition costs from ``s`` to every ml-profile of ``g - v``."""
    return [sorted(transition_cost(s, sv) for sv in sub.sorted_profiles()) for sub in subs]


__all__ = [
    "FaultCostReport",
    "deleted_profiles",
    "fault_cost",
    "phi",
    "transition_cost",
    "transition_table",
]
