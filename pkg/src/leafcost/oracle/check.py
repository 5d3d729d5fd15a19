"""Agreement suites between the fast modules and the brute-force oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from ..classify import FragmentClass, classify_leaf_guaranteed, fragment_class, verify_prop_lgg
from ..faultcost import fault_cost
from ..graph import is_connected
from ..hamilton import is_1_hamiltonian
from ..mlst import ml_profile, ml_profile_deleted
from .brute import brute_fault_cost, brute_ml_profile, brute_ml_profile_deleted
from .generate import ConnectivityFilter, GraphClassFilter, all_graphs, generate_nonisomorphic

TWO_CONNECTED = GraphClassFilter(connectivity=ConnectivityFilter.TWO_CONNECTED)
CUBIC = GraphClassFilter(connectivity=ConnectivityFilter.TWO_CONNECTED, regular_degree=3)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"check": self.name, "ok": self.ok, "detail": self.detail, "seconds": round(self.seconds, 3)}


def _profiles_agree(n_max: int) -> tuple[bool, str]:
    count = 0
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            if not is_connected(g):
                continue
            fast, slow = ml_profile(g), brute_ml_profile(g)
            if fast.ml != slow.ml or fast.profiles != slow.profiles:
                return False, f"ml profiles differ on n={n} graph {g.adj}"
            count += 1
    return True, f"{count} connected graphs"


def _deleted_profiles_agree(n_max: int) -> tuple[bool, str]:
    count = 0
    for n in range(3, n_max + 1):
        for g in generate_nonisomorphic(n, TWO_CONNECTED):
            for v in range(n):
                fast, slow = ml_profile_deleted(g, v), brute_ml_profile_deleted(g, v)
                if fast.ml != slow.ml or fast.profiles != slow.profiles:
                    return False, f"profiles of G - {v} differ on {g.adj}"
            count += 1
    return True, f"{count} 2-connected graphs"


def _fault_costs_agree(graphs) -> tuple[bool, str]:
    count = 0
    for g in graphs:
        fast, slow = fault_cost(g), brute_fault_cost(g)
        if fast.phi != slow.phi or fast.per_profile_phi != slow.per_profile_phi:
            return False, f"fault costs differ on {g.adj}: {fast.phi} vs {slow.phi}"
        if (fast.phi == 0) != is_1_hamiltonian(g):
            return False, f"fault cost 0 without 1-hamiltonicity on {g.adj}"
        count += 1
    return True, f"{count} graphs"


def _general_fc(n_lo: int, n_hi: int) -> Callable[[], tuple[bool, str]]:
    def run():
        return _fault_costs_agree(g for n in range(n_lo, n_hi + 1) for g in generate_nonisomorphic(n, TWO_CONNECTED))

    return run


def _cubic_fc(n_hi: int) -> Callable[[], tuple[bool, str]]:
    def run():
        return _fault_costs_agree(g for n in range(4, n_hi + 1, 2) for g in generate_nonisomorphic(n, CUBIC))

    return run


def _cubic_counts() -> tuple[bool, str]:
    # 2-connected cubic census for orders 4..12
    expected = {4: 1, 6: 2, 8: 5, 10: 18, 12: 81}
    got = {n: sum(1 for _ in generate_nonisomorphic(n, CUBIC)) for n in expected}
    return got == expected, f"counts {got}"


def _cubic_12_profiles() -> tuple[bool, str]:
    count = 0
    for g in generate_nonisomorphic(12, CUBIC):
        fast, slow = ml_profile(g), brute_ml_profile(g)
        if fast.ml != slow.ml or fast.profiles != slow.profiles:
            return False, f"ml profiles differ on {g.adj}"
        count += 1
    return True, f"{count} cubic graphs"


def _constructions() -> tuple[bool, str]:
    from .. import constructions as c

    problems = []
    for m in range(3, 7):
        want = m + 1 if m % 2 else m + 2
        if fault_cost(c.build_Gm(m).graph).phi != want:
            problems.append(f"G_{m}")
    for m in range(5, 7):
        want = m - 2 if m % 2 else m - 1
        if fault_cost(c.build_Hm(m).graph).phi != want:
            problems.append(f"H_{m}")
    t1, t2 = c.build_type1_fig4(), c.build_type2_fig4()
    if not all(c.verify_type1(t1.graph, **t1.roles).values()):
        problems.append("type1")
    if not all(c.verify_type2(t2.graph, **t2.roles).values()):
        problems.append("type2")
    for f in c.build_weak_fragments_fig5():
        if fragment_class(f.graph, f.roles["a"], f.roles["x"], f.roles["y"]).cls < FragmentClass.WEAK:
            problems.append(f.name)
    for f in c.build_medium_fragments_fig6():
        if fragment_class(f.graph, f.roles["a"], f.roles["x"], f.roles["y"]).cls != FragmentClass.MEDIUM:
            problems.append(f.name)
    for k, ex in c.fig11_exemplars().items():
        if ex.graph.n <= 10 and brute_fault_cost(ex.graph).phi != k:
            problems.append(f"phi{k}")
    lab = classify_leaf_guaranteed(c.build_bipartite12().graph)
    if lab.ml != 2 or not lab.is_leaf_guaranteed:
        problems.append("bipartite12")
    return not problems, ", ".join(problems) or "all constructions as expected"


def _petersen_g3() -> tuple[bool, str]:
    from ..constructions import build_petersen_Gk

    gk = build_petersen_Gk(3)
    rep = verify_prop_lgg(gk.graph)
    ok = rep.label.ml == 3 and rep.two_value_law and gk.roles["x"] in rep.never_leaf
    return ok, f"ml={rep.label.ml}, class={rep.label.label.value}"


SUITES: dict[str, list[tuple[str, Callable[[], tuple[bool, str]]]]] = {
    "default": [
        ("ml-profiles-n<=7", lambda: _profiles_agree(7)),
        ("deleted-profiles-2conn-n<=7", lambda: _deleted_profiles_agree(7)),
        ("fault-cost-2conn-n<=7", _general_fc(3, 7)),
        ("cubic-fault-cost-n<=10", _cubic_fc(10)),
        ("constructions", _constructions),
    ],
    "extended": [
        ("fault-cost-2conn-n=8", _general_fc(8, 8)),
        ("cubic-census-n<=12", _cubic_counts),
        ("cubic-ml-profiles-n=12", _cubic_12_profiles),
        ("petersen-G3", _petersen_g3),
    ],
}


def run_checks(tier: str = "default") -> list[CheckResult]:
    """Run the suites of ``tier``; the extended tier includes the default one."""
    if tier not in SUITES:
        raise ValueError(f"unknown tier {tier!r}")
    names = ["default"] if tier == "default" else ["default", tier]
    out = []
    for suite in names:
        for name, fn in SUITES[suite]:
            start = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # report, keep going
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(CheckResult(name, ok, detail, time.perf_counter() - start))
    return out


__all__ = ["CheckResult", "SUITES", "run_checks"]
