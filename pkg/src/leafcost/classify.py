"""Leaf-guaranteed classification, tfc1 certificates and fragment classes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum, IntEnum

from .errors import IndexOutOfRange, NotLeafGuaranteed, NotTwoLeafStable, PreconditionViolated, TooSmall
from .graph import Graph, add_edge, is_connected, is_two_connected
from .hamilton import PathWitness, WitnessKind, _cycle_search, _path_search, _traceable_search
from .mlst import ml_number, ml_number_deleted, ml_profile, ml_profile_deleted


class LeafClass(Enum):
    LEAF_STABLE = "leaf-stable"
    LEAF_CRITICAL = "leaf-critical"
    LEAF_GUARANTEED_MIXED = "leaf-guaranteed-mixed"
    NOT_LEAF_GUARANTEED = "not-leaf-guaranteed"


@dataclass(frozen=True)
class ClassLabel:
    ml: float
    vertex_deleted_mls: tuple[float, ...]
    label: LeafClass

    @property
    def is_leaf_guaranteed(self) -> bool:
        return self.label is not LeafClass.NOT_LEAF_GUARANTEED

    def to_dict(self) -> dict:
        def num(x):
            return None if x == math.inf else int(x)

        return {
            "ml": num(self.ml),
            "ml_deleted": [num(m) for m in self.vertex_deleted_mls],
            "class": self.label.value,
        }


def _label(ml: float, subs: tuple[float, ...]) -> LeafClass:
    if ml == math.inf or any(m > ml for m in subs):
        return LeafClass.NOT_LEAF_GUARANTEED
    if all(m == ml for m in subs):
        return LeafClass.LEAF_STABLE
    if all(m == ml - 1 for m in subs):
        return LeafClass.LEAF_CRITICAL
    return LeafClass.LEAF_GUARANTEED_MIXED


def classify_leaf_guaranteed(g: Graph) -> ClassLabel:
    """ml of ``g`` and of each ``g - v``, and the resulting leaf-guaranteed family."""
    if g.n < 3:
        raise TooSmall("classification needs at least 3 vertices")
    ml = ml_number(g)
    subs = tuple(ml_number_deleted(g, v) for v in range(g.n))
    return ClassLabel(ml, subs, _label(ml, subs))


def is_hypohamiltonian(g: Graph) -> bool:
    if g.n < 4 or _cycle_search(g.adj, g.full_mask) is not None:
        return False
    full = g.full_mask
    return all(_cycle_search(g.adj, full & ~(1 << v)) is not None for v in range(g.n))


def is_hypotraceable(g: Graph) -> bool:
    if g.n < 4 or _traceable_search(g.adj, g.full_mask) is not None:
        return False
    full = g.full_mask
    return all(_traceable_search(g.adj, full & ~(1 << v)) is not None for v in range(g.n))


@dataclass(frozen=True)
class LeafGuaranteedReport:
    """Structural checks for a leaf-guaranteed graph.

    ``always_leaf`` lists vertices that are leaves of every ml-subgraph (the
    structure law wants none); ``never_leaf`` lists vertices that are a leaf of
    no ml-subgraph, which is allowed and happens in glued Petersen graphs.
    """

    label: ClassLabel
    two_connected: bool
    max_degree_at_least_3: bool
    two_value_law: bool
    always_leaf: tuple[int, ...]
    never_leaf: tuple[int, ...]

    @property
    def all_pass(self) -> bool:
        return self.two_connected and self.max_degree_at_least_3 and self.two_value_law and not self.always_leaf


def verify_prop_lgg(g: Graph) -> LeafGuaranteedReport:
    label = classify_leaf_guaranteed(g)
    if not label.is_leaf_guaranteed:
        raise NotLeafGuaranteed("graph is not leaf-guaranteed")
    k = label.ml
    prof = ml_profile(g)
    always = tuple(v for v in range(g.n) if all(p.degrees[v] == 1 for p in prof.profiles))
    never = tuple(v for v in range(g.n) if not any(p.degrees[v] == 1 for p in prof.profiles))
    return LeafGuaranteedReport(
        label=label,
        two_connected=is_two_connected(g),
        max_degree_at_least_3=g.max_degree() >= 3,
        two_value_law=all(m in (k - 1, k) for m in label.vertex_deleted_mls),
        always_leaf=always,
        never_leaf=never,
    )


# tfc1 -----------------------------------------------------------------------


def _path_pairs(profiles) -> set[tuple[int, int]]:
    out = set()
    for p in profiles:
        leaves = p.leaves
        if len(leaves) == 2:
            out.add((leaves[0], leaves[1]))
    return out


def tfc1_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs ``(a1, a2)`` joined by a hamiltonian path in ``g`` and in every ``g - x``, ``x`` not in the pair.

    Only meaningful for 2-leaf-stable graphs, where the ml-subgraphs of ``g``
    and of each ``g - x`` are exactly the hamiltonian paths.  Sorted by degree
    sum, then by label.
    """
    label = classify_leaf_guaranteed(g)
    if label.label is not LeafClass.LEAF_STABLE or label.ml != 2:
        raise NotTwoLeafStable("tfc1 certificates need a 2-leaf-stable graph")
    cands = _path_pairs(ml_profile(g).profiles)
    for x in range(g.n):
        if not cands:
            break
        here = _path_pairs(ml_profile_deleted(g, x).profiles)
        cands = {p for p in cands if x in p or p in here}
    return sorted(cands, key=lambda p: (g.degree(p[0]) + g.degree(p[1]), p))


def tfc1_certificate(g: Graph) -> tuple[int, int] | None:
    pairs = tfc1_pairs(g)
    return pairs[0] if pairs else None


# fragments ------------------------------------------------------------------


class FragmentClass(IntEnum):
    NOT_WEAK = 0
    WEAK = 1
    MEDIUM = 2
    STRONG = 3


@dataclass(frozen=True)
class FragmentSpec:
    h: Graph
    a: int
    x: int
    y: int
    cls: FragmentClass
    witnesses: dict = field(default_factory=dict, compare=False)
    # witnesses maps None (for h itself) or a deleted vertex v to a hamiltonian
    # path of h - v from a to x or y

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "x": self.x,
            "y": self.y,
            "class": self.cls.name.lower(),
            "witnesses": {
                ("H" if v is None else str(v)): list(w.order) for v, w in self.witnesses.items()
            },
        }


def _check_roles(h: Graph, a: int, x: int, y: int) -> None:
    for v in (a, x, y):
        if not 0 <= v < h.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{h.n - 1}")
    if len({a, x, y}) != 3:
        raise PreconditionViolated("a, x, y must be distinct")
    if not h.has_edge(x, y):
        raise PreconditionViolated("x and y must be adjacent")
    if not is_connected(h):
        raise PreconditionViolated("fragment must be connected")


def fragment_class(h: Graph, a: int, x: int, y: int) -> FragmentSpec:
    """Strongest fragment class of ``(h, a, x, y)``.

    weak: ``h`` and every ``h - v`` (``v != a``) have a hamiltonian path from
    ``a`` to ``x`` or ``y``; medium: additionally no hamiltonian ``xy``-path in
    ``h``; strong: additionally none in any ``h - v`` with ``v != a``.
    """
    _check_roles(h, a, x, y)
    adj = h.adj
    full = h.full_mask
    ends = (1 << x) | (1 << y)
    witnesses: dict = {}
    order = _path_search(adj, a, full, ends)
    cls = FragmentClass.WEAK
    if order is None:
        cls = FragmentClass.NOT_WEAK
    else:
        witnesses[None] = PathWitness(tuple(order), WitnessKind.PATH)
        for v in range(h.n):
            if v == a:
                continue
            order = _path_search(adj, a, full & ~(1 << v), ends & ~(1 << v))
            if order is None:
                cls = FragmentClass.NOT_WEAK
                break
            witnesses[v] = PathWitness(tuple(order), WitnessKind.PATH)
    if cls is FragmentClass.WEAK and _path_search(adj, x, full, 1 << y) is None:
        cls = FragmentClass.MEDIUM
        if all(
            _path_search(adj, x, full & ~(1 << v), 1 << y) is None
            for v in range(h.n)
            if v not in (a, x, y)
        ):
            cls = FragmentClass.STRONG
    if cls is FragmentClass.NOT_WEAK:
        witnesses = {}
    return FragmentSpec(h, a, x, y, cls, witnesses)


def find_fragment_roles(h: Graph, want: FragmentClass = FragmentClass.WEAK) -> list[tuple[int, int, int]]:
    """All ``(a, x, y)`` with ``x < y`` adjacent whose class is at least ``want``."""
    out = []
    for x, y in sorted(h.edges()):
        for a in range(h.n):
            if a in (x, y):
                continue
            if fragment_class(h, a, x, y).cls >= want:
                out.append((a, x, y))
    return out


# separator checks -----------------------------------------------------------


@dataclass(frozen=True)
class SeparatorChecks:
    disjoint: bool
    two_fragments: bool
    corner_paths: bool
    fragment_paths: bool
    closure: bool | None


def check_tfc1_separator(g: Graph, a1: int, a2: int, x: int, y: int, check_closure: bool = True) -> SeparatorChecks:
    """Structural consequences of a tfc1 certificate ``(a1, a2)`` at the 2-separator ``{x, y}``.

    * the pair avoids the separator;
    * there are exactly two 2-fragments, one holding each ``a_i``;
    * ``G_i - y`` has a hamiltonian ``a_i x``-path and ``G_i - x`` an ``a_i y``-path;
    * for every ``v`` in ``G_i`` other than ``a_i``, one of ``G_i - v``,
      ``G_i - x - v``, ``G_i - y - v`` has a hamiltonian path from ``a_i`` to ``x`` or ``y``;
    * if ``xy`` is not an edge, ``g + xy`` again has fault cost 1.
    """
    from .faultcost import fault_cost
    from .graph import components

    sep = (1 << x) | (1 << y)
    comps = components(g, g.full_mask & ~sep)
    disjoint = not {a1, a2} & {x, y}
    holders = [next((c for c in comps if c >> a & 1), 0) for a in (a1, a2)]
    two = len(comps) == 2 and holders[0] != holders[1] and all(holders)
    corner = fragment = two
    if two:
        for a, comp in zip((a1, a2), holders):
            vs = comp | sep
            adj = g.adj
            xb, yb = 1 << x, 1 << y
            if _path_search(adj, a, vs & ~yb, xb) is None or _path_search(adj, a, vs & ~xb, yb) is None:
                corner = False
            for v in range(g.n):
                if not vs >> v & 1 or v == a:
                    continue
                vb = 1 << v
                ok = False
                for drop in (0, xb, yb):
                    within = vs & ~vb & ~drop
                    if drop == vb:
                        continue
                    ends = sep & within
                    if ends and _path_search(adj, a, within, ends) is not None:
                        ok = True
                        break
                if not ok:
                    fragment = False
    closure = None
    if check_closure and not g.has_edge(x, y):
        closure = fault_cost(add_edge(g, x, y)).phi == 1
    return SeparatorChecks(disjoint, two, corner, fragment, closure)


__all__ = [
    "ClassLabel",
    "FragmentClass",
    "FragmentSpec",
    "LeafClass",
    "LeafGuaranteedReport",
    "SeparatorChecks",
    "check_tfc1_separator",
    "classify_leaf_guaranteed",
    "find_fragment_roles",
    "fragment_class",
    "is_hypohamiltonian",
    "is_hypotraceable",
    "tfc1_certificate",
    "tfc1_pairs",
    "verify_prop_lgg",
]
