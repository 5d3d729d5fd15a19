"""Deterministic generators for the named graph families.

Vertex labels follow the declaration order of each builder, so the graph6
output of every construction is stable.  Graphs given by explicit node lists keep
their node numbers: node ``i`` becomes label ``i - 1`` unless stated
otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

from .classify import FragmentClass, FragmentSpec, fragment_class
from .errors import (
    KTooSmall,
    LeafCostError,
    MissingRoles,
    MTooSmall,
    NotAFragment,
    PreconditionViolated,
    TooLarge,
    TooSmall,
)
from .graph import MAX_ORDER, Graph, emit_graph6, iter_bits
from .hamilton import _path_search, longest_path


@dataclass(frozen=True)
class LabelledConstruction:
    graph: Graph
    roles: dict[str, int] = field(default_factory=dict)
    name: str = ""
    # for constructions built around an input graph: input label -> output label
    label_map: tuple[int, ...] | None = None

    def role(self, name: str) -> int:
        try:
            return self.roles[name]
        except KeyError:
            raise MissingRoles(f"{self.name or 'construction'} has no role {name!r}") from None

    def to_dict(self) -> dict:
        out = {"name": self.name, "graph6": emit_graph6(self.graph), "n": self.graph.n, "roles": self.roles}
        if self.label_map is not None:
            out["label_map"] = list(self.label_map)
        return out


class _Builder:
    def __init__(self, names: Iterable[Hashable] = ()):
        self.labels: dict[Hashable, int] = {}
        self.edges: set[tuple[int, int]] = set()
        for name in names:
            self.vertex(name)

    def vertex(self, name: Hashable) -> int:
        if name not in self.labels:
            self.labels[name] = len(self.labels)
        return self.labels[name]

    def path(self, *names: Hashable) -> None:
        for a, b in zip(names, names[1:]):
            u, v = self.vertex(a), self.vertex(b)
            if u == v:
                raise ValueError("loop in construction")
            self.edges.add((min(u, v), max(u, v)))

    def build(self, name: str, roles: dict[str, Hashable] | None = None, **extra) -> LabelledConstruction:
        n = len(self.labels)
        if n > MAX_ORDER:
            raise TooLarge(f"construction needs {n} vertices, more than {MAX_ORDER}")
        g = Graph.from_edges(n, self.edges)
        mapped = {r: self.labels[v] for r, v in (roles or {}).items()}
        return LabelledConstruction(g, mapped, name, **extra)


def _from_paths(name: str, nodes: Sequence[Hashable], paths: Sequence[Sequence[Hashable]], roles: dict) -> LabelledConstruction:
    b = _Builder(nodes)
    for p in paths:
        b.path(*p)
    return b.build(name, roles)


# fault-cost families ----------------------------------------------------------


def build_Gm(m: int) -> LabelledConstruction:
    """``u`` and ``v`` joined by ``m`` internally disjoint paths ``u a_i b_i v``."""
    if m < 3:
        raise MTooSmall("G_m needs m >= 3")
    b = _Builder(["u", "v"] + [f"a{i}" for i in range(m)] + [f"b{i}" for i in range(m)])
    for i in range(m):
        b.path("u", f"a{i}", f"b{i}", "v")
    roles = {"u": "u", "v": "v"} | {f"a{i}": f"a{i}" for i in range(m)} | {f"b{i}": f"b{i}" for i in range(m)}
    return b.build(f"G_{m}", roles)


def build_Hm(m: int) -> LabelledConstruction:
    """``G_m`` plus the chords ``a_0 a_1`` and ``b_2 b_3``."""
    if m < 5:
        raise MTooSmall("H_m needs m >= 5")
    base = build_Gm(m)
    b = _Builder(range(base.graph.n))
    for u, v in base.graph.edges():
        b.path(u, v)
    r = base.roles
    b.path(r["a0"], r["a1"])
    b.path(r["b2"], r["b3"])
    return b.build(f"H_{m}", {k: v for k, v in r.items()})


# leaf-guaranteed families -------------------------------------------------------


def build_Xi8() -> LabelledConstruction:
    """Three parallel ``vw`` edges, two of them subdivided, both ends blown up to triangles.

    The unsubdivided edge survives as the edge ``vw``.  Labels: ``v=0, 1, 2,
    w=3, 4, 5, 6, 7`` for nodes ``v, 1, 2, w, 3, 4, 5, 6``.
    """
    return _from_paths(
        "Xi8",
        ["v", 1, 2, "w", 3, 4, 5, 6],
        [("v", 1, 2, "v"), ("w", 3, 4, "w"), (1, 5, 3), (2, 6, 4), ("v", "w")],
        {"v": "v", "w": "w"},
    )


def _embedding_layout(g: Graph) -> tuple[int, list[int]]:
    """``k`` and, for each input vertex, its cycle position ``1..k``."""
    if g.n < 2:
        raise TooSmall("the input must not be K1")
    path = list(longest_path(g).order)
    p = len(path)
    rest = [v for v in range(g.n) if v not in set(path)]
    k = 2 * g.n - p + 1
    pos = [0] * g.n
    for i, v in enumerate(path, start=1):
        pos[v] = i
    for j, v in enumerate(rest, start=1):
        pos[v] = p + 2 * j
    return k, pos


def embed_1_leaf_guaranteed(g: Graph) -> LabelledConstruction:
    """Wheel over a ``k``-cycle threaded through ``g``; ``g`` sits inside as an induced subgraph.

    A longest path of ``g`` runs along cycle positions ``1..p``; the other
    vertices go to positions ``p+2, p+4, ...``.  The hub has label 0 and cycle
    position ``i`` has label ``i``.
    """
    k, pos = _embedding_layout(g)
    b = _Builder(range(k + 1))
    for i in range(1, k + 1):
        b.path(0, i, i % k + 1)
    for u, v in g.edges():
        b.path(pos[u], pos[v])
    return b.build("H'", {"v0": 0, "hub": 0}, label_map=tuple(pos))


def embed_k_leaf_guaranteed(g: Graph) -> LabelledConstruction:
    """The cycle graph of :func:`embed_1_leaf_guaranteed` without hub, each cycle edge replaced by ``Xi8``.

    Every copy of ``Xi8`` has its ``v`` and ``w`` on the two ends of the cycle
    edge it replaces and keeps that edge.  Cycle position ``i`` has label
    ``i - 1``; the six inner vertices of the copy on edge ``(i, i+1)`` follow
    in order.
    """
    k, pos = _embedding_layout(g)
    b = _Builder([("c", i) for i in range(1, k + 1)])
    xi = build_Xi8()
    inner = [v for v in range(xi.graph.n) if v not in (xi.roles["v"], xi.roles["w"])]
    for i in range(1, k + 1):
        j = i % k + 1
        name = {xi.roles["v"]: ("c", i), xi.roles["w"]: ("c", j)}
        for v in inner:
            name[v] = ("x", i, v)
            b.vertex(name[v])
        for u, v in xi.graph.edges():
            b.path(name[u], name[v])
    for u, v in g.edges():
        b.path(("c", pos[u]), ("c", pos[v]))
    return b.build("H''", {}, label_map=tuple(pos[v] - 1 for v in range(g.n)))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def build_petersen_Gk(k: int) -> LabelledConstruction:
    """``k`` copies of Petersen minus an edge ``vw``, all ``v`` merged into ``x`` and all ``w`` into ``y``."""
    if k < 2:
        raise KTooSmall("G_k needs k >= 2")
    p = petersen()
    b = _Builder(["x", "y"])
    for c in range(k):
        name = {0: "x", 1: "y"} | {v: (c, v) for v in range(2, 10)}
        for u, v in p.edges():
            if {u, v} != {0, 1}:
                b.path(name[u], name[v])
    return b.build(f"Petersen G_{k}", {"x": "x", "y": "y"})


def build_bipartite12() -> LabelledConstruction:
    """``C8`` on labels 0..7 with each long diagonal ``i, i+4`` subdivided by vertex ``8 + i``."""
    b = _Builder(range(12))
    for i in range(8):
        b.path(i, (i + 1) % 8)
    for i in range(4):
        b.path(i, 8 + i, i + 4)
    return b.build("bipartite12")


# fault cost 3 ---------------------------------------------------------------------


def build_type1_fig4() -> LabelledConstruction:
    """Ten-vertex Type 1 graph: labels ``v=0, 1..4, w=5, x=6, 7, y=8, 9`` for nodes ``v,1..4,w,5..8``."""
    return _from_paths(
        "type1",
        ["v", 1, 2, 3, 4, "w", 5, 6, 7, 8],
        [("v", 1, 2, 3, 4, "w"), ("v", 5, 6, 7, "w"), (6, 8), (1, 8), (4, 8), (3, 5), (2, 7)],
        {"v": "v", "w": "w", "x": 5, "y": 7},
    )


def build_type2_fig4() -> LabelledConstruction:
    """Six-vertex Type 2 graph: labels ``v=0, 1, 2, w=3, 4, 5``."""
    return _from_paths(
        "type2",
        ["v", 1, 2, "w", 3, 4],
        [("v", 1, 2, "w"), ("v", 3, 4, "w"), (1, 4), (2, 3)],
        {"v": "v", "w": "w"},
    )


def build_cubic_fc3(k: int) -> LabelledConstruction:
    """Ring of the Type 1 graph and ``k`` Type 2 graphs joined by the edges ``w_i v_{i+1}`` and ``w_k v_0``."""
    if k < 2:
        raise KTooSmall("the ring needs k >= 2 Type 2 graphs")
    t1, t2 = build_type1_fig4(), build_type2_fig4()
    b = _Builder()
    parts = [t1] + [t2] * k
    for i, part in enumerate(parts):
        for v in range(part.graph.n):
            b.vertex((i, v))
        for u, v in part.graph.edges():
            b.path((i, u), (i, v))
    for i in range(k + 1):
        j = (i + 1) % (k + 1)
        b.path((i, parts[i].roles["w"]), (j, parts[j].roles["v"]))
    roles = {"x": (0, t1.roles["x"]), "y": (0, t1.roles["y"])}
    for i, part in enumerate(parts):
        roles[f"v{i}"] = (i, part.roles["v"])
        roles[f"w{i}"] = (i, part.roles["w"])
    return b.build(f"cubic_fc3_{k}", roles)


def _spider(adj: Sequence[int], within: int, center: int, ends: Sequence[int]) -> bool:
    """Spanning tree of ``G[within]`` made of paths from ``center`` to each of ``ends``."""
    if len(ends) == 1:
        return _path_search(adj, center, within, 1 << ends[0]) is not None
    target, rest = ends[0], ends[1:]
    keep = sum(1 << e for e in rest)

    def legs(cur: int, used: int):
        for nxt in iter_bits(adj[cur] & within & ~used & ~keep):
            if nxt == target:
                yield used | (1 << nxt)
            else:
                yield from legs(nxt, used | (1 << nxt))

    for used in legs(center, 1 << center):
        remaining = (within & ~used) | (1 << center)
        if _spider(adj, remaining, center, rest):
            return True
    return False


def has_three_leaf_tree(g: Graph, leaves: Sequence[int], branch: int | None = None, within: int | None = None) -> bool:
    """A spanning tree of ``g[within]`` with exactly three leaves, containing ``leaves``.

    ``leaves`` lists two or three required leaves; ``branch`` optionally fixes
    the vertex of degree 3.
    """
    within = g.full_mask if within is None else within
    adj = g.adj
    third = [t for t in iter_bits(within) if t not in leaves] if len(leaves) == 2 else [None]
    centers = [branch] if branch is not None else list(iter_bits(within))
    for t in third:
        ends = list(leaves) + ([t] if t is not None else [])
        for c in centers:
            if c in ends or not within >> c & 1:
                continue
            if _spider(adj, within, c, ends):
                return True
    return False


def _ham(g: Graph, start: int, within: int, ends: int) -> bool:
    return _path_search(g.adj, start, within, ends) is not None


def verify_type1(g: Graph, v: int, w: int, x: int, y: int) -> dict[str, bool]:
    """Conditions (i)-(vi) of a Type 1 graph for the given ``v, w, x, y``."""
    full = g.full_mask
    bit = lambda *vs: sum(1 << u for u in vs)
    # (ii): a v..x path and a w..y path covering everything = a hamiltonian
    # vw-path through a new vertex adjacent only to x and y, with xy removed
    n = g.n
    aux = list(g.adj) + [bit(x, y)]
    aux[x] = (aux[x] & ~bit(y)) | bit(n)
    aux[y] = (aux[y] & ~bit(x)) | bit(n)
    split = _path_search(aux, v, full | bit(n), bit(w)) is not None
    return {
        "i": not _ham(g, v, full, bit(w)),
        "ii": split,
        "iii": _ham(g, v, full, bit(x, y)) and _ham(g, w, full, bit(x, y)),
        "iv": _ham(g, w, full & ~bit(v), bit(x, y)) and _ham(g, v, full & ~bit(w), bit(x, y)),
        "v": all(_ham(g, v, full & ~bit(u), bit(w)) for u in range(n) if u not in (v, w)),
        "vi": has_three_leaf_tree(g, [v, w, x], branch=y) or has_three_leaf_tree(g, [v, w, y], branch=x),
    }


def verify_type2(g: Graph, v: int, w: int) -> dict[str, bool]:
    """Type 2 conditions, plus the endpoint-exclusivity condition needed for two Type 2 graphs."""
    full = g.full_mask
    vb, wb = 1 << v, 1 << w
    per_vertex = all(
        _ham(g, v, full & ~(1 << u), wb) or has_three_leaf_tree(g, [v, w], within=full & ~(1 << u))
        for u in range(g.n)
        if u not in (v, w)
    )
    exclusive = all(
        not (_ham(g, v, full, 1 << t) and _ham(g, w, full, 1 << t)) for t in range(g.n) if t not in (v, w)
    )
    return {"vw_path": _ham(g, v, full, wb), "vertex_deleted": per_vertex, "exclusive_ends": exclusive}


# fragments and tfc1 graphs ----------------------------------------------------------


def glue(g1: LabelledConstruction, g2: LabelledConstruction) -> LabelledConstruction:
    """Union of two graphs that share exactly their ``x`` and ``y``.

    ``g1`` keeps its labels; the other vertices of ``g2`` follow in order.
    Roles ``a1``/``a2`` come from the ``a`` (or ``a1``) role of each side.
    """
    for c in (g1, g2):
        for r in ("x", "y"):
            c.role(r)
        if not c.graph.has_edge(c.roles["x"], c.roles["y"]):
            raise PreconditionViolated(f"{c.name or 'operand'}: x and y must be adjacent")
    b = _Builder(range(g1.graph.n))
    for u, v in g1.graph.edges():
        b.path(u, v)
    shared = {g2.roles["x"]: g1.roles["x"], g2.roles["y"]: g1.roles["y"]}
    name = {v: shared.get(v, ("g2", v)) for v in range(g2.graph.n)}
    for v in range(g2.graph.n):
        b.vertex(name[v])
    for u, v in g2.graph.edges():
        b.path(name[u], name[v])
    roles = {"x": g1.roles["x"], "y": g1.roles["y"]}
    for i, c in ((1, g1), (2, g2)):
        a = c.roles.get("a", c.roles.get("a1"))
        if a is not None:
            roles[f"a{i}"] = a if i == 1 else name[a]
    return b.build(f"{g1.name}:{g2.name}", roles)


def extend_fragment(f: FragmentSpec) -> FragmentSpec:
    """Add ``x'`` adjacent to ``x``, ``y'`` adjacent to ``y`` and the edge ``x'y'``; new roles ``a, x', y'``."""
    if f.cls < FragmentClass.WEAK:
        raise NotAFragment("only weak, medium or strong fragments can be extended")
    n = f.h.n
    edges = f.h.edges() + [(f.x, n), (f.y, n + 1), (n, n + 1)]
    h = Graph.from_edges(n + 2, edges)
    out = fragment_class(h, f.a, n, n + 1)
    if out.cls < f.cls:
        raise LeafCostError(f"extension lowered the class from {f.cls.name} to {out.cls.name}")
    return out


def as_construction(f: FragmentSpec, name: str = "") -> LabelledConstruction:
    return LabelledConstruction(f.h, {"a": f.a, "x": f.x, "y": f.y}, name)


_PETERSEN_PATHS = [
    (1, 2, 4, 5, 3, 1),
    (1, 6, 9, 8, 7, 2),
    (6, 10, 7),
    (3, 8),
    (5, 10),
    (4, 9),
]


def build_weak_fragments_fig5() -> list[LabelledConstruction]:
    """Node ``i`` has label ``i - 1``."""
    return [
        _from_paths("weak-1", [1, 2, 3], [(3, 1, 2, 3)], {"a": 1, "x": 2, "y": 3}),
        _from_paths("weak-2", [1, 2, 3, 4], [(1, 2), (3, 4, 1, 3), (2, 4)], {"a": 3, "x": 4, "y": 2}),
        _from_paths("weak-3", [1, 2, 3, 4, 5], [(1, 2), (3, 4), (1, 3), (5, 1), (5, 3), (2, 4)], {"a": 5, "x": 4, "y": 2}),
    ]


def build_medium_fragments_fig6() -> list[LabelledConstruction]:
    """Petersen graphs with pendant gadgets; node ``i`` has label ``i - 1``."""
    one = _from_paths("medium-1", range(1, 12), _PETERSEN_PATHS + [(3, 11, 5)], {"a": 11, "x": 4, "y": 2})
    two = _from_paths(
        "medium-2", range(1, 13), _PETERSEN_PATHS + [(3, 11, 5), (3, 12, 5), (11, 12)], {"a": 12, "x": 4, "y": 2}
    )
    three = _from_paths(
        "medium-3", range(1, 14), _PETERSEN_PATHS + [(3, 11, 5), (2, 12, 13, 4)], {"a": 11, "x": 13, "y": 12}
    )
    return [one, two, three]


def build_tfc1_fig7() -> list[LabelledConstruction]:
    """The two glued examples; nodes are sorted and numbered from 0."""
    first_paths = _PETERSEN_PATHS + [(3, 11, 5)]
    second_one = [
        (21, 2, 4, 25, 23, 21),
        (21, 26, 29, 28, 27, 2),
        (26, 30, 27),
        (23, 28),
        (25, 30),
        (4, 29),
        (23, 31, 25),
    ]
    nodes1 = sorted(set(range(1, 12)) | set(range(21, 32)) - {22, 24})
    g1 = _from_paths("tfc1-1", nodes1, first_paths + second_one, {"a1": 11, "a2": 31, "x": 4, "y": 2})
    second_two = [
        (21, 22, 24, 25, 23, 21),
        (21, 26, 29, 28, 27, 22),
        (26, 30, 27),
        (23, 28),
        (25, 30),
        (24, 29),
        (23, 31, 25),
        (2, 22, 24, 4),
    ]
    nodes2 = list(range(1, 12)) + list(range(21, 32))
    g2 = _from_paths(
        "tfc1-2", nodes2, first_paths + second_two, {"a1": 11, "a2": 31, "x": 4, "y": 2, "w": 4, "z": 22}
    )
    return [g1, g2]


# smallest graphs per fault cost -------------------------------------------------------


_SMALLEST_BY_PHI = {
    0: (range(1, 5), [(1, 2, 3, 4, 1), (1, 3), (2, 4)]),
    2: (range(1, 4), [(1, 2, 3, 1)]),
    3: (range(1, 9), [(1, 2, 8, 4, 5, 3, 1, 8), (1, 6, 5), (2, 7, 5)]),
    4: (range(1, 8), [(3, 1, 2, 4, 5, 3), (1, 6, 5), (2, 7, 5)]),
    5: (
        range(1, 12),
        [(3, 1, 2, 4, 5, 3), (1, 6, 5), (2, 7, 5), (5, 8, 10, 11, 9, 5), (10, 1, 11), (10, 2, 11)],
    ),
    6: (range(1, 11), [(1, 3, 4, 2, 6, 5, 1, 7, 8, 2, 10, 9, 1)]),
    7: (
        [1, 2, 3, 5, 6, 7, 8, 9, 11, 12, 13],
        [(3, 1, 2), (5, 3), (1, 6, 5), (2, 7, 5), (5, 8, 12), (5, 9, 12), (5, 11, 13), (12, 13, 2)],
    ),
    8: (
        range(1, 14),
        [
            (3, 1, 2, 4, 5, 3),
            (1, 6, 5),
            (2, 7, 5),
            (5, 8, 12),
            (5, 9, 12),
            (5, 10, 13),
            (5, 11, 13),
            (1, 12, 13, 2),
        ],
    ),
}


def fig11_exemplars() -> dict[int, LabelledConstruction]:
    """A smallest graph for each fault cost 0 and 2..8; nodes sorted and numbered from 0."""
    return {k: _from_paths(f"phi{k}", list(nodes), paths, {}) for k, (nodes, paths) in _SMALLEST_BY_PHI.items()}


# the smallest 2-leaf-guaranteed graph --------------------------------------------------


def _two_leaf_guaranteed(g: Graph) -> bool:
    from .classify import classify_leaf_guaranteed

    if g.n < 3:
        return False
    label = classify_leaf_guaranteed(g)
    return label.is_leaf_guaranteed and label.ml == 2


@lru_cache(maxsize=None)
def find_xi9_candidates(max_order: int = 9) -> tuple[Graph, ...]:
    """All 2-leaf-guaranteed graphs of least order, then least size, up to ``max_order`` vertices."""
    from .oracle.generate import ConnectivityFilter, GraphClassFilter, generate_nonisomorphic

    for n in range(3, max_order + 1):
        top = n * (n - 1) // 2
        for m in range(n, top + 1):
            flt = GraphClassFilter(connectivity=ConnectivityFilter.TWO_CONNECTED, max_edges=m)
            hits = [g for g in generate_nonisomorphic(n, flt) if g.num_edges() == m and _two_leaf_guaranteed(g)]
            if hits:
                return tuple(hits)
    return ()


def find_xi9() -> LabelledConstruction:
    """The least-order, least-size 2-leaf-guaranteed graph (first in canonical order if several)."""
    cands = find_xi9_candidates()
    if not cands:
        raise LeafCostError("no 2-leaf-guaranteed graph found in range")
    return LabelledConstruction(cands[0], {}, "Xi9")


__all__ = [
    "LabelledConstruction",
    "as_construction",
    "build_Gm",
    "build_Hm",
    "build_Xi8",
    "build_bipartite12",
    "build_cubic_fc3",
    "build_medium_fragments_fig6",
    "build_petersen_Gk",
    "build_tfc1_fig7",
    "build_type1_fig4",
    "build_type2_fig4",
    "build_weak_fragments_fig5",
    "embed_1_leaf_guaranteed",
    "embed_k_leaf_guaranteed",
    "extend_fragment",
    "fig11_exemplars",
    "find_xi9",
    "find_xi9_candidates",
    "glue",
    "has_three_leaf_tree",
    "petersen",
    "verify_type1",
    "verify_type2",
]
