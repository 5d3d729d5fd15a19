import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings

from graphs import complete, complete_bipartite, cycle, graphs, path, to_nx, two_connected_graphs
from leafcost.constructions import build_bipartite12, build_tfc1_fig7, petersen
from leafcost.errors import IndexOutOfRange, MalformedGraph6, NotASeparator
from leafcost.graph import (
    Connectivity,
    Graph,
    add_edge,
    components,
    connectivity_class,
    delete_vertex,
    disjoint_union,
    emit_graph6,
    fragments_of,
    girth,
    identify,
    induced_subgraph,
    is_bipartite,
    is_connected,
    parse_graph6,
    permute,
    two_separators,
)


def _brute_class(g: Graph) -> Connectivity:
    def connected_without(drop):
        rest = [v for v in range(g.n) if v not in drop]
        h, _ = induced_subgraph(g, rest)
        return h.n > 0 and is_connected(h)

    if g.n <= 1 or not connected_without(()):
        return Connectivity.DISCONNECTED
    k = Connectivity.CONNECTED
    for size, cls in ((1, Connectivity.TWO_CONNECTED), (2, Connectivity.THREE_CONNECTED)):
        if g.n <= size + 1:
            break
        if all(connected_without(s) for s in itertools.combinations(range(g.n), size)):
            k = cls
        else:
            break
    return k


# graph6 ----------------------------------------------------------------------


def test_k4_graph6():
    assert parse_graph6("C~") == complete(4)
    assert emit_graph6(complete(4)) == "C~"


def test_single_vertex_graph6():
    g = parse_graph6("@")
    assert g.n == 1 and g.num_edges() == 0


def test_empty_graph6_body_is_zero():
    s = emit_graph6(Graph.empty(5))
    assert s[0] == chr(63 + 5)
    assert set(s[1:]) == {"?"}


@pytest.mark.parametrize("bad", ["", "C~~", "C\x1f", "B" + chr(127)])
def test_malformed_graph6(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_matches_networkx(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert emit_graph6(g) == ref
    assert parse_graph6(ref) == g


def test_graph6_large_orders_round_trip():
    for n in (62, 63, 64):
        g = Graph.from_edges(n, [(i, (i * 7 + 3) % n) for i in range(n) if i != (i * 7 + 3) % n])
        s = emit_graph6(g)
        assert parse_graph6(s) == g
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


# connectivity ------------------------------------------------------------------


def test_connectivity_examples():
    assert connectivity_class(complete(4)) is Connectivity.THREE_CONNECTED
    assert connectivity_class(path(3)) is Connectivity.CONNECTED
    assert connectivity_class(complete_bipartite(2, 3)) is Connectivity.TWO_CONNECTED
    assert connectivity_class(complete(3)) is Connectivity.TWO_CONNECTED
    assert connectivity_class(Graph.empty(2)) is Connectivity.DISCONNECTED


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_connectivity_matches_brute_force(g):
    assert connectivity_class(g) == _brute_class(g)


def test_two_separators_examples():
    assert two_separators(complete(4)) == []
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert two_separators(diamond) == [(1, 2)]
    second = build_tfc1_fig7()[1]
    w, z = second.roles["w"], second.roles["z"]
    assert (min(w, z), max(w, z)) in two_separators(second.graph)
    assert not second.graph.has_edge(w, z)


def test_fragments_at_certificate_neighbourhood():
    first = build_tfc1_fig7()[0]
    a1 = first.roles["a1"]
    sep = first.graph.neighbors(a1)
    frags = sorted(fragments_of(first.graph, sep), key=lambda f: f[0].n)
    assert [f.n for f, _ in frags] == [3, first.graph.n - 1]
    assert frags[0][0] == complete(3)


def test_fragments_of_rejects_non_separator():
    with pytest.raises(NotASeparator):
        fragments_of(complete(4), (0, 1))


@settings(max_examples=150, deadline=None)
@given(two_connected_graphs(max_n=9, max_chords=2))
def test_fragments_reassemble(g):
    for x, y in two_separators(g):
        frags = fragments_of(g, (x, y))
        covered = [set(m) for _, m in frags]
        assert set().union(*covered) == set(range(g.n))
        for a, b in itertools.combinations(covered, 2):
            assert a & b == {x, y}
        edges = set()
        for h, m in frags:
            edges |= {(min(m[u], m[v]), max(m[u], m[v])) for u, v in h.edges()}
        assert edges == set(g.edges())


# girth, bipartite ------------------------------------------------------------------


def test_girth_examples():
    assert girth(complete(4)) == 3
    assert girth(petersen()) == 5
    assert girth(build_bipartite12().graph) == 6
    assert girth(path(5)) == math.inf


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_girth_matches_networkx(g):
    assert girth(g) == nx.girth(to_nx(g))


def test_bipartite_examples():
    assert is_bipartite(build_bipartite12().graph)
    assert not is_bipartite(complete(3))
    assert is_bipartite(cycle(6))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_bipartite_matches_networkx(g):
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


# derived graphs ---------------------------------------------------------------------


def test_delete_vertex_of_k4():
    for v in range(4):
        h, m = delete_vertex(complete(4), v)
        assert h == complete(3)
        assert m[v] is None
        assert parse_graph6(emit_graph6(h)) == h


def test_delete_vertex_out_of_range():
    with pytest.raises(IndexOutOfRange):
        delete_vertex(complete(3), 3)
    with pytest.raises(IndexOutOfRange):
        add_edge(complete(3), 0, 5)


def test_identify_two_edge_ends():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    h, m = identify(g, [1, 2])
    assert h.n == 3 and sorted(h.degrees()) == [1, 1, 2]
    assert m[1] == m[2]


def test_add_edge_idempotent():
    g = add_edge(path(3), 0, 2)
    assert g == complete(3)
    assert add_edge(g, 0, 2) == g


def test_disjoint_union_offsets():
    g, offs = disjoint_union(complete(3), path(2))
    assert offs == [0, 3]
    assert len(components(g)) == 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_permute_preserves_structure(g):
    perm = list(reversed(range(g.n)))
    h = permute(g, perm)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    assert sorted(h.degrees()) == sorted(g.degrees())
