import math

import pytest
from hypothesis import given, settings

from graphs import complete, complete_bipartite, cycle, graphs, star, two_connected_graphs
from leafcost.constructions import embed_k_leaf_guaranteed, petersen
from leafcost.errors import Disconnected
from leafcost.graph import Graph, is_connected
from leafcost.mlst import (
    DegreeProfile,
    ProfileKind,
    _TreeSearch,
    ml_number,
    ml_number_deleted,
    ml_profile,
    ml_profile_deleted,
    ml_profile_with_bound,
)
from leafcost.oracle.brute import (
    brute_ml_profile,
    brute_ml_profile_deleted,
    independence_number,
    naive_hamiltonian_paths,
)
from leafcost.oracle.generate import all_graphs


def test_ml_number_examples():
    assert ml_number(complete(4)) == 1
    assert ml_number(petersen()) == 2
    assert ml_number(star(5)) == 5
    assert ml_number(Graph.from_edges(4, [(0, 1), (2, 3)])) == math.inf
    assert ml_number(complete(1)) == 0
    assert ml_number(complete(2)) == 2


def test_cycle_profile():
    prof = ml_profile(cycle(5))
    assert prof.kind is ProfileKind.HAM_CYCLE and prof.ml == 1
    assert [p.degrees for p in prof.profiles] == [(2,) * 5]


def test_petersen_profile_is_endpoint_pairs():
    p = petersen()
    prof = ml_profile(p)
    assert prof.kind is ProfileKind.HAM_PATH and prof.ml == 2
    assert {tuple(s.leaves) for s in prof.profiles} == naive_hamiltonian_paths(p)


def test_k23_is_traceable():
    prof = ml_profile(complete_bipartite(2, 3))
    assert prof.kind is ProfileKind.HAM_PATH and prof.ml == 2


def test_tree_kind_example():
    h = embed_k_leaf_guaranteed(complete(2)).graph
    prof = ml_profile(h)
    assert prof.kind is ProfileKind.TREE and prof.ml == 3


def test_disconnected_profile_raises():
    with pytest.raises(Disconnected):
        ml_profile(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_bound_examples():
    p = petersen()
    assert ml_profile_with_bound(p, 2) == ml_profile(p)
    g = star(4)
    assert ml_profile_with_bound(g, 4) == ml_profile(g)
    low = ml_profile_with_bound(g, 3)
    assert low.bound_exceeded and not low.profiles
    assert ml_profile_with_bound(p, 1).bound_exceeded


def test_profile_masks_partition():
    p = DegreeProfile.from_degrees((1, 2, 3, 0, 1), deleted=3)
    assert p.leaves == [0, 4] and p.deg2_mask == 0b10 and p.branches == ((2, 3),)
    with pytest.raises(ValueError):
        DegreeProfile.from_degrees((1, 1), deleted=0)


def test_agrees_with_oracle_exhaustive():
    for n in range(1, 8):
        for g in all_graphs(n):
            if not is_connected(g):
                continue
            fast, slow = ml_profile(g), brute_ml_profile(g)
            assert fast.ml == slow.ml == ml_number(g)
            assert fast.profiles == slow.profiles


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=8, max_n=8))
def test_agrees_with_oracle_order_8(g):
    if not is_connected(g):
        assert ml_number(g) == math.inf
        return
    fast, slow = ml_profile(g), brute_ml_profile(g)
    assert fast.ml == slow.ml
    assert fast.profiles == slow.profiles


@settings(max_examples=150, deadline=None)
@given(two_connected_graphs(min_n=3, max_n=8, max_chords=3))
def test_deleted_profiles_agree_with_oracle(g):
    for v in range(g.n):
        fast, slow = ml_profile_deleted(g, v), brute_ml_profile_deleted(g, v)
        assert fast.ml == slow.ml == ml_number_deleted(g, v)
        assert fast.profiles == slow.profiles
        assert all(p.deleted == v and p.degrees[v] == 0 for p in fast.profiles)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_profiles_have_ml_leaves(g):
    if not is_connected(g):
        return
    prof = ml_profile(g)
    for p in prof.profiles:
        expected = 0 if prof.ml == 1 else prof.ml
        assert p.num_leaves == expected
        total = sum(p.degrees)
        assert total == (2 * g.n if prof.ml == 1 else 2 * (g.n - 1))


@settings(max_examples=200, deadline=None)
@given(two_connected_graphs(min_n=3, max_n=9, max_chords=3))
def test_deletion_bounds(g):
    ml = ml_number(g)
    for v in range(g.n):
        assert ml - 1 <= ml_number_deleted(g, v) <= ml + g.max_degree()


def test_independence_bound_exhaustive():
    # ml(K2) = 2 by convention, so start at three vertices
    for n in range(3, 9):
        for g in all_graphs(n):
            if is_connected(g) and ml_number(g) > 1:
                assert ml_number(g) <= independence_number(g)


class _Traced(_TreeSearch):
    """Records that the leaf count passed down a branch never drops."""

    def __init__(self, *args, **kw):
        super().__init__(*args, **kw)
        self.stack: list[int] = []

    def _rec(self, tree, leaves):
        if self.stack:
            assert leaves >= self.stack[-1]
        self.stack.append(leaves)
        super()._rec(tree, leaves)
        self.stack.pop()


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_leaf_count_monotone_along_branches(g):
    if not is_connected(g):
        return
    search = _Traced(g, g.full_mask, g.n)
    search.run()
    assert search.best == brute_ml_profile(g).ml or ml_number(g) <= 2
