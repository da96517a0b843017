import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import c4_brute, halin_graphs
from halinturan.constructions import base_tree, random_c4free_halin, wheel
from halinturan.core import bounded_faces, build_halin, dart_faces
from halinturan.cycles import (
    CycleQuery,
    EdgeNotInGraph,
    find_cycle,
    girth,
    has_c4,
    has_cycle_of_length,
    is_cycle,
    shortest_cycle_through_edge,
)
from halinturan.enumeration import enumerate_halin


def test_k4_witness():
    assert find_cycle(wheel(3), 4) == (0, 1, 2, 3)


def test_base_trees_c4_free():
    for name in ("t16", "t17", "t18"):
        g = build_halin(base_tree(name).tree)
        assert find_cycle(g, 4) is None
        assert girth(g) == 3


def test_bad_query():
    with pytest.raises(ValueError):
        CycleQuery(2)
    with pytest.raises(EdgeNotInGraph):
        shortest_cycle_through_edge(wheel(3), (1, 1))


@pytest.mark.parametrize("n", range(4, 13))
def test_c4_matches_subset_brute_force(n):
    for g in enumerate_halin(n):
        assert has_c4(g.sorted_neighbors) == c4_brute(g.sorted_neighbors)


def _nx(g):
    return nx.Graph([tuple(e) for e in g.edges])


@given(halin_graphs, st.integers(3, 9))
def test_cycle_lengths_match_networkx(g, k):
    lengths = {len(c) for c in nx.simple_cycles(_nx(g), length_bound=k)}
    assert has_cycle_of_length(g.sorted_neighbors, k) == (k in lengths)
    w = find_cycle(g, k)
    assert (w is not None) == (k in lengths)
    if w is not None:
        assert len(w) == k and is_cycle(g, w)


@given(halin_graphs)
def test_shortest_cycle_through_edge_matches_bfs(g):
    G = _nx(g)
    for e in sorted(tuple(sorted(x)) for x in g.edges):
        length, path = shortest_cycle_through_edge(g, e)
        G.remove_edge(*e)
        assert length == nx.shortest_path_length(G, *e) + 1
        G.add_edge(*e)
        assert is_cycle(g, path) and len(path) == length


def _face_bounds_hold(g):
    for f in bounded_faces(g):
        if shortest_cycle_through_edge(g, f.cycle_edge)[0] < f.size:
            return False
    df = dart_faces(g)
    for a, b in g.tree.edges:
        if shortest_cycle_through_edge(g, (a, b))[0] < min(df[a, b].size, df[b, a].size):
            return False
    return True


@given(halin_graphs)
def test_cycle_through_edge_bounded_by_faces(g):
    assert _face_bounds_hold(g)


def test_face_bounds_exhaustive_and_random():
    for n in range(4, 13):
        assert all(_face_bounds_hold(g) for g in enumerate_halin(n))
    for seed in range(1000):
        assert _face_bounds_hold(random_c4free_halin(16 + seed % 45, seed))


def test_same_branching_leaves_edge():
    # two leaves of one branching vertex close a triangle
    g = build_halin(base_tree("t16").tree)
    f = next(f for f in bounded_faces(g) if f.size == 3)
    assert shortest_cycle_through_edge(g, f.cycle_edge)[0] == 3


@given(halin_graphs)
def test_girth_is_three(g):
    # every Halin graph has a triangle at the end of a longest path
    assert girth(g) == 3


def test_four_cycle_witness_is_lexicographically_least():
    g = wheel(6)
    cands = [c for c in itertools.permutations(range(7), 4) if is_cycle(g, c)]
    assert find_cycle(g, 4) == min(cands)
