from __future__ import annotations

import pytest
from hypothesis import given, settings

from oracles import adjacency, naive_path_cover
from test_graph import graphs
from zfgraph.enumeration import labeled_graphs, prufer_decode, trees, unicyclic
from zfgraph.fixtures import subdivided_star
from zfgraph.forcing import zero_forcing_number
from zfgraph.graph import (
    CapExceededError,
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    path_graph,
    star_graph,
)
from zfgraph.pathcover import (
    PathPartition,
    is_induced_path_partition,
    path_cover_number,
    path_cover_number_tree,
)


def test_partition_validity_examples():
    c4 = cycle_graph(4)
    assert is_induced_path_partition(c4, PathPartition.of([[0, 1, 2], [3]]))
    assert not is_induced_path_partition(c4, PathPartition.of([[0, 1, 2, 3]]))
    assert is_induced_path_partition(complete_graph(4), PathPartition.of([[0, 1], [2, 3]]))


def test_partition_must_cover_disjointly():
    p4 = path_graph(4)
    assert not is_induced_path_partition(p4, PathPartition.of([[0, 1], [2]]))
    assert not is_induced_path_partition(p4, PathPartition.of([[0, 1], [1, 2, 3]]))
    assert not is_induced_path_partition(p4, PathPartition.of([[0, 2], [1, 3]]))


def check(g, result):
    count, witness = result
    assert len(witness) == count
    assert is_induced_path_partition(g, witness)
    return count


def test_known_path_covers():
    assert check(path_graph(9), path_cover_number(path_graph(9))) == 1
    assert check(star_graph(4), path_cover_number(star_graph(4))) == 3
    assert check(empty_graph(3), path_cover_number(empty_graph(3))) == 3


def test_tree_dp_examples():
    double_star = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    assert check(double_star, path_cover_number_tree(double_star)) == 2
    assert check(star_graph(3), path_cover_number_tree(star_graph(3))) == 2
    t = subdivided_star(7)
    assert check(t, path_cover_number_tree(t)) == 4


def test_cover_from_two_long_paths():
    # a 5-vertex path and a 4-vertex path joined by an edge, plus two pendant leaves
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (2, 6), (0, 9), (0, 10)]
    t = from_edge_list(11, edges)
    count = check(t, path_cover_number_tree(t))
    assert count <= t.n - 7
    assert count == path_cover_number(t)[0]


def test_tree_dp_rejects_non_trees():
    with pytest.raises(GraphError):
        path_cover_number_tree(cycle_graph(4))


def test_brute_force_cap():
    with pytest.raises(CapExceededError):
        path_cover_number(path_graph(13))
    assert path_cover_number(path_graph(13), cap=13)[0] == 1


def test_branch_and_bound_matches_oracle_order_5():
    for n in range(1, 6):
        for g in labeled_graphs(n):
            count = check(g, path_cover_number(g))
            assert count == naive_path_cover(adjacency(n, g.edges()))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_branch_and_bound_matches_oracle(g):
    count = check(g, path_cover_number(g))
    assert count == naive_path_cover(adjacency(g.n, g.edges()))
    assert count <= zero_forcing_number(g).z


def test_tree_dp_on_labeled_trees():
    for seq in [(0, 0, 0), (1, 2, 3), (4, 4, 0), (2, 2, 2)]:
        t = prufer_decode(seq, 5)
        assert check(t, path_cover_number_tree(t)) == path_cover_number(t)[0]


def test_tree_and_unicyclic_cover_equals_z():
    for n in range(2, 9):
        for t in trees(n):
            assert path_cover_number_tree(t)[0] == zero_forcing_number(t).z
    for n in range(3, 8):
        for g in unicyclic(n):
            assert path_cover_number(g)[0] == zero_forcing_number(g).z
