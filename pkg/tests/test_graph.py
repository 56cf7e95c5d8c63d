from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_isomorphic
from zfgraph.enumeration import labeled_graphs
from zfgraph.fixtures import fixture, subdivided_star
from zfgraph.graph import (
    CapExceededError,
    Graph,
    Graph6Error,
    Graph6LongFormError,
    GraphError,
    VertexSet,
    canonical_form,
    canonical_labeling,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    emit_edge_list,
    emit_graph6,
    empty_graph,
    from_edge_list,
    graph_metrics,
    induced_subgraph,
    is_connected,
    is_isomorphic_bruteforce,
    parse_edge_list,
    parse_graph6,
    path_graph,
    relabel,
    star_graph,
)


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


# -- construction ----------------------------------------------------------------


def test_edge_list_builds_p4():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g == path_graph(4)
    assert g.degrees() == [1, 2, 2, 1]


def test_triangle_is_k3_and_c3():
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g == complete_graph(3) == cycle_graph(3)


def test_duplicate_edges_collapse():
    g = from_edge_list(5, [(0, 1), (0, 1)])
    assert g.edge_count == 1
    assert g.degrees() == [1, 1, 0, 0, 0]


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)], [(-1, 2)]])
def test_invalid_edges_rejected(bad):
    with pytest.raises(GraphError):
        from_edge_list(3, bad)


def test_order_limits():
    assert empty_graph(64).n == 64
    for n in (0, 65):
        with pytest.raises(GraphError):
            empty_graph(n)


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphError, match="symmetric"):
        Graph(3, (0b010, 0b000, 0b000))


def test_vertex_set_bounds():
    s = VertexSet.of(5, [4, 0, 2])
    assert s.to_list() == [0, 2, 4] and len(s) == 3 and 2 in s and 1 not in s
    with pytest.raises(GraphError):
        VertexSet(0b1000, 3)
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])


# -- complement, metrics, induced subgraphs --------------------------------------


def test_complement_of_k4_is_empty():
    assert complement(complete_graph(4)) == empty_graph(4)


def test_c5_is_self_complementary():
    c5 = cycle_graph(5)
    assert canonical_form(complement(c5)) == canonical_form(c5)
    assert is_isomorphic_bruteforce(c5, complement(c5))


def test_complement_involution_on_p4():
    p4 = path_graph(4)
    assert complement(complement(p4)) == p4


@given(graphs())
def test_complement_involution_and_degree_duality(g):
    gbar = complement(g)
    assert complement(gbar) == g
    for v in range(g.n):
        assert gbar.degree(v) == g.n - 1 - g.degree(v)
    assert min(gbar.degrees()) + max(g.degrees()) == g.n - 1


def test_metrics_c6():
    m = graph_metrics(cycle_graph(6))
    assert (m.min_degree, m.max_degree, m.edge_count, m.is_connected, m.diameter) == (2, 2, 6, True, 3)


def test_metrics_star():
    m = graph_metrics(star_graph(4))
    assert (m.min_degree, m.max_degree, m.edge_count, m.is_connected, m.diameter) == (1, 4, 4, True, 2)


def test_metrics_subdivided_star():
    m = graph_metrics(subdivided_star(7))
    assert m.max_degree == 5 and m.diameter == 3
    assert m.degrees[0] == 5 and m.degrees[1] == 2


def test_disconnected_diameter_is_infinite():
    m = graph_metrics(empty_graph(3))
    assert not m.is_connected
    assert m.as_dict()["diameter"] == "inf"


def test_induced_subgraphs():
    k3, index = induced_subgraph(complete_graph(5), [1, 3, 4])
    assert k3 == complete_graph(3)
    assert index == {1: 0, 3: 1, 4: 2}
    p3, _ = induced_subgraph(cycle_graph(6), VertexSet.of(6, [0, 1, 2]))
    assert p3 == path_graph(3)


def test_leaves_of_subdivided_star_complement_form_clique():
    n = 7
    tbar = complement(subdivided_star(n))
    sub, _ = induced_subgraph(tbar, range(2, n))
    assert sub == complete_graph(n - 2)


def test_connected_with_large_diameter_has_connected_complement():
    for n in range(1, 7):
        for g in labeled_graphs(n, connected=True):
            if diameter(g) >= 3:
                assert is_connected(complement(g))


# -- graph6 ------------------------------------------------------------------------


def test_graph6_known_codes():
    assert emit_graph6(complete_graph(3)) == "Bw"
    assert emit_graph6(empty_graph(2)) == "A?"
    assert emit_graph6(parse_graph6("D?{")) == "D?{"


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize(
    "text, position",
    [("", 0), ("B", 1), ("Bx", 1), ("B\x7f", 1), ("Bww", 2)],
)
def test_graph6_errors_report_position(text, position):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.position == position


def test_graph6_long_form_rejected_distinctly():
    with pytest.raises(Graph6LongFormError):
        parse_graph6("~??~" + "?" * 10)


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_round_trip_order_62():
    rng = random.Random(5)
    g = from_edge_list(62, [(u, v) for u, v in itertools.combinations(range(62), 2) if rng.random() < 0.3])
    assert parse_graph6(emit_graph6(g)) == g
    with pytest.raises(GraphError):
        emit_graph6(empty_graph(63))


def test_graph6_round_trip_all_fixtures():
    from zfgraph.fixtures import FIXTURES

    for name in FIXTURES:
        g = fixture(name)
        assert parse_graph6(emit_graph6(g)) == g


# -- edge lists ----------------------------------------------------------------------


def test_edge_list_round_trip():
    g = cycle_graph(5)
    assert parse_edge_list(emit_edge_list(g)) == g


def test_edge_list_comments_and_errors():
    g = parse_edge_list("# p3\n3 2\n0 1\n\n1 2\n")
    assert g == path_graph(3)
    with pytest.raises(GraphError, match="line 2"):
        parse_edge_list("3 1\n0 5\n")
    with pytest.raises(GraphError, match="line 1"):
        parse_edge_list("x")


# -- canonical form ----------------------------------------------------------------------


def test_canonical_relabelled_p4():
    a = path_graph(4)
    b = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(a) == canonical_form(b)


def test_canonical_separates_claw_and_p4():
    assert canonical_form(star_graph(3)) != canonical_form(path_graph(4))


def test_canonical_labeling_is_permutation():
    g = subdivided_star(8)
    perm = canonical_labeling(g)
    assert sorted(perm) == list(range(8))


@settings(max_examples=200)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_invariant_under_relabel(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_matches_oracle_on_order_5():
    graphs5 = list(labeled_graphs(5))
    rng = random.Random(11)
    for _ in range(300):
        g, h = rng.choice(graphs5), rng.choice(graphs5)
        same = canonical_form(g) == canonical_form(h)
        assert same == naive_isomorphic(5, g.edges(), h.edges())


def test_canonical_cap():
    with pytest.raises(CapExceededError):
        canonical_form(empty_graph(11))
