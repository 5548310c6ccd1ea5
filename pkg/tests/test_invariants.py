import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from commgraph.errors import CapExceededError, GraphError
from commgraph.graph import SimpleGraph, complete_graph, null_graph, random_graph
from commgraph.invariants import (
    INF,
    InvariantReport,
    chromatic_number,
    clique_number,
    diameter,
    ext_from_json,
    ext_to_json,
    girth,
    greedy_coloring,
    invariant_report,
    is_connected,
    is_proper_coloring,
    k_coloring,
    max_clique,
)

import oracles


def cycle(n):
    return SimpleGraph.from_edges([str(i) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def petersen():
    g = nx.petersen_graph()
    return SimpleGraph.from_edges([str(v) for v in g.nodes], list(g.edges))


@pytest.mark.parametrize("g,d,gi,w,chi", [
    (complete_graph(1), 0, INF, 1, 1),
    (complete_graph(5), 1, 3, 5, 5),
    (null_graph(3), INF, INF, 1, 1),
    (cycle(5), 2, 5, 2, 3),
    (cycle(6), 3, 6, 2, 2),
    (petersen(), 2, 5, 2, 3),
])
def test_known_graphs(g, d, gi, w, chi):
    r = invariant_report(g)
    assert (r.diameter, r.girth, r.clique_number, r.chromatic_number) == (d, gi, w, chi)
    assert r.connected == (d != INF)


def test_empty_graph_diameter_is_an_error():
    with pytest.raises(GraphError):
        diameter(null_graph(0))
    assert is_connected(null_graph(0))


def test_caps():
    with pytest.raises(CapExceededError):
        clique_number(complete_graph(10), cap=9)
    with pytest.raises(CapExceededError, match="--chi-cap"):
        chromatic_number(complete_graph(10), cap=9)


def test_ext_json():
    assert ext_to_json(INF) == "inf" and ext_from_json("inf") == INF
    assert ext_to_json(3) == 3 and ext_from_json(3) == 3
    r = InvariantReport(False, INF, INF, 1, 1)
    assert InvariantReport.from_json(r.to_json()) == r


graphs = st.tuples(st.integers(1, 11), st.floats(0.05, 0.95), st.integers(0, 10**6)).map(
    lambda t: random_graph(*t)
)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_against_oracles(g):
    assert clique_number(g) == oracles.clique_by_subsets(g)
    assert chromatic_number(g) == oracles.chromatic_by_independent_sets(g)
    assert girth(g) == oracles.girth_by_cycles(g)
    assert diameter(g) == oracles.diameter_by_floyd(g)


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(1, 6), st.floats(0, 1), st.integers(0, 10**6)).map(lambda t: random_graph(*t)))
def test_two_chromatic_oracles_agree(g):
    assert oracles.chromatic_by_assignments(g) == oracles.chromatic_by_independent_sets(g)


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_witnesses_are_genuine(g):
    clique = max_clique(g)
    assert all(g.adjacent(a, b) for a in clique for b in clique if a != b)
    colors = greedy_coloring(g)
    assert is_proper_coloring(g, colors)
    chi = chromatic_number(g)
    assert is_proper_coloring(g, k_coloring(g, chi))
    assert chi == 1 or k_coloring(g, chi - 1) is None


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_girth_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(len(g)))
    h.add_edges_from(g.edges())
    assert girth(g) == nx.girth(h)


def test_larger_graphs_stay_fast():
    g = random_graph(40, 0.5, seed=11)
    w = clique_number(g)
    assert 1 <= w <= chromatic_number(g, cap=40) <= max(greedy_coloring(g)) + 1
