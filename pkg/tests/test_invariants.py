import math

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcat import (Graph, InvalidInputError, ResourceLimitError, UnsupportedInputError,
                      adjacency_determinant, bareiss_determinant, catalog, check_invariance,
                      complete_graph, cycle_graph, degree_sequence, diameter, empty_graph, girth,
                      graph_parameters, is_invariant_subgraph, path_graph, petersen_graph,
                      star_graph, vertex_connectivity)
from strategies import simple_graphs, to_nx


@pytest.mark.parametrize("g, seq", [
    (complete_graph(3), (2, 2, 2)), (empty_graph(4), (0, 0, 0, 0)), (star_graph(3), (3, 1, 1, 1)),
])
def test_degree_sequence_examples(g, seq):
    assert degree_sequence(g) == seq


def test_loops_count_twice_in_multigraphs():
    g = Graph([1, 2], [(1, 1), (1, 2)], simple=False)
    assert degree_sequence(g) == (3, 1)


@pytest.mark.parametrize("g, det", [(complete_graph(2), -1), (complete_graph(1), 0), (cycle_graph(4), 0)])
def test_adjacency_determinant_examples(g, det):
    assert adjacency_determinant(g) == det


def test_adjacency_determinant_matches_sympy_on_catalog():
    for g in catalog(6):
        m = sympy.Matrix([[int(g.has_edge(u, v)) for v in g.vertices] for u in g.vertices])
        assert adjacency_determinant(g) == (m.det() if g.vertices else 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_sympy(m):
    assert bareiss_determinant(m) == sympy.Matrix(m).det()


def test_adjacency_determinant_rejects_multigraphs():
    with pytest.raises(UnsupportedInputError):
        adjacency_determinant(Graph([1, 2], [(1, 2), (1, 2)], simple=False))


def test_parameters_examples():
    p = graph_parameters(complete_graph(4))
    assert (p.order, p.size, p.diameter, p.girth, p.vertex_connectivity) == (4, 6, 1, 3, 3)
    p = graph_parameters(cycle_graph(5))
    assert (p.diameter, p.girth, p.vertex_connectivity) == (2, 5, 2)
    p = graph_parameters(path_graph(4))
    assert p.girth == math.inf and p.vertex_connectivity == 1


def test_parameters_match_networkx_on_catalog():
    for g in catalog(6):
        h = to_nx(g)
        assert vertex_connectivity(g) == nx.node_connectivity(h)
        assert girth(g) == nx.girth(h)
        want = nx.diameter(h) if nx.is_connected(h) else math.inf
        assert diameter(g) == want


def test_petersen_parameters():
    p = graph_parameters(petersen_graph())
    assert (p.diameter, p.girth, p.vertex_connectivity) == (2, 5, 3)


def test_connectivity_bound():
    with pytest.raises(ResourceLimitError):
        vertex_connectivity(complete_graph(5), bound=4)


def test_invariance_examples():
    assert check_invariance("degree_sequence", petersen_graph(), trials=20).passed
    rep = check_invariance("adjacency_determinant", cycle_graph(4), trials=20)
    assert rep.passed and rep.value == 0 and rep.witness_checked == 20


def test_non_invariant_probe_is_caught():
    def least_id_degree(g):
        return g.degree(g.vertices[0])

    g = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    rep = check_invariance(least_id_degree, g, exhaustive=True)
    assert not rep.passed
    phi = rep.counterexample
    assert least_id_degree(g.relabel(phi)) == rep.counterexample_value != rep.value


def test_unknown_invariant():
    with pytest.raises(InvalidInputError):
        check_invariance("chromatic_number", complete_graph(2))


def test_all_invariants_exhaustive_up_to_four():
    from graphcat import INVARIANTS
    for g in catalog(4):
        for name in INVARIANTS:
            assert check_invariance(name, g, exhaustive=True).passed, (name, g)


@settings(max_examples=60, deadline=None)
@given(simple_graphs(min_n=5, max_n=5), st.integers(0, 10 ** 6))
def test_all_invariants_sampled_at_five(g, seed):
    from graphcat import INVARIANTS
    for name in INVARIANTS:
        assert check_invariance(name, g, trials=5, seed=seed).passed


def test_invariance_report_is_seed_deterministic():
    a = check_invariance("degree_sequence", petersen_graph(), trials=7, seed=3).to_dict()
    b = check_invariance("degree_sequence", petersen_graph(), trials=7, seed=3).to_dict()
    assert a == b


def test_invariant_subgraph_examples():
    g = path_graph(5)
    assert is_invariant_subgraph(g, g)
    center = Graph([1, 2, 3], [(1, 2), (2, 3)])
    assert is_invariant_subgraph(g, center)
    k3 = complete_graph(3)
    assert not is_invariant_subgraph(k3, Graph([0, 1], [(0, 1)]))
    with pytest.raises(InvalidInputError):
        is_invariant_subgraph(k3, Graph([0, 5], [(0, 5)]))
