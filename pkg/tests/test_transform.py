from itertools import combinations

import networkx as nx
import pytest

from graphcat import (EmptyObjectsError, Graph, InvalidInputError, ResourceLimitError,
                      are_isomorphic, canonical_form, catalog, complete_graph, connected_catalog,
                      cycle_graph, divisibility_graph, empty_graph, hypercube_graph, line_graph,
                      matching_transformation_graph, path_graph, perfect_matchings,
                      realization_graph, realizations, spanning_trees, star_graph,
                      super_line_graph, tree_transformation_graph, two_switches,
                      vertex_connectivity)
from strategies import from_nx, to_nx


# -- divisibility -----------------------------------------------------------------------

def test_divisibility_examples():
    assert divisibility_graph([2, 3, 4, 6]).graph.edge_pairs() == {(2, 4), (2, 6), (3, 6)}
    assert divisibility_graph([2, 3, 5, 7]).graph.size == 0
    assert divisibility_graph([1, 2]).graph.edge_pairs() == {(1, 2)}
    with pytest.raises(InvalidInputError):
        divisibility_graph([0, 2])


# -- spanning trees ---------------------------------------------------------------------

def test_tree_graph_examples():
    assert are_isomorphic(tree_transformation_graph(cycle_graph(3)).graph, complete_graph(3))
    assert tree_transformation_graph(path_graph(5)).graph.order == 1
    assert are_isomorphic(tree_transformation_graph(cycle_graph(4)).graph, complete_graph(4))


def test_spanning_trees_match_networkx():
    for g in connected_catalog(6):
        ours = {frozenset(g.endpoints[e] for e in t) for t in spanning_trees(g)}
        theirs = {frozenset(tuple(sorted(e)) for e in t.edges())
                  for t in nx.SpanningTreeIterator(to_nx(g))}
        assert ours == theirs


def test_tree_adjacency_is_symmetric_difference_two():
    g = complete_graph(4)
    tg = tree_transformation_graph(g)
    for i, j in combinations(range(len(tg.objects)), 2):
        diff = set(tg.objects[i]) ^ set(tg.objects[j])
        assert tg.graph.has_edge(i, j) == (len(diff) == 2)


def test_tree_graph_errors():
    with pytest.raises(InvalidInputError):
        tree_transformation_graph(empty_graph(2))
    with pytest.raises(ResourceLimitError):
        tree_transformation_graph(complete_graph(7), budget=100)


def test_tree_graph_json_embeds_edge_lists():
    d = tree_transformation_graph(cycle_graph(3)).to_dict()
    assert d["object_index"] == [[0, 1], [0, 2], [1, 2]]
    assert d["graph"]["vertices"] == [0, 1, 2]


# -- perfect matchings ------------------------------------------------------------------

def brute_matchings(g):
    n = len(g.vertices)
    return {frozenset(m) for m in combinations(g.edges, n // 2)
            if len({v for e in m for v in g.endpoints[e]}) == n}


def test_matchings_match_brute_force():
    for g in catalog(6):
        assert set(map(frozenset, perfect_matchings(g))) == (brute_matchings(g) if len(g.vertices) % 2 == 0 else set())


def test_matching_graph_examples():
    assert are_isomorphic(matching_transformation_graph(cycle_graph(6)).graph, complete_graph(2))
    assert are_isomorphic(matching_transformation_graph(complete_graph(4)).graph, complete_graph(3))
    assert matching_transformation_graph(complete_graph(2)).graph.order == 1
    with pytest.raises(EmptyObjectsError):
        matching_transformation_graph(path_graph(3))


def test_symmetric_difference_is_even_alternating_cycles():
    for g in catalog(6):
        ms = perfect_matchings(g)
        for a, b in combinations(ms, 2):
            diff = set(a) ^ set(b)
            sub = nx.Graph([g.endpoints[e] for e in diff])
            assert all(d == 2 for _, d in sub.degree())
            assert all(len(c) % 2 == 0 for c in nx.connected_components(sub))


def test_cube_matching_graph():
    tg = matching_transformation_graph(hypercube_graph(3))
    assert len(tg.objects) == 9
    assert vertex_connectivity(tg.graph) >= 2


# -- realizations -----------------------------------------------------------------------

def test_realization_examples():
    assert realization_graph([1, 1, 1, 1]).graph.order == 1
    tg = realization_graph([2, 2, 2, 2, 2, 2])
    assert are_isomorphic(tg.graph, complete_graph(2))
    assert realization_graph([0, 0, 0]).graph.order == 1
    with pytest.raises(InvalidInputError):
        realization_graph([3, 1])
    with pytest.raises(InvalidInputError):
        realization_graph([1, 1, 1])


def test_realization_classes_match_atlas():
    # classes of degree sequences read off the networkx atlas
    atlas = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6]
    by_seq = {}
    for h in atlas:
        seq = tuple(sorted((d for _, d in h.degree()), reverse=True))
        by_seq[seq] = by_seq.get(seq, 0) + 1
    for seq, count in list(by_seq.items())[::7]:
        assert len(realization_graph(list(seq)).objects) == count


def test_labelled_realizations_have_the_degrees():
    for g in realizations([3, 2, 2, 2, 1]):
        assert [g.degree(v) for v in g.vertices] == [3, 2, 2, 2, 1]


def test_two_switch_preserves_degrees_and_is_reversible():
    for g in catalog(6):
        for h in two_switches(g):
            assert [g.degree(v) for v in g.vertices] == [h.degree(v) for v in h.vertices]
            assert any(s.edge_pairs() == g.edge_pairs() for s in two_switches(h))


def test_realization_graph_objects_are_distinct_classes():
    tg = realization_graph([2, 2, 2, 1, 1, 1, 1])
    assert len(set(tg.objects)) == len(tg.objects)
    for n, edges in tg.objects:
        assert canonical_form(Graph(range(n), list(edges))) == (n, edges)


# -- super line and line graphs ---------------------------------------------------------

def test_super_line_examples():
    tg = super_line_graph(complete_graph(3), 1)
    assert are_isomorphic(tg.graph, complete_graph(3))
    two_edges = Graph(range(4), [(0, 1), (2, 3)])
    assert super_line_graph(two_edges, 1).graph.size == 0
    with pytest.raises(InvalidInputError):
        super_line_graph(complete_graph(3), 4)


def test_line_graph_examples():
    assert are_isomorphic(line_graph(path_graph(3)), complete_graph(2))
    assert are_isomorphic(line_graph(star_graph(3)), complete_graph(3))
    for n in range(3, 8):
        assert are_isomorphic(line_graph(cycle_graph(n)), cycle_graph(n))


def test_line_graph_matches_networkx():
    for g in catalog(6):
        if g.size:
            assert nx.is_isomorphic(to_nx(line_graph(g).relabel({e: i for i, e in enumerate(g.edges)})),
                                    nx.line_graph(to_nx(g)))


def test_super_line_literal_mode_adds_internal_copies():
    # S = {e0, e1} already contains a K_{1,2}; literal mode joins it to every other pair
    g = path_graph(4)
    cross = super_line_graph(g, 2, mode="cross").graph
    literal = super_line_graph(g, 2, mode="literal").graph
    assert cross.edge_pairs() <= literal.edge_pairs()
    assert literal.size == 3 and cross.size == 2


def test_super_line_disjoint_only():
    g = cycle_graph(4)
    overlap = super_line_graph(g, 2).graph
    disjoint = super_line_graph(g, 2, allow_overlap=False).graph
    assert disjoint.edge_pairs() < overlap.edge_pairs()


def test_super_line_budget():
    with pytest.raises(ResourceLimitError):
        super_line_graph(complete_graph(6), 3, budget=1000)


def test_transformation_dot_has_labels():
    dot = tree_transformation_graph(cycle_graph(3)).to_dot()
    assert 'label="0,1"' in dot and dot.startswith("graph tree {")


def test_from_nx_helper_roundtrip():
    assert from_nx(to_nx(cycle_graph(5))).edge_pairs() == cycle_graph(5).edge_pairs()
