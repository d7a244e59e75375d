import json

import networkx as nx
import pytest
from hypothesis import given, settings

from graphcat import (BUILTINS, Graph, InvalidInputError, complete_bipartite, dumps_edgelist,
                      dumps_graph, load_graph, loads_edgelist, loads_graph, named_graph,
                      petersen_graph, save_graph, to_dot)
from graphcat.morphisms import are_isomorphic
from strategies import directed_multigraphs, from_nx, simple_graphs


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtin_json_roundtrip_is_bit_exact(name, tmp_path):
    g = named_graph(name)
    path = tmp_path / f"{name}.json"
    save_graph(g, str(path))
    text = path.read_text()
    back = load_graph(str(path))
    assert back == g
    assert dumps_graph(back) == text


def test_graph_json_layout():
    g = Graph(["a", "b"], {"e": ("b", "a")}, directed=True)
    data = json.loads(dumps_graph(g))
    assert data == {"directed": True, "simple": True, "vertices": ["a", "b"],
                    "edges": [{"id": "e", "tail": "b", "head": "a"}]}


def test_tuple_ids_survive_json():
    g = Graph([(0, 1), (1, 0)], [((0, 1), (1, 0))])
    assert loads_graph(dumps_graph(g)) == g


@settings(max_examples=150, deadline=None)
@given(directed_multigraphs())
def test_multigraph_json_roundtrip(g):
    text = dumps_graph(g)
    assert dumps_graph(loads_graph(text)) == text
    assert loads_graph(text) == g


@settings(max_examples=150, deadline=None)
@given(simple_graphs(max_n=7))
def test_edgelist_roundtrip_is_bit_exact(g):
    text = dumps_edgelist(g)
    back = loads_edgelist(text)
    assert dumps_edgelist(back) == text
    assert back.edge_pairs() == g.edge_pairs() and back.vertices == g.vertices


def test_edgelist_comments_and_directed_flag():
    g = loads_edgelist("# directed\n# a comment\n1 2  # trailing\n3\n")
    assert g.directed and g.vertices == (1, 2, 3) and g.edge_pairs() == {(1, 2)}


def test_edgelist_parallel_edges_make_a_multigraph():
    g = loads_edgelist("1 2\n2 1\n")
    assert not g.simple and g.multiplicity(1, 2) == 2


def test_edgelist_bad_line():
    with pytest.raises(InvalidInputError):
        loads_edgelist("1 2 3\n")


def test_malformed_json():
    with pytest.raises(InvalidInputError):
        loads_graph("{not json")
    with pytest.raises(InvalidInputError):
        loads_graph('{"vertices": [1]}')


def test_dot_export_shape():
    dot = to_dot(Graph([1, 2], [(1, 2)], directed=True), name="D", labels={1: "one"})
    assert dot.startswith("digraph D {") and '"1" -> "2";' in dot and 'label="one"' in dot


def test_named_graphs_match_networkx():
    assert are_isomorphic(petersen_graph(), from_nx(nx.petersen_graph()))
    assert are_isomorphic(named_graph("q3"), from_nx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3))))
    assert are_isomorphic(named_graph("k33"), complete_bipartite(3, 3))
    assert named_graph("k3,4").size == 12
    assert named_graph("c7").size == 7 and named_graph("p4").size == 3
    assert named_graph("e3").size == 0


def test_petersen_labelling_matches_networkx_exactly():
    assert petersen_graph().edge_pairs() == {tuple(sorted(e)) for e in nx.petersen_graph().edges()}


def test_unknown_name():
    with pytest.raises(InvalidInputError):
        named_graph("dodecahedron")
