import networkx as nx
import pytest

from graphcat import (KNOWN_COUNTS, ResourceLimitError, are_isomorphic, canonical_form, catalog,
                      connected_catalog, graphs_of_order)
from strategies import atlas_of_order, from_nx, to_nx


@pytest.mark.parametrize("n", range(0, 7))
def test_counts_match_networkx_atlas(n):
    assert len(graphs_of_order(n)) == len(atlas_of_order(n)) == KNOWN_COUNTS[n]


def test_order_seven_count():
    assert len(graphs_of_order(7)) == 1044


def test_catalog_examples():
    assert len(catalog(1)) == 1
    assert len(catalog(3)) == 7
    assert len(graphs_of_order(4)) == 11


def test_catalog_refuses_order_eight():
    with pytest.raises(ResourceLimitError):
        catalog(8)


def test_representatives_pairwise_non_isomorphic_and_cover_atlas():
    for n in range(1, 6):
        reps = graphs_of_order(n)
        assert len({canonical_form(g) for g in reps}) == len(reps)
        for h in atlas_of_order(n):
            assert sum(are_isomorphic(from_nx(h), g) for g in reps) == 1


def test_connected_catalog_counts():
    # connected graphs of orders 1..6: 1, 1, 2, 6, 21, 112
    want = [1, 1, 2, 6, 21, 112]
    got = [sum(1 for g in connected_catalog(n, n)) for n in range(1, 7)]
    assert got == want
    assert all(nx.is_connected(to_nx(g)) for g in connected_catalog(5))


def test_catalog_is_deterministic():
    assert catalog(5) == catalog(5)
    assert [g.vertices for g in graphs_of_order(4)] == [tuple(range(4))] * 11
