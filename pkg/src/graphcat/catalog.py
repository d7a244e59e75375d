"""Isomorphism-class representatives of small simple graphs."""
from functools import lru_cache
from itertools import combinations

from .errors import InvalidInputError, ResourceLimitError
from .graph import Graph
from .morphisms import canonical_form

__all__ = ["catalog", "graphs_of_order", "connected_catalog", "KNOWN_COUNTS", "MAX_CATALOG_ORDER"]

MAX_CATALOG_ORDER = 7
# number of unlabelled simple graphs of order exactly n
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@lru_cache(maxsize=None)
def _certificates(n):
    if n == 0:
        return ((0, ()),)
    certs = set()
    for n_prev, edges in _certificates(n - 1):
        new = n - 1
        for k in range(n):
            for nbrs in combinations(range(new), k):
                g = Graph(range(n), list(edges) + [(u, new) for u in nbrs])
                certs.add(canonical_form(g))
    return tuple(sorted(certs, key=lambda c: (len(c[1]), c[1])))


def graphs_of_order(n):
    """One representative per class of order exactly ``n``, on vertices ``0..n-1``.

    Built by adding a vertex to every representative of order ``n - 1`` in every
    possible way and keeping one graph per canonical form. Ordered by size, then
    certificate.
    """
    if n < 0:
        raise InvalidInputError("order must be nonnegative")
    if n > MAX_CATALOG_ORDER:
        raise ResourceLimitError("catalog order", n, MAX_CATALOG_ORDER)
    return [Graph(range(m), list(edges)) for m, edges in _certificates(n)]


def catalog(n, min_order=1):
    """Representatives of every order from ``min_order`` to ``n``."""
    if n > MAX_CATALOG_ORDER:
        raise ResourceLimitError("catalog order", n, MAX_CATALOG_ORDER)
    out = []
    for k in range(min_order, n + 1):
        out.extend(graphs_of_order(k))
    return out


def connected_catalog(n, min_order=1):
    return [g for g in catalog(n, min_order) if g.is_connected()]
