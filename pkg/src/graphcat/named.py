"""Built-in named graphs and small families."""
import re
from itertools import combinations

from .errors import InvalidInputError
from .graph import Graph, complete_graph

__all__ = [
    "cycle_graph", "path_graph", "empty_graph", "complete_bipartite", "star_graph",
    "petersen_graph", "hypercube_graph", "BUILTINS", "named_graph",
]


def cycle_graph(n):
    if n < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise InvalidInputError("a path needs at least one vertex")
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def empty_graph(n):
    return Graph(range(n))


def complete_bipartite(m, n):
    if m < 1 or n < 1:
        raise InvalidInputError("both sides of K_{m,n} must be nonempty")
    return Graph(range(m + n), [(i, m + j) for i in range(m) for j in range(n)])


def star_graph(k):
    return complete_bipartite(1, k)


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def hypercube_graph(d):
    n = 1 << d
    return Graph(range(n), [(u, v) for u, v in combinations(range(n), 2)
                            if bin(u ^ v).count("1") == 1])


BUILTINS = {
    "petersen": petersen_graph,
    "k5": lambda: complete_graph(5),
    "k33": lambda: complete_bipartite(3, 3),
    "q3": lambda: hypercube_graph(3),
}

_FAMILIES = [
    (re.compile(r"c(\d+)"), lambda m: cycle_graph(int(m[1]))),
    (re.compile(r"p(\d+)"), lambda m: path_graph(int(m[1]))),
    (re.compile(r"k(\d+)"), lambda m: complete_graph(int(m[1]))),
    (re.compile(r"e(\d+)"), lambda m: empty_graph(int(m[1]))),
    (re.compile(r"k(\d+),(\d+)"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"q(\d+)"), lambda m: hypercube_graph(int(m[1]))),
]


def named_graph(name):
    """Look up ``petersen``, ``k5``, ``k33``, ``q3`` or a family member.

    Families: ``cN`` cycle, ``pN`` path on N vertices, ``kN`` complete, ``eN``
    edgeless, ``kM,N`` complete bipartite, ``qD`` hypercube.
    """
    key = name.strip().lower()
    if key in BUILTINS:
        return BUILTINS[key]()
    for pattern, build in _FAMILIES:
        m = pattern.fullmatch(key)
        if m:
            return build(m)
    raise InvalidInputError(f"unknown graph name {name!r}")
