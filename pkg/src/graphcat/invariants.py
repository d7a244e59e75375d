"""Graph invariants, parameters, and relabelling-invariance checks."""
import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import InvalidInputError, ResourceLimitError, UnsupportedInputError
from .graph import induced_by_vertices, is_subgraph
from .morphisms import DEFAULT_AUT_BOUND, automorphism_group

__all__ = [
    "degree_sequence", "adjacency_matrix", "adjacency_determinant", "bareiss_determinant",
    "GraphParameters", "graph_parameters", "distances", "diameter", "girth",
    "vertex_connectivity", "INVARIANTS", "InvariantReport", "check_invariance",
    "relabel_all", "is_invariant_subgraph", "DEFAULT_CONNECTIVITY_BOUND",
]

DEFAULT_CONNECTIVITY_BOUND = 16
DEFAULT_DET_BOUND = 64


def degree_sequence(g):
    return tuple(sorted((g.degree(v) for v in g.vertices), reverse=True))


def adjacency_matrix(g):
    """0/1 (or multiplicity) adjacency matrix as nested lists, rows in vertex order."""
    vs = g.vertices
    return [[g.multiplicity(u, v) for v in vs] for u in vs]


def bareiss_determinant(m):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjacency_determinant(g, bound=DEFAULT_DET_BOUND):
    if g.directed or not g.simple:
        raise UnsupportedInputError("adjacency determinant expects a simple undirected graph")
    if len(g.vertices) > bound:
        raise ResourceLimitError("adjacency determinant (vertices)", len(g.vertices), bound)
    return bareiss_determinant(adjacency_matrix(g))


def _undirected_adj(g):
    return {v: g.neighbors(v) | g.predecessors(v) for v in g.vertices}


def distances(g, source):
    adj = _undirected_adj(g)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g):
    """Largest shortest-path distance; ``math.inf`` if disconnected, 0 for K_1."""
    if not g.vertices:
        return 0
    best = 0
    for v in g.vertices:
        d = distances(g, v)
        if len(d) < len(g.vertices):
            return math.inf
        best = max(best, max(d.values()))
    return best


def girth(g):
    """Length of a shortest cycle of the underlying simple graph; ``math.inf`` for forests.

    Loops and parallel edges are ignored (cycles of length 1 and 2 are not counted).
    """
    adj = {v: {u for u in ns if u != v} for v, ns in _undirected_adj(g).items()}
    best = math.inf
    for s in g.vertices:
        dist, parent = {s: 0}, {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def vertex_connectivity(g, bound=DEFAULT_CONNECTIVITY_BOUND):
    """Fewest vertices whose removal disconnects ``g`` or leaves one vertex.

    Exhaustive over vertex subsets in increasing size. K_n gives ``n - 1``; a
    disconnected graph gives 0.
    """
    n = len(g.vertices)
    if n > bound:
        raise ResourceLimitError("vertex connectivity (vertices)", n, bound)
    if n <= 1:
        return 0
    for k in range(n - 1):
        for cut in combinations(g.vertices, k):
            rest = set(g.vertices) - set(cut)
            if len(rest) < 2 or not induced_by_vertices(g, rest).is_connected():
                return k
    return n - 1


@dataclass(frozen=True)
class GraphParameters:
    order: int
    size: int
    diameter: float
    girth: float
    vertex_connectivity: int


def graph_parameters(g, bound=DEFAULT_CONNECTIVITY_BOUND):
    """Order, size, diameter, girth and vertex connectivity.

    Unbounded values (disconnected diameter, acyclic girth) are ``math.inf``.
    """
    return GraphParameters(len(g.vertices), len(g.edges), diameter(g), girth(g),
                           vertex_connectivity(g, bound))


def _aut_order(g):
    return len(automorphism_group(g, bound=DEFAULT_AUT_BOUND))


INVARIANTS = {
    "degree_sequence": degree_sequence,
    "automorphism_order": _aut_order,
    "adjacency_determinant": adjacency_determinant,
    "order": lambda g: len(g.vertices),
    "size": lambda g: len(g.edges),
    "diameter": diameter,
    "girth": girth,
    "vertex_connectivity": vertex_connectivity,
}


@dataclass
class InvariantReport:
    invariant_name: str
    value: object
    witness_checked: int
    passed: bool
    counterexample: dict = field(default=None)
    counterexample_value: object = None

    def to_dict(self):
        from .io import to_jsonable
        return {
            "invariant": self.invariant_name,
            "value": to_jsonable(self.value) if not isinstance(self.value, float) else str(self.value),
            "checked": self.witness_checked,
            "passed": self.passed,
            "counterexample": None if self.counterexample is None
            else [[to_jsonable(k), to_jsonable(v)] for k, v in self.counterexample.items()],
        }


def relabel_all(g):
    """Every permutation of ``g``'s vertex ids, as dicts (n! of them)."""
    vs = g.vertices
    for perm in permutations(vs):
        yield dict(zip(vs, perm))


def check_invariance(invariant, g, trials=20, seed=0, exhaustive=False):
    """Evaluate an invariant on ``g`` and on relabelled copies of it.

    ``invariant`` is a name from :data:`INVARIANTS` or any callable. Relabellings
    permute the vertex ids of ``g`` among themselves: ``trials`` random ones drawn
    with ``seed``, or all ``n!`` when ``exhaustive``. The first relabelling that
    changes the value is reported.
    """
    if callable(invariant):
        fn, name = invariant, getattr(invariant, "__name__", "custom")
    else:
        try:
            fn, name = INVARIANTS[invariant], invariant
        except KeyError:
            raise InvalidInputError(f"unknown invariant {invariant!r}") from None
    value = fn(g)
    if exhaustive:
        maps = relabel_all(g)
    else:
        rng = random.Random(seed)
        vs = list(g.vertices)

        def sample():
            for _ in range(trials):
                perm = vs[:]
                rng.shuffle(perm)
                yield dict(zip(vs, perm))
        maps = sample()
    checked = 0
    for phi in maps:
        checked += 1
        other = fn(g.relabel(phi))
        if other != value:
            return InvariantReport(name, value, checked, False, phi, other)
    return InvariantReport(name, value, checked, True)


def is_invariant_subgraph(g, h, bound=DEFAULT_AUT_BOUND):
    """True iff every automorphism of ``g`` maps ``h`` onto itself."""
    if not is_subgraph(h, g):
        raise InvalidInputError("h is not a subgraph of g")
    hv = set(h.vertices)
    he = {frozenset(p) if not g.directed else p for p in h.edge_pairs()}
    for phi in automorphism_group(g, bound):
        if {phi[v] for v in hv} != hv:
            return False
        image = {(phi[t], phi[x]) for t, x in h.edge_pairs()}
        if not g.directed:
            image = {frozenset(p) for p in image}
        if image != he:
            return False
    return True
