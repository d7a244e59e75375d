"""Transformation graphs: vertices are objects, edges are single elementary moves."""
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import EmptyObjectsError, InvalidInputError, ResourceLimitError
from .graph import Graph, induced_by_edges, sort_key
from .morphisms import canonical_form, iter_subgraph_embeddings
from .named import star_graph

__all__ = [
    "TransformationGraph", "divisibility_graph", "spanning_trees",
    "tree_transformation_graph", "perfect_matchings", "matching_transformation_graph",
    "realizations", "two_switches", "realization_graph", "super_line_graph", "line_graph",
    "DEFAULT_OBJECT_BUDGET",
]

DEFAULT_OBJECT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class TransformationGraph:
    kind: str
    base: object
    objects: tuple
    graph: Graph

    def object_of(self, v):
        if self.kind == "divisor":
            return v
        return self.objects[v]

    def describe(self, v):
        obj = self.object_of(v)
        if self.kind == "realization":
            return " ".join(f"{a}-{b}" for a, b in obj[1]) or "(edgeless)"
        if isinstance(obj, tuple):
            return ",".join(map(str, obj))
        return str(obj)

    def to_dict(self):
        from .io import graph_to_dict, to_jsonable
        return {"kind": self.kind, "base": to_jsonable(self.base),
                "object_index": [to_jsonable(o) for o in self.objects],
                "graph": graph_to_dict(self.graph)}

    def to_dot(self):
        from .io import to_dot
        return to_dot(self.graph, name=self.kind, labels={v: self.describe(v) for v in self.graph.vertices})


def _budget(what, needed, budget):
    if budget is not None and needed > budget:
        raise ResourceLimitError(what, needed, budget)


def divisibility_graph(ints):
    """Directed graph on the integers with ``a -> b`` iff ``a`` divides ``b`` and ``a != b``."""
    ints = sorted(set(ints))
    if any(not isinstance(x, int) or x < 1 for x in ints):
        raise InvalidInputError("divisibility graph needs positive integers")
    pairs = [(a, b) for a in ints for b in ints if a != b and b % a == 0]
    return TransformationGraph("divisor", tuple(ints), tuple(ints), Graph(ints, pairs, directed=True))


def _is_spanning_tree(vertices, endpoints, edge_ids):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_ids:
        a, b = (find(x) for x in endpoints[e])
        if a == b:
            return False
        parent[a] = b
    return True


def spanning_trees(g, budget=DEFAULT_OBJECT_BUDGET):
    """Spanning trees as sorted tuples of edge ids, in lexicographic order."""
    if g.directed:
        raise InvalidInputError("spanning trees are taken in undirected graphs")
    if not g.vertices or not g.is_connected():
        raise InvalidInputError("tree transformation graph needs a connected graph")
    n = len(g.vertices)
    _budget("spanning tree search (edge subsets)", comb(len(g.edges), n - 1), budget)
    return [t for t in combinations(g.edges, n - 1)
            if _is_spanning_tree(g.vertices, g.endpoints, t)]


def tree_transformation_graph(g, budget=DEFAULT_OBJECT_BUDGET):
    """Spanning trees of ``g``, adjacent when their edge sets differ in exactly two edges.

    Two trees are adjacent iff one arises from the other by a single edge exchange
    (drop ``f``, add ``e``).
    """
    trees = spanning_trees(g, budget)
    index = {frozenset(t): i for i, t in enumerate(trees)}
    pairs = set()
    for i, t in enumerate(trees):
        tset = frozenset(t)
        for e in g.edges:
            if e in tset:
                continue
            for f in t:
                j = index.get((tset - {f}) | {e})
                if j is not None and j != i:
                    pairs.add((min(i, j), max(i, j)))
    return TransformationGraph("tree", None, tuple(trees),
                               Graph(range(len(trees)), sorted(pairs)))


def perfect_matchings(g, budget=DEFAULT_OBJECT_BUDGET):
    """Perfect matchings as sorted tuples of edge ids, in lexicographic search order."""
    if g.directed:
        raise InvalidInputError("perfect matchings are taken in undirected graphs")
    incident = {v: [] for v in g.vertices}
    for e in g.edges:
        a, b = g.endpoints[e]
        if a != b:
            incident[a].append((e, b))
            incident[b].append((e, a))
    out = []
    matched = set()
    chosen = []

    def rec():
        free = next((v for v in g.vertices if v not in matched), None)
        if free is None:
            out.append(tuple(sorted(chosen, key=sort_key)))
            if len(out) > budget:
                raise ResourceLimitError("perfect matching enumeration", len(out), budget)
            return
        matched.add(free)
        for e, other in incident[free]:
            if other not in matched:
                matched.add(other)
                chosen.append(e)
                rec()
                chosen.pop()
                matched.discard(other)
        matched.discard(free)

    if len(g.vertices) % 2 == 0:
        rec()
    out.sort(key=sort_key)
    return out


def _edge_set_connected(g, edge_ids):
    sub = induced_by_edges(g, edge_ids)
    return sub.is_connected()


def matching_transformation_graph(g, budget=DEFAULT_OBJECT_BUDGET):
    """Perfect matchings of ``g``, adjacent when their symmetric difference is one cycle.

    The symmetric difference of two perfect matchings is a disjoint union of even
    alternating cycles, so it is a single cycle exactly when its edges form a
    connected subgraph.
    """
    ms = perfect_matchings(g, budget)
    if not ms:
        raise EmptyObjectsError("graph has no perfect matching")
    pairs = []
    for i, j in combinations(range(len(ms)), 2):
        diff = set(ms[i]) ^ set(ms[j])
        if _edge_set_connected(g, diff):
            pairs.append((i, j))
    return TransformationGraph("matching", None, tuple(ms), Graph(range(len(ms)), pairs))


def realizations(d, budget=DEFAULT_OBJECT_BUDGET):
    """Every labelled simple graph on ``0..n-1`` where vertex ``i`` has degree ``d[i]``."""
    d = list(d)
    if any(not isinstance(x, int) or x < 0 for x in d):
        raise InvalidInputError("degree sequence entries must be nonnegative integers")
    n = len(d)
    rem = d[:]
    edges = []
    out = []
    visited = 0

    def rec(i):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise ResourceLimitError("realization search (nodes)", visited, budget)
        if i == n:
            out.append(Graph(range(n), list(edges)))
            return
        later = [j for j in range(i + 1, n) if rem[j] > 0]
        if rem[i] > len(later):
            return
        for nbrs in combinations(later, rem[i]):
            for j in nbrs:
                rem[j] -= 1
                edges.append((i, j))
            saved, rem[i] = rem[i], 0
            rec(i + 1)
            rem[i] = saved
            for j in nbrs:
                rem[j] += 1
                edges.pop()

    rec(0)
    return out


def two_switches(g):
    """Graphs obtained from ``g`` by one 2-switch: ``ab, cd`` out, ``ac, bd`` in.

    ``a, b, c, d`` are pairwise distinct and ``ac``, ``bd`` must be non-edges.
    """
    pairs = [tuple(p) for p in g.edge_pairs()]
    out = []
    for (a, b), (x, y) in combinations(sorted(pairs, key=sort_key), 2):
        for c, d in ((x, y), (y, x)):
            if len({a, b, c, d}) < 4:
                continue
            if g.has_edge(a, c) or g.has_edge(b, d):
                continue
            new = [p for p in pairs if p not in ((a, b), (x, y))] + [(a, c), (b, d)]
            out.append(Graph(g.vertices, new))
    return out


def realization_graph(d, budget=DEFAULT_OBJECT_BUDGET):
    """Isomorphism classes of realizations of ``d``, adjacent when one 2-switch apart.

    Classes are stored by canonical form; a switch landing in the same class is
    not an edge.
    """
    reps = {}
    for g in realizations(d, budget):
        reps.setdefault(canonical_form(g), None)
    if not reps:
        raise InvalidInputError(f"degree sequence {tuple(d)} is not graphic")
    classes = sorted(reps, key=lambda c: (len(c[1]), c[1]))
    index = {c: i for i, c in enumerate(classes)}
    arcs = set()
    for i, (n, edges) in enumerate(classes):
        rep = Graph(range(n), list(edges))
        for h in two_switches(rep):
            j = index[canonical_form(h)]
            if j != i:
                arcs.add((i, j))
    if any((j, i) not in arcs for i, j in arcs):
        raise AssertionError("2-switch relation is not symmetric")
    pairs = sorted({(min(i, j), max(i, j)) for i, j in arcs})
    return TransformationGraph("realization", tuple(d), tuple(classes),
                               Graph(range(len(classes)), pairs))


def _contains_pattern(sub, h, s_only, t_only, cross):
    cand_cache = {}
    for f in iter_subgraph_embeddings(h, sub):
        if not cross:
            return True
        hits_s, hits_t = [], []
        for he in h.edge_pairs():
            a, b = f[he[0]], f[he[1]]
            key = frozenset((a, b))
            if key not in cand_cache:
                cand_cache[key] = {e for e, p in sub.endpoints.items() if set(p) == set(key)}
            cands = cand_cache[key]
            hits_s.append(bool(cands & s_only))
            hits_t.append(bool(cands & t_only))
        if any(hits_s[i] and hits_t[j] for i in range(len(hits_s))
               for j in range(len(hits_t)) if i != j):
            return True
    return False


def super_line_graph(g, r, pattern=None, mode="cross", allow_overlap=True,
                     budget=DEFAULT_OBJECT_BUDGET):
    """Graph on the ``r``-subsets of ``E(g)``.

    ``S`` and ``T`` are adjacent when the subgraph formed by the edges ``S ∪ T``
    contains a copy of ``pattern`` (default K_{1,2}). In ``"cross"`` mode the copy
    must use an edge of ``S - T`` and a different edge of ``T - S``; ``"literal"``
    mode drops that requirement. ``allow_overlap=False`` only pairs disjoint sets.
    """
    if mode not in ("cross", "literal"):
        raise InvalidInputError(f"unknown super line mode {mode!r}")
    if r < 1 or r > len(g.edges):
        raise InvalidInputError(f"subset size r={r} must lie in 1..{len(g.edges)}")
    pattern = star_graph(2) if pattern is None else pattern
    subsets = list(combinations(g.edges, r))
    _budget("super line graph (subset pairs)", comb(len(subsets), 2), budget)
    pairs = []
    for i, j in combinations(range(len(subsets)), 2):
        s, t = set(subsets[i]), set(subsets[j])
        if not allow_overlap and s & t:
            continue
        sub = induced_by_edges(g, s | t)
        if _contains_pattern(sub, pattern, s - t, t - s, mode == "cross"):
            pairs.append((i, j))
    return TransformationGraph("superline", {"r": r, "mode": mode}, tuple(subsets),
                               Graph(range(len(subsets)), pairs))


def line_graph(g):
    """Edges of ``g`` as vertices, adjacent when they share an endpoint."""
    pairs = []
    for e, f in combinations(g.edges, 2):
        if set(g.endpoints[e]) & set(g.endpoints[f]):
            pairs.append((e, f))
    return Graph(g.edges, pairs)
