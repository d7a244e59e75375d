"""Finite graphs as edge-to-endpoint-pair maps, plus the basic constructions on them.

A :class:`Graph` is a total map from edge ids to ordered ``(tail, head)`` pairs over a
finite vertex set. Undirected graphs store each pair with the smaller id first, so a
single representation covers both the ordered-pair and the two-subset pictures.
Parallel edges are allowed whenever ``simple=False``.

Vertex and edge ids are opaque: ints, strings, or (nested) tuples of those. They are
never renumbered.
"""
from collections import Counter, deque
from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError, UnsupportedInputError

__all__ = [
    "Graph", "IncidenceMatrix", "sort_key", "symmetric_closure", "diagonal",
    "complete_graph", "underlying_undirected", "incidence_matrix",
    "induced_by_edges", "induced_by_vertices", "is_subgraph", "is_oriented",
]


def sort_key(x):
    """Total order over mixed id types: ints < strings < tuples < frozensets."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(sort_key(y) for y in x)))
    raise InvalidInputError(f"unsupported id type: {type(x).__name__}")


def _sorted(items):
    return sorted(items, key=sort_key)


class Graph:
    """Immutable finite graph.

    Parameters
    ----------
    vertices : iterable of ids
    edges : mapping ``edge_id -> (tail, head)``, or an iterable of ``(tail, head)``
        pairs which are then numbered ``0, 1, ...`` in the given order.
    directed : bool
    simple : bool
        If true, loops and parallel edges are rejected (parallel meaning the same
        unordered pair when ``directed`` is false, the same ordered pair otherwise).
    """

    __slots__ = ("vertices", "edges", "endpoints", "directed", "simple",
                 "_vset", "_mult", "_out", "_in", "_hash")

    def __init__(self, vertices, edges=(), directed=False, simple=True):
        vset = frozenset(vertices)
        if not isinstance(edges, Mapping):
            edges = {i: tuple(pair) for i, pair in enumerate(edges)}
        endpoints = {}
        for eid, pair in edges.items():
            if len(pair) != 2:
                raise InvalidInputError(f"edge {eid!r} must have exactly two endpoints")
            t, h = pair
            if t not in vset or h not in vset:
                raise InvalidInputError(f"edge {eid!r} references a vertex outside the vertex set")
            if not directed and sort_key(h) < sort_key(t):
                t, h = h, t
            endpoints[eid] = (t, h)

        mult = Counter()
        for t, h in endpoints.values():
            mult[t, h] += 1
            if not directed and t != h:
                mult[h, t] += 1
        if simple:
            for eid, (t, h) in endpoints.items():
                if t == h:
                    raise InvalidInputError(f"simple graph has a loop at edge {eid!r}")
                if mult[t, h] > 1:
                    raise InvalidInputError(f"simple graph has parallel edges on ({t!r}, {h!r})")

        out = {v: set() for v in vset}
        inc = {v: set() for v in vset}
        for t, h in mult:
            out[t].add(h)
            inc[h].add(t)

        self.vertices = tuple(_sorted(vset))
        self.edges = tuple(_sorted(endpoints))
        self.endpoints = {e: endpoints[e] for e in self.edges}
        self.directed = bool(directed)
        self.simple = bool(simple)
        self._vset = vset
        self._mult = mult
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inc.items()}
        self._hash = None

    # -- basic queries -----------------------------------------------------------------

    @property
    def order(self):
        return len(self.vertices)

    @property
    def size(self):
        return len(self.edges)

    def __contains__(self, v):
        return v in self._vset

    def has_edge(self, u, v):
        return self._mult.get((u, v), 0) > 0

    def multiplicity(self, u, v):
        """Number of edges from ``u`` to ``v`` (either orientation if undirected)."""
        return self._mult.get((u, v), 0)

    def neighbors(self, v):
        """Out-neighbours; for undirected graphs simply the neighbours."""
        return self._out[v]

    def predecessors(self, v):
        return self._in[v]

    def degree(self, v):
        """Number of edge ends at ``v``; a loop counts twice."""
        return sum((t == v) + (h == v) for t, h in self.endpoints.values())

    def edge_pairs(self):
        """Set of stored endpoint pairs (canonical orientation when undirected)."""
        return set(self.endpoints.values())

    def has_loops(self):
        return any(t == h for t, h in self.endpoints.values())

    def is_connected(self):
        """Weak connectivity. The empty graph counts as connected."""
        return len(self.components()) <= 1

    def components(self):
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._out[x] | self._in[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(_sorted(comp)))
        return comps

    def relabel(self, mapping):
        """Apply an injective vertex renaming; edge ids are kept."""
        images = [mapping[v] for v in self.vertices]
        if len(set(images)) != len(images):
            raise InvalidInputError("relabelling must be injective")
        return Graph(images,
                     {e: (mapping[t], mapping[h]) for e, (t, h) in self.endpoints.items()},
                     directed=self.directed, simple=self.simple)

    def with_flags(self, directed=None, simple=None):
        return Graph(self.vertices, self.endpoints,
                     directed=self.directed if directed is None else directed,
                     simple=self.simple if simple is None else simple)

    # -- value semantics ---------------------------------------------------------------

    def _key(self):
        return (self.vertices, tuple(self.endpoints.items()), self.directed, self.simple)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        kind = "DiGraph" if self.directed else "Graph"
        return f"<{kind} order={self.order} size={self.size}{'' if self.simple else ' multi'}>"


@dataclass(frozen=True)
class IncidenceMatrix:
    rows: tuple
    cols: tuple
    entries: dict

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def to_list(self):
        return [[self[v, e] for e in self.cols] for v in self.rows]


def symmetric_closure(rel, vertices=None):
    rel = set(rel)
    if vertices is not None:
        vertices = set(vertices)
        for a, b in rel:
            if a not in vertices or b not in vertices:
                raise InvalidInputError(f"pair ({a!r}, {b!r}) references an unknown vertex")
    return rel | {(b, a) for a, b in rel}


def diagonal(vertices):
    return {(a, a) for a in vertices}


def complete_graph(n):
    """K_n on vertices ``0..n-1``; edge ids number the pairs lexicographically."""
    if n < 1:
        raise InvalidInputError("complete graph needs at least one vertex")
    return Graph(range(n), list(combinations(range(n), 2)))


def underlying_undirected(g, simple=None):
    """Forget edge directions.

    In multigraph mode (``simple=False``) every edge survives, loops included. In
    simple mode, edges with the same unordered pair are merged into the one with the
    smallest id, and a loop is refused with :class:`UnsupportedInputError`. The
    default follows ``g.simple``.
    """
    if simple is None:
        simple = g.simple
    if not g.directed and (g.simple or not simple):
        return g if g.simple == simple else g.with_flags(simple=simple)
    if not simple:
        return Graph(g.vertices, g.endpoints, directed=False, simple=False)
    kept = {}
    for e in g.edges:
        t, h = g.endpoints[e]
        if t == h:
            raise UnsupportedInputError(f"simple underlying graph undefined for loop edge {e!r}")
        pair = frozenset((t, h))
        if pair not in kept:
            kept[pair] = (e, (t, h))
    return Graph(g.vertices, dict(kept.values()), directed=False, simple=True)


def incidence_matrix(g):
    """Signed vertex-edge incidence: -1 at the tail, +1 at the head.

    Undirected graphs use their stored orientation (smaller id is the tail).
    """
    entries = {}
    for e, (t, h) in g.endpoints.items():
        if t == h:
            raise UnsupportedInputError(f"incidence matrix undefined for loop edge {e!r}")
        entries[t, e] = -1
        entries[h, e] = 1
    return IncidenceMatrix(g.vertices, g.edges, entries)


def induced_by_edges(g, edge_ids, keep_all_vertices=False):
    """Subgraph on the edge set ``edge_ids``.

    By default only the endpoints of the chosen edges are kept as vertices.
    """
    edge_ids = set(edge_ids)
    unknown = edge_ids - set(g.endpoints)
    if unknown:
        raise InvalidInputError(f"unknown edge ids: {_sorted(unknown)!r}")
    endpoints = {e: g.endpoints[e] for e in edge_ids}
    if keep_all_vertices:
        vertices = g.vertices
    else:
        vertices = {x for pair in endpoints.values() for x in pair}
    return Graph(vertices, endpoints, directed=g.directed, simple=g.simple)


def induced_by_vertices(g, subset):
    subset = set(subset)
    unknown = subset - set(g.vertices)
    if unknown:
        raise InvalidInputError(f"unknown vertex ids: {_sorted(unknown)!r}")
    endpoints = {e: (t, h) for e, (t, h) in g.endpoints.items()
                 if t in subset and h in subset}
    return Graph(subset, endpoints, directed=g.directed, simple=g.simple)


def is_subgraph(h, g):
    """``h`` ⊆ ``g`` on identical ids, edges compared by endpoint pair with multiplicity."""
    if h.directed != g.directed:
        return False
    if not set(h.vertices) <= set(g.vertices):
        return False
    counts = Counter(h.endpoints.values())
    return all(g.multiplicity(t, h_) >= c for (t, h_), c in counts.items())


def is_oriented(g):
    """Directed, and no pair of vertices is joined in both directions."""
    if not g.directed:
        return False
    return not any(t != h and g.has_edge(h, t) for t, h in g.endpoints.values())
