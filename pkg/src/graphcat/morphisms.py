"""Vertex maps between graphs: the morphism kinds, exhaustive enumeration, isomorphism.

Kinds
-----
``hom``
    every edge ``xy`` of the source maps to an edge ``f(x)f(y)`` of the target.
``ega``
    every edge maps to an edge or collapses (``f(x) == f(y)``).
``co``
    whenever ``f(x)f(y)`` is an edge of the target, ``xy`` is an edge of the source.
``iso``
    a bijection with ``mult(x, y) == mult(f(x), f(y))`` for every ordered pair.
``contraction``
    a surjective ``ega`` whose fibres induce connected subgraphs and under which
    every target edge is the image of some source edge.
``set``
    any total map (the category of sets).

Undirected graphs are compared as symmetric relations; directed graphs on ordered
pairs. Mixing the two is an error.
"""
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInputError, ResourceLimitError, UnsupportedInputError
from .graph import Graph, induced_by_vertices, sort_key

__all__ = [
    "KINDS", "Morphism", "Violation", "morphism_violation", "check_morphism",
    "enumerate_morphisms", "iter_all_maps", "automorphism_group", "find_isomorphism",
    "are_isomorphic", "canonical_form", "canonical_graph", "DEFAULT_MAP_BUDGET",
    "DEFAULT_AUT_BOUND", "iter_subgraph_embeddings", "find_subgraph_embedding",
]

KINDS = ("hom", "ega", "co", "iso", "contraction", "set")
DEFAULT_MAP_BUDGET = 10 ** 6
DEFAULT_AUT_BOUND = 10


class Violation(NamedTuple):
    reason: str
    pair: tuple = None


def _pair_test(kind, g, h):
    """Return ``ok(a, b, fa, fb)`` for the kind's pairwise condition, or None."""
    if kind == "hom":
        return lambda a, b, fa, fb: not g.has_edge(a, b) or h.has_edge(fa, fb)
    if kind in ("ega", "contraction"):
        return lambda a, b, fa, fb: not g.has_edge(a, b) or fa == fb or h.has_edge(fa, fb)
    if kind == "co":
        return lambda a, b, fa, fb: not h.has_edge(fa, fb) or g.has_edge(a, b)
    if kind == "iso":
        return lambda a, b, fa, fb: g.multiplicity(a, b) == h.multiplicity(fa, fb)
    if kind == "set":
        return None
    raise InvalidInputError(f"unknown morphism kind {kind!r}; expected one of {KINDS}")


def _validate_map(f, g, h):
    if g.directed != h.directed:
        raise InvalidInputError("cannot map between a directed and an undirected graph")
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise InvalidInputError(f"map is not total; missing {missing[0]!r}")
    for v in g.vertices:
        if f[v] not in h:
            raise InvalidInputError(f"image {f[v]!r} of {v!r} is not a target vertex")


def _contraction_violation(f, g, h):
    fibres = {}
    for v in g.vertices:
        fibres.setdefault(f[v], []).append(v)
    for w in h.vertices:
        if w not in fibres:
            return Violation("not surjective", (w,))
    for w, fibre in fibres.items():
        if not induced_by_vertices(g, fibre).is_connected():
            return Violation("fibre not connected", (w,))
    covered = {(f[t], f[x]) for t, x in g.endpoints.values()}
    if not g.directed:
        covered |= {(b, a) for a, b in covered}
    for t, x in h.endpoints.values():
        if (t, x) not in covered:
            return Violation("target edge not covered", (t, x))
    return None


def morphism_violation(f, g, h, kind):
    """First violation of ``kind`` for the vertex map ``f: g -> h``, or None."""
    _validate_map(f, g, h)
    test = _pair_test(kind, g, h)
    if kind == "iso":
        if len(g.vertices) != len(h.vertices) or len({f[v] for v in g.vertices}) != len(g.vertices):
            return Violation("not a bijection")
    if test is not None:
        vs = g.vertices
        for i, a in enumerate(vs):
            for b in (vs[i:] if not g.directed else vs):
                if not test(a, b, f[a], f[b]):
                    return Violation("pair", (a, b))
    if kind == "contraction":
        return _contraction_violation(f, g, h)
    return None


def check_morphism(f, g, h, kind):
    return morphism_violation(f, g, h, kind) is None


@dataclass(frozen=True)
class Morphism:
    """A vertex map verified to be of the declared kind at construction."""

    source: Graph
    target: Graph
    vertex_map: tuple
    kind: str

    def __init__(self, source, target, vertex_map, kind):
        vertex_map = dict(vertex_map)
        bad = morphism_violation(vertex_map, source, target, kind)
        if bad is not None:
            raise InvalidInputError(f"map is not a {kind}: {bad.reason} {bad.pair!r}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "vertex_map",
                           tuple((v, vertex_map[v]) for v in source.vertices))
        object.__setattr__(self, "kind", kind)

    def __call__(self, v):
        return dict(self.vertex_map)[v]

    def as_dict(self):
        return dict(self.vertex_map)

    def to_dict(self):
        from .io import to_jsonable
        return {"map": {str(to_jsonable(k)) if not isinstance(k, (int, str)) else k:
                        to_jsonable(v) for k, v in self.vertex_map},
                "kind": self.kind}


def _budget_check(what, needed, budget):
    if budget is not None and needed > budget:
        raise ResourceLimitError(what, needed, budget)


def iter_all_maps(g, h):
    """Every total map ``V(g) -> V(h)`` in lexicographic order, as dicts."""
    vs, ws = g.vertices, h.vertices
    if not vs:
        yield {}
        return
    if not ws:
        return
    idx = [0] * len(vs)
    while True:
        yield {v: ws[i] for v, i in zip(vs, idx)}
        k = len(vs) - 1
        while k >= 0 and idx[k] == len(ws) - 1:
            idx[k] = 0
            k -= 1
        if k < 0:
            return
        idx[k] += 1


def enumerate_morphisms(g, h, kind, budget=DEFAULT_MAP_BUDGET):
    """All maps ``g -> h`` of the given kind, in lexicographic order of images.

    The whole ``|V(h)|**|V(g)|`` map space is covered; partial assignments are
    abandoned as soon as a pairwise condition fails among assigned vertices.
    """
    if g.directed != h.directed:
        raise InvalidInputError("cannot map between a directed and an undirected graph")
    _budget_check(f"{kind} maps", len(h.vertices) ** len(g.vertices), budget)
    test = _pair_test(kind, g, h)
    vs, ws = g.vertices, h.vertices
    if kind == "iso" and len(vs) != len(ws):
        return []
    out = []
    f = {}
    used = set()

    def extend(i):
        if i == len(vs):
            if kind != "contraction" or _contraction_violation(f, g, h) is None:
                out.append(dict(f))
            return
        a = vs[i]
        for w in ws:
            if kind == "iso" and w in used:
                continue
            f[a] = w
            if test is not None:
                ok = True
                for b in vs[:i + 1]:
                    fb = f[b]
                    if not test(a, b, w, fb) or not test(b, a, fb, w):
                        ok = False
                        break
                if not ok:
                    continue
            used.add(w)
            extend(i + 1)
            used.discard(w)
        f.pop(a, None)

    extend(0)
    return out


# -- isomorphism ---------------------------------------------------------------------


def _signature(g, v):
    return (len(g.neighbors(v)), len(g.predecessors(v)), g.degree(v), g.multiplicity(v, v))


def _search_order(g):
    """Vertex order where each vertex tends to touch earlier ones (BFS by component)."""
    order, seen = [], set()
    for s in sorted(g.vertices, key=lambda v: (-g.degree(v), sort_key(v))):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            nb = sorted(g.neighbors(x) | g.predecessors(x), key=sort_key)
            for y in nb:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def _iso_maps(g, h, first_only=False):
    if g.directed != h.directed:
        return []
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return []
    sig_g = {v: _signature(g, v) for v in g.vertices}
    sig_h = {w: _signature(h, w) for w in h.vertices}
    if sorted(sig_g.values()) != sorted(sig_h.values()):
        return []
    order = _search_order(g)
    out = []
    f = {}
    used = set()

    def extend(i):
        if i == len(order):
            out.append(dict(f))
            return first_only
        a = order[i]
        for w in h.vertices:
            if w in used or sig_h[w] != sig_g[a]:
                continue
            ok = all(g.multiplicity(a, b) == h.multiplicity(w, f[b])
                     and g.multiplicity(b, a) == h.multiplicity(f[b], w)
                     for b in order[:i])
            if not ok:
                continue
            f[a] = w
            used.add(w)
            if extend(i + 1):
                return True
            used.discard(w)
            del f[a]
        return False

    extend(0)
    return out


def find_isomorphism(g, h, bound=None):
    """An isomorphism ``g -> h`` as a dict, or None."""
    if bound is not None:
        _budget_check("isomorphism search (vertices)", len(g.vertices), bound)
    found = _iso_maps(g, h, first_only=True)
    return found[0] if found else None


def are_isomorphic(g, h, bound=None):
    return find_isomorphism(g, h, bound) is not None


def automorphism_group(g, bound=DEFAULT_AUT_BOUND):
    """All automorphisms of ``g`` as dicts, sorted by image sequence.

    The search prunes on degree signatures and adjacency among assigned vertices
    but never skips a branch that could complete, so the list is the full group.
    """
    _budget_check("automorphism search (vertices)", len(g.vertices), bound)
    maps = _iso_maps(g, g)
    vs = g.vertices
    maps.sort(key=lambda f: tuple(sort_key(f[v]) for v in vs))
    return maps


# -- canonical form (simple undirected graphs) ----------------------------------------


def _refine(adj, colors):
    while True:
        sigs = {v: (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in adj}
        ranks = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        new = {v: ranks[sigs[v]] for v in adj}
        if len(ranks) == len(set(colors.values())):
            return new
        colors = new


def canonical_form(g):
    """Isomorphism certificate of a simple undirected graph.

    Individualisation-refinement: colour refinement, then branch on every vertex
    of the first non-singleton cell. The certificate is the lexicographically
    least sorted edge list over all discrete leaves, so it is a complete invariant.
    """
    if g.directed or not g.simple:
        raise UnsupportedInputError("canonical form is defined for simple undirected graphs")
    adj = {v: g.neighbors(v) for v in g.vertices}
    n = len(g.vertices)
    best = None

    def leaf_cert(colors):
        return tuple(sorted(tuple(sorted((colors[t], colors[h]))) for t, h in g.endpoints.values()))

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        cells = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            cert = leaf_cert(colors)
            if best is None or cert < best:
                best = cert
            return
        for v in cells[target]:
            indiv = {u: (2 * c + (0 if u == v else 1) if c == target else 2 * c)
                     for u, c in colors.items()}
            search(indiv)

    search({v: 0 for v in g.vertices})
    return (n, best if best is not None else ())


def canonical_graph(g):
    """The representative on vertices ``0..n-1`` determined by :func:`canonical_form`."""
    n, edges = canonical_form(g)
    return Graph(range(n), list(edges))


def iter_subgraph_embeddings(h, g):
    """Injective vertex maps ``h -> g`` carrying every edge of ``h`` onto an edge of ``g``.

    Yields dicts; this is the "``h`` is isomorphic to a subgraph of ``g``" search.
    """
    if h.directed != g.directed:
        return
    order = _search_order(h)
    f, used = {}, set()

    def extend(i):
        if i == len(order):
            yield dict(f)
            return
        a = order[i]
        for w in g.vertices:
            if w in used or g.degree(w) < h.degree(a):
                continue
            if all(g.multiplicity(w, f[b]) >= h.multiplicity(a, b)
                   and g.multiplicity(f[b], w) >= h.multiplicity(b, a)
                   for b in order[:i]) and g.multiplicity(w, w) >= h.multiplicity(a, a):
                f[a] = w
                used.add(w)
                yield from extend(i + 1)
                used.discard(w)
                del f[a]

    yield from extend(0)


def find_subgraph_embedding(h, g):
    return next(iter_subgraph_embeddings(h, g), None)
