"""Binary graph constructions and exhaustive universal-property verification.

The product constructions are candidates; :func:`verify_product` and
:func:`verify_coproduct` decide, over a finite pool of test objects, whether a
candidate actually has the universal property in a given category. Mediating
maps are searched over the full map space ``V(H) -> V(object)``, not derived from
the factor maps, so both existence and uniqueness are genuinely tested.

Categories: ``Gra`` (homomorphisms), ``EGra`` (egamorphisms), ``CGra``
(comorphisms) and ``Set`` (all maps).
"""
from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import InvalidInputError, ResourceLimitError
from .graph import Graph
from .morphisms import check_morphism, enumerate_morphisms, iter_all_maps

__all__ = [
    "CATEGORY_KINDS", "ProductWitness", "UniversalCheckResult", "cross_product",
    "cartesian_product", "strong_product", "disjunction", "coproduct", "join",
    "PRODUCTS", "verify_product", "verify_coproduct", "verify_product_over_pool",
    "verify_coproduct_over_pool", "DEFAULT_VERIFY_BUDGET",
]

CATEGORY_KINDS = {"gra": "hom", "egra": "ega", "cgra": "co", "set": "set"}
DEFAULT_VERIFY_BUDGET = 10 ** 7


def _kind(category):
    try:
        return CATEGORY_KINDS[category.lower()]
    except KeyError:
        raise InvalidInputError(f"unknown category {category!r}") from None


@dataclass(frozen=True)
class ProductWitness:
    object: Graph
    proj1: dict
    proj2: dict
    construction: str
    factors: tuple = ()


@dataclass
class UniversalCheckResult:
    passed: bool
    tested_objects: int
    tested_pairs: int
    counterexample: dict = field(default=None)

    def to_dict(self):
        from .io import graph_to_dict
        out = {"passed": self.passed, "tested_objects": self.tested_objects,
               "tested_pairs": self.tested_pairs, "counterexample": None}
        if self.counterexample is not None:
            cx = self.counterexample
            out["counterexample"] = {
                "reason": cx["reason"],
                "test_object": graph_to_dict(cx["test_object"]) if cx.get("test_object") else None,
                "f1": _pairs(cx.get("f1")),
                "f2": _pairs(cx.get("f2")),
                "mediators": [_pairs(m) for m in cx.get("mediators", [])],
            }
            if "factors" in cx:
                out["counterexample"]["factors"] = [graph_to_dict(g) for g in cx["factors"]]
        return out


def _pairs(f):
    from .io import to_jsonable
    if f is None:
        return None
    return [[to_jsonable(k), to_jsonable(v)] for k, v in f.items()]


def _require_simple_undirected(*graphs):
    for g in graphs:
        if g.directed or not g.simple:
            raise InvalidInputError("products are defined here for simple undirected graphs")


def _product_graph(g1, g2, adjacent, label):
    _require_simple_undirected(g1, g2)
    vs = [(a, b) for a in g1.vertices for b in g2.vertices]
    pairs = [(u, v) for u, v in combinations(vs, 2) if adjacent(u, v)]
    obj = Graph(vs, pairs)
    p1 = {v: v[0] for v in vs}
    p2 = {v: v[1] for v in vs}
    return ProductWitness(obj, p1, p2, label, (g1, g2))


def cross_product(g1, g2):
    """Both coordinates adjacent."""
    return _product_graph(g1, g2, lambda u, v: g1.has_edge(u[0], v[0]) and g2.has_edge(u[1], v[1]),
                          "cross")


def cartesian_product(g1, g2):
    """One coordinate equal, the other adjacent."""
    def adj(u, v):
        return ((u[0] == v[0] and g2.has_edge(u[1], v[1]))
                or (u[1] == v[1] and g1.has_edge(u[0], v[0])))
    return _product_graph(g1, g2, adj, "cartesian")


def strong_product(g1, g2):
    """Edge set is the union of the cross and cartesian edge sets."""
    def adj(u, v):
        a = g1.has_edge(u[0], v[0]) or u[0] == v[0]
        b = g2.has_edge(u[1], v[1]) or u[1] == v[1]
        return a and b
    return _product_graph(g1, g2, adj, "strong")


def disjunction(g1, g2):
    """Distinct pairs with at least one coordinate adjacent."""
    return _product_graph(g1, g2, lambda u, v: g1.has_edge(u[0], v[0]) or g2.has_edge(u[1], v[1]),
                          "disjunction")


PRODUCTS = {
    "cross": cross_product,
    "cartesian": cartesian_product,
    "strong": strong_product,
    "disjunction": disjunction,
}


def coproduct(g1, g2):
    """Disjoint union with vertex ids tagged ``(1, v)`` and ``(2, v)``.

    Returns ``(graph, injection1, injection2)``.
    """
    if g1.directed != g2.directed:
        raise InvalidInputError("cannot unite a directed and an undirected graph")
    u1 = {v: (1, v) for v in g1.vertices}
    u2 = {v: (2, v) for v in g2.vertices}
    edges = {(1, e): (u1[t], u1[h]) for e, (t, h) in g1.endpoints.items()}
    edges.update({(2, e): (u2[t], u2[h]) for e, (t, h) in g2.endpoints.items()})
    obj = Graph(list(u1.values()) + list(u2.values()), edges,
                directed=g1.directed, simple=g1.simple and g2.simple)
    return obj, u1, u2


def join(g1, g2):
    """Disjoint union plus every edge between the two sides (not a coproduct)."""
    obj, u1, u2 = coproduct(g1, g2)
    extra = [(a, b) for a in u1.values() for b in u2.values()]
    edges = dict(obj.endpoints)
    edges.update({(3, i): pair for i, pair in enumerate(extra)})
    return Graph(obj.vertices, edges, directed=obj.directed, simple=obj.simple), u1, u2


def _morphisms(g, h, kind, budget):
    if kind == "set":
        return list(iter_all_maps(g, h))
    return enumerate_morphisms(g, h, kind, budget=budget)


def _freeze(f, order):
    return tuple(f[v] for v in order)


def verify_product(witness, category, pool, budget=DEFAULT_VERIFY_BUDGET):
    """Exhaustively test the product universal property of ``witness``.

    Fails immediately if a projection is not a morphism of the category. Then, for
    each test object ``H`` in ``pool``, every morphism ``f: H -> object`` is
    bucketed by ``(p1 f, p2 f)``; each pair ``(f1, f2)`` of morphisms into the
    factors must land in a bucket of size exactly one.
    """
    kind = _kind(category)
    obj = witness.object
    g1, g2 = witness.factors
    space = sum(len(obj.vertices) ** len(h.vertices) for h in pool)
    if space > budget:
        raise ResourceLimitError("product verification", space, budget)
    for name, p, g in (("p1", witness.proj1, g1), ("p2", witness.proj2, g2)):
        if kind != "set" and not check_morphism(p, obj, g, kind):
            return UniversalCheckResult(False, 0, 0, {
                "reason": f"projection {name} is not a morphism",
                "test_object": None, "f1": p if name == "p1" else None,
                "f2": p if name == "p2" else None})
    pairs_tested = 0
    for n_obj, h in enumerate(pool, 1):
        hv = h.vertices
        buckets = {}
        for f in _morphisms(h, obj, kind, budget):
            key = (tuple(witness.proj1[f[v]] for v in hv), tuple(witness.proj2[f[v]] for v in hv))
            buckets.setdefault(key, []).append(f)
        m1 = _morphisms(h, g1, kind, budget)
        m2 = _morphisms(h, g2, kind, budget)
        for f1, f2 in product(m1, m2):
            pairs_tested += 1
            found = buckets.get((_freeze(f1, hv), _freeze(f2, hv)), [])
            if len(found) != 1:
                reason = "no mediating morphism" if not found else "non-unique mediating morphism"
                return UniversalCheckResult(False, n_obj, pairs_tested, {
                    "reason": reason, "test_object": h, "f1": f1, "f2": f2,
                    "mediators": found})
    return UniversalCheckResult(True, len(pool), pairs_tested)


def verify_coproduct(u1, u2, obj, category, pool, factors, budget=DEFAULT_VERIFY_BUDGET):
    """Dual check: for all ``f1: G1 -> H``, ``f2: G2 -> H`` exactly one ``f`` with ``f u_i = f_i``."""
    kind = _kind(category)
    g1, g2 = factors
    space = sum(len(h.vertices) ** len(obj.vertices) for h in pool)
    if space > budget:
        raise ResourceLimitError("coproduct verification", space, budget)
    for name, u, g in (("u1", u1, g1), ("u2", u2, g2)):
        if kind != "set" and not check_morphism(u, g, obj, kind):
            return UniversalCheckResult(False, 0, 0, {
                "reason": f"injection {name} is not a morphism", "test_object": None,
                "f1": u if name == "u1" else None, "f2": u if name == "u2" else None})
    pairs_tested = 0
    for n_obj, h in enumerate(pool, 1):
        buckets = {}
        for f in _morphisms(obj, h, kind, budget):
            key = (tuple(f[u1[v]] for v in g1.vertices), tuple(f[u2[v]] for v in g2.vertices))
            buckets.setdefault(key, []).append(f)
        m1 = _morphisms(g1, h, kind, budget)
        m2 = _morphisms(g2, h, kind, budget)
        for f1, f2 in product(m1, m2):
            pairs_tested += 1
            found = buckets.get((_freeze(f1, g1.vertices), _freeze(f2, g2.vertices)), [])
            if len(found) != 1:
                reason = "no mediating morphism" if not found else "non-unique mediating morphism"
                return UniversalCheckResult(False, n_obj, pairs_tested, {
                    "reason": reason, "test_object": h, "f1": f1, "f2": f2,
                    "mediators": found})
    return UniversalCheckResult(True, len(pool), pairs_tested)


def verify_product_over_pool(construction, category, pool, budget=DEFAULT_VERIFY_BUDGET):
    """Run :func:`verify_product` for every ordered factor pair drawn from ``pool``.

    Returns the first failing result (with the factors attached) or an aggregate pass.
    """
    build = PRODUCTS[construction] if isinstance(construction, str) else construction
    objects = pairs = 0
    for g1, g2 in product(pool, repeat=2):
        res = verify_product(build(g1, g2), category, pool, budget)
        objects += res.tested_objects
        pairs += res.tested_pairs
        if not res.passed:
            res.counterexample["factors"] = (g1, g2)
            res.tested_objects, res.tested_pairs = objects, pairs
            return res
    return UniversalCheckResult(True, objects, pairs)


def verify_coproduct_over_pool(category, pool, build=coproduct, budget=DEFAULT_VERIFY_BUDGET):
    objects = pairs = 0
    for g1, g2 in product(pool, repeat=2):
        obj, u1, u2 = build(g1, g2)
        res = verify_coproduct(u1, u2, obj, category, pool, (g1, g2), budget)
        objects += res.tested_objects
        pairs += res.tested_pairs
        if not res.passed:
            res.counterexample["factors"] = (g1, g2)
            res.tested_objects, res.tested_pairs = objects, pairs
            return res
    return UniversalCheckResult(True, objects, pairs)
