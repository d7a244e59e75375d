"""Graph systems, hypergraphs and simple relational systems."""
from dataclasses import dataclass, field
from itertools import permutations

from .errors import InvalidInputError, UndefinedArityError
from .graph import Graph, sort_key

__all__ = [
    "GraphSystem", "Relation", "RelationalSystem", "sm_closure", "sm_orbits",
    "type_symbol", "arity", "hypergraph_from_tuples", "graph_to_relational",
    "relational_to_graph", "relational_to_dict", "relational_from_dict",
]


def _canon(t):
    return tuple(sorted(t, key=sort_key))


@dataclass(frozen=True)
class GraphSystem:
    """Several graphs over one common carrier."""

    carrier: frozenset
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "carrier", frozenset(self.carrier))
        object.__setattr__(self, "members", tuple(self.members))
        for i, g in enumerate(self.members):
            if not set(g.vertices) <= self.carrier:
                raise InvalidInputError(f"member {i} has vertices outside the carrier")


@dataclass(frozen=True)
class Relation:
    name: str
    arity: int
    tuples: frozenset

    def __post_init__(self):
        tuples = frozenset(tuple(t) for t in self.tuples)
        for t in tuples:
            if len(t) != self.arity:
                raise InvalidInputError(
                    f"relation {self.name!r} declares arity {self.arity} but holds {t!r}")
        object.__setattr__(self, "tuples", tuples)


@dataclass(frozen=True)
class RelationalSystem:
    carrier: frozenset
    relations: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "carrier", frozenset(self.carrier))
        object.__setattr__(self, "relations", tuple(self.relations))
        for rel in self.relations:
            for t in rel.tuples:
                bad = [x for x in t if x not in self.carrier]
                if bad:
                    raise InvalidInputError(
                        f"relation {rel.name!r}: coordinate {bad[0]!r} outside the carrier")

    def relation(self, name):
        for rel in self.relations:
            if rel.name == name:
                return rel
        raise KeyError(name)


def sm_closure(relation, m):
    """Quotient of a set of m-tuples by coordinate permutation.

    Each orbit is represented by its sorted tuple.
    """
    out = set()
    for t in relation:
        if len(t) != m:
            raise InvalidInputError(f"tuple {tuple(t)!r} does not have length {m}")
        out.add(_canon(t))
    return out


def sm_orbits(relation):
    """Group tuples into S_m orbits by explicit permutation (reference implementation)."""
    remaining = set(map(tuple, relation))
    orbits = []
    while remaining:
        t = min(remaining, key=sort_key)
        orbit = {p for p in permutations(t)} & remaining
        remaining -= orbit
        orbits.append(frozenset(orbit))
    return orbits


def type_symbol(rs):
    """``[(arity, count), ...]`` with counts of extensionally distinct relations."""
    by_arity = {}
    for rel in rs.relations:
        by_arity.setdefault(rel.arity, set()).add(rel.tuples)
    return [(k, len(by_arity[k])) for k in sorted(by_arity)]


def arity(rs):
    if not rs.relations:
        raise UndefinedArityError("a system without relations has no arity")
    return max(rel.arity for rel in rs.relations)


def hypergraph_from_tuples(carrier, tuples):
    """One relation per occurring tuple length, named ``E<k>``."""
    carrier = frozenset(carrier)
    by_len = {}
    for t in tuples:
        t = tuple(t)
        for x in t:
            if x not in carrier:
                raise InvalidInputError(f"coordinate {x!r} outside the carrier")
        by_len.setdefault(len(t), set()).add(t)
    rels = [Relation(f"E{k}", k, frozenset(ts)) for k, ts in sorted(by_len.items())]
    return RelationalSystem(carrier, rels)


def graph_to_relational(g, name="E"):
    """Edge relation of ``g`` as a binary relational system.

    Undirected edges contribute both orientations. Edge ids and multiplicities are
    not part of a relation and are dropped.
    """
    pairs = set()
    for t, h in g.endpoints.values():
        pairs.add((t, h))
        if not g.directed:
            pairs.add((h, t))
    return RelationalSystem(frozenset(g.vertices), [Relation(name, 2, frozenset(pairs))])


def relational_to_graph(rs, directed=None, name=None):
    """Build a simple graph from a binary relation.

    With ``directed=None`` the result is undirected iff the relation is symmetric
    and irreflexive. Edge ids are numbered in sorted pair order.
    """
    if name is None:
        if len(rs.relations) != 1:
            raise InvalidInputError("expected exactly one relation; pass name= to choose")
        rel = rs.relations[0]
    else:
        try:
            rel = rs.relation(name)
        except KeyError:
            raise InvalidInputError(f"no relation named {name!r}") from None
    if rel.arity != 2:
        raise InvalidInputError("graph conversion needs a binary relation")
    pairs = rel.tuples
    symmetric = all((b, a) in pairs for a, b in pairs)
    irreflexive = all(a != b for a, b in pairs)
    if directed is None:
        directed = not (symmetric and irreflexive)
    if not directed:
        if not symmetric:
            raise InvalidInputError("undirected conversion needs a symmetric relation")
        pairs = {_canon(p) for p in pairs}
    ordered = sorted(pairs, key=sort_key)
    simple = all(a != b for a, b in ordered)
    return Graph(rs.carrier, ordered, directed=directed, simple=simple)


def relational_to_dict(rs):
    from .io import to_jsonable
    return {
        "carrier": [to_jsonable(x) for x in sorted(rs.carrier, key=sort_key)],
        "relations": [
            {"name": r.name, "arity": r.arity,
             "tuples": [to_jsonable(t) for t in sorted(r.tuples, key=sort_key)]}
            for r in rs.relations
        ],
    }


def relational_from_dict(data):
    from .io import from_jsonable
    try:
        carrier = [from_jsonable(x) for x in data["carrier"]]
        rels = []
        for item in data["relations"]:
            tuples = frozenset(tuple(from_jsonable(x) for x in t) for t in item["tuples"])
            rels.append(Relation(item["name"], int(item["arity"]), tuples))
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"malformed relational-system JSON: {exc}") from exc
    return RelationalSystem(carrier, rels)
