"""Binary relations on finite carriers: order axioms, well-foundedness, induction.

On a finite carrier an infinite descending chain must revisit an element, so a
relation is well-founded exactly when its strict part (pairs ``(a, b)`` with
``a != b``) has no directed cycle. That is how well-foundedness is decided here.
"""
import heapq
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError, NotWellFoundedError, ResourceLimitError
from .graph import Graph, sort_key

__all__ = [
    "OrderRelation", "Classification", "classify_relation", "minimal_elements",
    "induction_fold", "strict_cycle", "ChainReport", "antichains_and_chains",
    "order_to_oriented_graph", "divisibility_order", "order_to_dict", "order_from_dict",
    "DEFAULT_ANTICHAIN_BOUND",
]

DEFAULT_ANTICHAIN_BOUND = 40


@dataclass(frozen=True)
class OrderRelation:
    carrier: frozenset
    pairs: frozenset

    def __init__(self, carrier, pairs):
        carrier = frozenset(carrier)
        pairs = frozenset((a, b) for a, b in pairs)
        for a, b in pairs:
            if a not in carrier or b not in carrier:
                raise InvalidInputError(f"pair ({a!r}, {b!r}) lies outside the carrier")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "pairs", pairs)

    def __contains__(self, pair):
        return pair in self.pairs

    def elements(self):
        return sorted(self.carrier, key=sort_key)

    @property
    def reflexive(self):
        return all((a, a) in self.pairs for a in self.carrier)

    @property
    def irreflexive(self):
        return all((a, a) not in self.pairs for a in self.carrier)

    @property
    def symmetric(self):
        return all((b, a) in self.pairs for a, b in self.pairs)

    @property
    def antisymmetric(self):
        return all(a == b or (b, a) not in self.pairs for a, b in self.pairs)

    @property
    def transitive(self):
        succ = self._successors()
        return all((a, c) in self.pairs for a, b in self.pairs for c in succ[b])

    def axioms(self):
        return {"reflexive": self.reflexive, "irreflexive": self.irreflexive,
                "symmetric": self.symmetric, "antisymmetric": self.antisymmetric,
                "transitive": self.transitive}

    def _successors(self):
        succ = {a: set() for a in self.carrier}
        for a, b in self.pairs:
            succ[a].add(b)
        return succ

    def strict_pairs(self):
        return {(a, b) for a, b in self.pairs if a != b}


@dataclass(frozen=True)
class Classification:
    axioms: dict
    well_founded: bool
    kind: str
    cycle: tuple = None

    def to_dict(self):
        from .io import to_jsonable
        return {"axioms": self.axioms, "well_founded": self.well_founded, "kind": self.kind,
                "cycle": None if self.cycle is None else to_jsonable(self.cycle)}


def strict_cycle(r):
    """A cycle ``(x0, x1, ..., xk)`` of the strict part, meaning x0 < x1 < ... < xk < x0,
    or None if the strict part is acyclic."""
    succ = {a: sorted((b for b in bs if b != a), key=sort_key) for a, bs in r._successors().items()}
    colour = dict.fromkeys(r.carrier, 0)
    stack_pos = {}
    path = []

    def dfs(start):
        stack = [(start, iter(succ[start]))]
        colour[start] = 1
        stack_pos[start] = 0
        path.append(start)
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                colour[node] = 2
                path.pop()
                del stack_pos[node]
                continue
            if colour[nxt] == 1:
                return tuple(path[stack_pos[nxt]:])
            if colour[nxt] == 0:
                colour[nxt] = 1
                stack_pos[nxt] = len(path)
                path.append(nxt)
                stack.append((nxt, iter(succ[nxt])))
        return None

    for a in r.elements():
        if colour[a] == 0:
            found = dfs(a)
            if found:
                return found
    return None


def classify_relation(r):
    """Axiom record plus the most specific of: well-founded order, partial order,
    quasi-order, none. Finite partial orders are always well-founded."""
    ax = r.axioms()
    cycle = strict_cycle(r)
    wf = cycle is None
    if ax["reflexive"] and ax["antisymmetric"] and ax["transitive"]:
        kind = "well-founded order" if wf else "partial order"
    elif ax["reflexive"] and ax["transitive"]:
        kind = "quasi-order"
    else:
        kind = "none"
    return Classification(ax, wf, kind, cycle)


def _strictly_below(r):
    """For each element, the elements strictly below it in the quasi-order sense:
    ``y < x`` iff ``(y, x)`` is in the transitive closure of the strict part and
    ``(x, y)`` is not."""
    succ = {a: {b for b in bs if b != a} for a, bs in r._successors().items()}
    reach = {}
    for a in r.carrier:
        seen, todo = set(), list(succ[a])
        while todo:
            b = todo.pop()
            if b not in seen:
                seen.add(b)
                todo.extend(succ[b])
        reach[a] = seen
    return {x: {y for y in r.carrier if x in reach[y] and y not in reach[x] and y != x}
            for x in r.carrier}


def minimal_elements(r):
    """Elements with nothing strictly below them.

    Accepts quasi-orders and any relation with an acyclic strict part; refuses
    anything else.
    """
    c = classify_relation(r)
    if not (c.well_founded or c.kind in ("quasi-order", "partial order", "well-founded order")):
        raise InvalidInputError(
            f"minimal elements need a quasi-order or a well-founded relation (got {c.kind})")
    below = _strictly_below(r)
    return {x for x in r.carrier if not below[x]}


def induction_fold(r, step):
    """Compute ``step(x, results_below)`` for every element, smaller elements first.

    ``results_below`` maps each element strictly below ``x`` (transitive closure of
    the strict part) to its already computed result. Elements that become ready
    together are processed in id order, so the schedule is deterministic. A
    relation whose strict part has a cycle is refused with
    :class:`NotWellFoundedError` carrying that cycle.
    """
    cycle = strict_cycle(r)
    if cycle is not None:
        raise NotWellFoundedError(cycle)
    preds = {a: set() for a in r.carrier}
    succ = {a: set() for a in r.carrier}
    for a, b in r.strict_pairs():
        preds[b].add(a)
        succ[a].add(b)
    below = _strictly_below(r)
    waiting = {a: len(preds[a]) for a in r.carrier}
    heap = [(sort_key(a), a) for a in r.carrier if waiting[a] == 0]
    heapq.heapify(heap)
    results = {}
    while heap:
        _, x = heapq.heappop(heap)
        results[x] = step(x, {y: results[y] for y in sorted(below[x], key=sort_key)})
        for y in succ[x]:
            waiting[y] -= 1
            if waiting[y] == 0:
                heapq.heappush(heap, (sort_key(y), y))
    return results


@dataclass(frozen=True)
class ChainReport:
    max_antichain_size: int
    max_antichain: tuple
    longest_chain_length: int
    longest_chain: tuple
    wqo_trivially_satisfied: bool

    def to_dict(self):
        from .io import to_jsonable
        return {"max_antichain_size": self.max_antichain_size,
                "max_antichain": to_jsonable(self.max_antichain),
                "longest_chain_length": self.longest_chain_length,
                "longest_chain": to_jsonable(self.longest_chain),
                "wqo_trivially_satisfied": self.wqo_trivially_satisfied}


def _max_clique(vertices, adj):
    """Largest clique by branch and bound; ties broken toward the earliest in order."""
    best = []

    def expand(clique, cand):
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        for i, v in enumerate(cand):
            if len(clique) + len(cand) - i <= len(best):
                return
            expand(clique + [v], [u for u in cand[i + 1:] if u in adj[v]])

    expand([], list(vertices))
    return best


def antichains_and_chains(r, bound=DEFAULT_ANTICHAIN_BOUND):
    """Largest antichain and longest chain by exhaustive clique search.

    Two distinct elements are comparable when either ordered pair is in ``r``. A
    chain is a pairwise comparable set, an antichain a pairwise incomparable one.
    On a finite carrier every antichain and every descending chain is finite, so
    the well-quasi-order criterion holds for any quasi-order; the flag reports
    only whether ``r`` is a quasi-order.
    """
    n = len(r.carrier)
    if n > bound:
        raise ResourceLimitError("antichain search (elements)", n, bound)
    elems = r.elements()
    comparable = {a: set() for a in elems}
    for a, b in combinations(elems, 2):
        if (a, b) in r.pairs or (b, a) in r.pairs:
            comparable[a].add(b)
            comparable[b].add(a)
    incomparable = {a: set(elems) - comparable[a] - {a} for a in elems}
    anti = _max_clique(elems, incomparable)
    chain = _max_clique(elems, comparable)
    below = _strictly_below(r)
    chain.sort(key=lambda x: (len(below[x]), sort_key(x)))
    return ChainReport(len(anti), tuple(anti), len(chain), tuple(chain),
                       r.reflexive and r.transitive)


def order_to_oriented_graph(r):
    """Directed graph with an edge ``a -> b`` for every strict pair ``a < b``."""
    if not r.antisymmetric:
        raise InvalidInputError("an oriented graph needs an antisymmetric relation")
    return Graph(r.carrier, sorted(r.strict_pairs(), key=sort_key), directed=True)


def divisibility_order(ints):
    ints = list(ints)
    if any(x < 1 for x in ints):
        raise InvalidInputError("divisibility is taken over positive integers")
    return OrderRelation(ints, [(a, b) for a in ints for b in ints if b % a == 0])


def order_to_dict(r, name="leq"):
    from .relational import Relation, RelationalSystem, relational_to_dict
    return relational_to_dict(RelationalSystem(r.carrier, [Relation(name, 2, r.pairs)]))


def order_from_dict(data):
    from .relational import relational_from_dict
    rs = relational_from_dict(data)
    if len(rs.relations) != 1 or rs.relations[0].arity != 2:
        raise InvalidInputError("order JSON must hold exactly one binary relation")
    return OrderRelation(rs.carrier, rs.relations[0].tuples)
