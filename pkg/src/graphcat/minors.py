"""Contractions, minors and topological minors, with exhaustive searches and audits.

A contraction is a partition of the vertex set into blocks that each induce a
connected subgraph; the contracted graph has one vertex per block (named by the
sorted tuple of its members) and an edge between two blocks whenever some host
edge joins them.

Minor search works with branch sets: ``H <= G`` iff ``G`` has pairwise disjoint
connected vertex sets, one per vertex of ``H``, with a ``G``-edge between the sets
of every ``H``-edge. That is the same as "some subgraph ``K`` of ``G`` contracts
exactly onto ``H``": take ``K`` to be a spanning tree of each branch set plus one
connecting edge per ``H``-edge, and surplus adjacencies are gone. The returned
:class:`MinorWitness` carries that ``K``.
"""
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import InvalidInputError, InvalidPartitionError, ResourceLimitError, \
    UnsupportedInputError
from .graph import Graph, induced_by_vertices, is_subgraph, sort_key
from .morphisms import are_isomorphic, find_subgraph_embedding

__all__ = [
    "Partition", "MinorWitness", "TopologicalEmbedding", "block_map", "contract",
    "contract_faithful", "contract_subgraph", "connected_partitions", "stirling2",
    "find_contraction", "exists_contraction", "find_minor", "is_minor",
    "verify_minor_witness", "find_topological_minor", "is_topological_minor",
    "verify_topological_embedding", "is_planar", "max_degree", "MinorAuditReport",
    "minor_order_audit", "LowDegreeReport", "minor_equivalence_low_degree",
    "DEFAULT_PARTITION_BUDGET",
]

DEFAULT_PARTITION_BUDGET = 10 ** 6
DEFAULT_MINOR_HOST_BOUND = 12
DEFAULT_MINOR_PATTERN_BOUND = 7


def _block(vs):
    return tuple(sorted(vs, key=sort_key))


def _weak_adj(g):
    return {v: g.neighbors(v) | g.predecessors(v) for v in g.vertices}


@dataclass(frozen=True)
class Partition:
    """Connected partition of a graph's vertex set; validated on construction."""

    graph: Graph
    blocks: tuple

    def __init__(self, graph, blocks):
        blocks = [_block(b) for b in blocks]
        seen = set()
        for b in blocks:
            if not b:
                raise InvalidPartitionError("empty block", b)
            for v in b:
                if v not in graph:
                    raise InvalidPartitionError(f"unknown vertex {v!r}", b)
                if v in seen:
                    raise InvalidPartitionError(f"vertex {v!r} in two blocks", b)
                seen.add(v)
        if len(seen) != len(graph.vertices):
            missing = [v for v in graph.vertices if v not in seen]
            raise InvalidPartitionError(f"blocks do not cover vertex {missing[0]!r}")
        for b in blocks:
            if not induced_by_vertices(graph, b).is_connected():
                raise InvalidPartitionError(f"block {b!r} does not induce a connected subgraph", b)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=sort_key)))

    def to_dict(self):
        from .io import to_jsonable
        return {"blocks": [to_jsonable(b) for b in self.blocks]}


def block_map(p):
    """Vertex -> block id (the block's sorted tuple): the contraction mapping."""
    return {v: b for b in p.blocks for v in b}


def contract(p):
    """Simple contracted graph on the blocks of ``p``; no loops, no parallel edges."""
    g = p.graph
    f = block_map(p)
    pairs = set()
    for t, h in g.endpoints.values():
        a, b = f[t], f[h]
        if a == b:
            continue
        if not g.directed and sort_key(b) < sort_key(a):
            a, b = b, a
        pairs.add((a, b))
    return Graph(p.blocks, sorted(pairs, key=sort_key), directed=g.directed, simple=True)


def contract_faithful(p):
    """Multigraph keeping one edge per host edge joining different blocks (same edge ids)."""
    g = p.graph
    f = block_map(p)
    edges = {e: (f[t], f[h]) for e, (t, h) in g.endpoints.items() if f[t] != f[h]}
    return Graph(p.blocks, edges, directed=g.directed, simple=False)


def contract_subgraph(g, r):
    """``G/R``: contract the connected subgraph ``r`` (a Graph) to a single vertex."""
    if not r.vertices:
        raise InvalidInputError("cannot contract an empty subgraph")
    if not is_subgraph(r, g):
        raise InvalidInputError("r is not a subgraph of g")
    if not r.is_connected():
        raise InvalidPartitionError("subgraph to contract is not connected", _block(r.vertices))
    rest = [(v,) for v in g.vertices if v not in r]
    return contract(Partition(g, [r.vertices] + rest))


# -- enumeration of connected sets and connected partitions ---------------------------


def _connected_sets(adj, seed, allowed):
    """Every connected subset of ``allowed`` containing ``seed``, each exactly once."""

    def rec(current, ext, forbidden):
        yield current
        ext = list(ext)
        forbidden = set(forbidden)
        while ext:
            u = ext.pop()
            grown = current | {u}
            new_ext = set(ext)
            for w in adj[u]:
                if w in allowed and w not in grown and w not in forbidden:
                    new_ext.add(w)
            yield from rec(grown, sorted(new_ext, key=sort_key, reverse=True), forbidden)
            forbidden.add(u)

    start = sorted((w for w in adj[seed] if w in allowed and w != seed), key=sort_key, reverse=True)
    yield from rec(frozenset([seed]), start, {seed})


def stirling2(n, k):
    """Number of partitions of an n-set into k nonempty blocks."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def connected_partitions(g, k=None):
    """Yield every connected partition of ``V(g)`` (into exactly ``k`` blocks if given).

    The block holding the least unassigned vertex is chosen among connected sets
    of the unassigned vertices, so only connected partitions are ever built.
    """
    adj = _weak_adj(g)
    order = list(g.vertices)

    def rec(remaining, blocks):
        if not remaining:
            if k is None or len(blocks) == k:
                yield list(blocks)
            return
        if k is not None and (len(blocks) >= k or len(remaining) < k - len(blocks)):
            return
        seed = min(remaining, key=sort_key)
        for s in _connected_sets(adj, seed, remaining):
            if k is not None and len(remaining) - len(s) < k - len(blocks) - 1:
                continue
            blocks.append(s)
            yield from rec(remaining - s, blocks)
            blocks.pop()

    yield from rec(frozenset(order), [])


def _undirected(g, what):
    if g.directed:
        raise UnsupportedInputError(f"{what} is implemented for undirected graphs")


def find_contraction(g, h, budget=DEFAULT_PARTITION_BUDGET, faithful=False):
    """A connected partition of all of ``V(g)`` contracting onto a copy of ``h``, or None.

    With ``faithful=True`` the faithful (multigraph) contraction must match ``h``
    edge for edge, parallel edges included.
    """
    _undirected(g, "contraction search")
    k = len(h.vertices)
    needed = stirling2(len(g.vertices), k)
    if needed > budget:
        raise ResourceLimitError("contraction search (set partitions)", needed, budget)
    target_degrees = sorted(h.degree(v) if faithful else len(h.neighbors(v)) for v in h.vertices)
    m = len(h.edges)
    for blocks in connected_partitions(g, k):
        p = Partition(g, blocks)
        q = contract_faithful(p) if faithful else contract(p)
        if len(q.edges) != m:
            continue
        degrees = sorted(q.degree(v) if faithful else len(q.neighbors(v)) for v in q.vertices)
        if degrees != target_degrees:
            continue
        if are_isomorphic(q, h):
            return p
    return None


def exists_contraction(g, h, budget=DEFAULT_PARTITION_BUDGET, faithful=False):
    return find_contraction(g, h, budget, faithful) is not None


# -- minors -----------------------------------------------------------------------------


@dataclass(frozen=True)
class MinorWitness:
    host: Graph
    pattern: Graph
    branch_map: dict
    used_edges: tuple

    def subgraph(self):
        """The subgraph ``K`` of the host that contracts onto the pattern."""
        vs = [v for b in self.branch_map.values() for v in b]
        return Graph(vs, {e: self.host.endpoints[e] for e in self.used_edges},
                     directed=self.host.directed, simple=self.host.simple)

    def partition(self):
        return Partition(self.subgraph(), self.branch_map.values())

    def to_dict(self):
        from .io import to_jsonable
        return {
            "branch_sets": [[to_jsonable(x), to_jsonable(b)] for x, b in self.branch_map.items()],
            "used_edges": [to_jsonable(e) for e in self.used_edges],
        }


def _tree_edges(g, block):
    """Edge ids of a BFS spanning tree of ``g[block]``."""
    block = set(block)
    root = min(block, key=sort_key)
    seen = {root}
    chosen = []
    queue = deque([root])
    by_vertex = {}
    for e in g.edges:
        t, h = g.endpoints[e]
        if t in block and h in block and t != h:
            by_vertex.setdefault(t, []).append((e, h))
            by_vertex.setdefault(h, []).append((e, t))
    while queue:
        x = queue.popleft()
        for e, y in by_vertex.get(x, ()):
            if y not in seen:
                seen.add(y)
                chosen.append(e)
                queue.append(y)
    return chosen


def _build_witness(g, h, branch):
    used = []
    for b in branch.values():
        used.extend(_tree_edges(g, b))
    where = {v: x for x, b in branch.items() for v in b}
    for t, x in h.endpoints.values():
        pair = {t, x}
        for e in g.edges:
            a, b = g.endpoints[e]
            if a in where and b in where and {where[a], where[b]} == pair and where[a] != where[b]:
                used.append(e)
                break
    bm = {x: _block(branch[x]) for x in h.vertices}
    return MinorWitness(g, h, bm, tuple(sorted(set(used), key=sort_key)))


def _pattern_order(h):
    order, seen = [], set()
    for s in sorted(h.vertices, key=lambda v: (-len(h.neighbors(v)), sort_key(v))):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(h.neighbors(x), key=lambda v: (-len(h.neighbors(v)), sort_key(v))):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def find_minor(h, g, host_bound=DEFAULT_MINOR_HOST_BOUND,
               pattern_bound=DEFAULT_MINOR_PATTERN_BOUND):
    """Branch-set search for ``h`` as a minor of ``g``; a :class:`MinorWitness` or None.

    Pattern vertices are placed in BFS order. A pattern vertex with already placed
    neighbours gets a connected set of free host vertices that touches the branch
    set of each of them; the sets are generated from seeds next to the first such
    branch set, each set once. Before descending, every still unplaced neighbour of
    a placed vertex must have a free host vertex available next to its branch set.
    """
    _undirected(g, "minor search")
    _undirected(h, "minor search")
    if len(g.vertices) > host_bound:
        raise ResourceLimitError("minor search (host vertices)", len(g.vertices), host_bound)
    if len(h.vertices) > pattern_bound:
        raise ResourceLimitError("minor search (pattern vertices)", len(h.vertices), pattern_bound)
    if len(h.vertices) > len(g.vertices):
        return None
    h_pairs = {frozenset(p) for p in h.edge_pairs() if p[0] != p[1]}
    if len(h_pairs) > len({frozenset(p) for p in g.edge_pairs() if p[0] != p[1]}):
        return None
    adj = {v: frozenset(u for u in g.neighbors(v) if u != v) for v in g.vertices}
    hadj = {x: frozenset(y for y in h.neighbors(x) if y != x) for x in h.vertices}
    order = _pattern_order(h)
    rank = {x: i for i, x in enumerate(order)}
    gorder = {v: i for i, v in enumerate(g.vertices)}
    branch = {}

    def boundary(b, free):
        return {w for v in b for w in adj[v] if w in free}

    def feasible(free):
        for x in branch:
            nb = None
            for y in hadj[x]:
                if y not in branch:
                    if nb is None:
                        nb = boundary(branch[x], free)
                    if not nb:
                        return False
        return True

    def candidates(x, free):
        placed = sorted((y for y in hadj[x] if y in branch), key=rank.get)
        if not placed:
            for i, s in enumerate(sorted(free, key=gorder.get)):
                allowed = frozenset(v for v in free if gorder[v] >= gorder[s])
                yield from _connected_sets(adj, s, allowed)
            return
        seeds = sorted(boundary(branch[placed[0]], free), key=gorder.get)
        blocked = set()
        for s in seeds:
            allowed = free - blocked
            for b in _connected_sets(adj, s, allowed):
                if all(boundary(branch[y], b) for y in placed[1:]):
                    yield b
            blocked.add(s)

    def rec(i, free):
        if i == len(order):
            return True
        x = order[i]
        room = len(free) - (len(order) - i - 1)
        for b in candidates(x, free):
            if len(b) > room:
                continue
            branch[x] = b
            rest = free - b
            if feasible(rest) and rec(i + 1, rest):
                return True
            del branch[x]
        return False

    if rec(0, frozenset(g.vertices)):
        return _build_witness(g, h, dict(branch))
    return None


def is_minor(h, g, **bounds):
    return find_minor(h, g, **bounds) is not None


def verify_minor_witness(w):
    """Independent re-check: K is a subgraph of the host and contracts exactly onto the pattern."""
    k = w.subgraph()
    if not is_subgraph(k, w.host):
        return False
    blocks = list(w.branch_map.values())
    if len({v for b in blocks for v in b}) != sum(len(b) for b in blocks):
        return False
    try:
        p = Partition(k, blocks)
    except InvalidPartitionError:
        return False
    q = contract(p)
    name = {b: x for x, b in w.branch_map.items()}
    relabelled = q.relabel(name)
    pattern = w.pattern
    return (set(relabelled.vertices) == set(pattern.vertices)
            and {frozenset(e) for e in relabelled.edge_pairs()}
            == {frozenset(e) for e in pattern.edge_pairs()})


# -- topological minors -----------------------------------------------------------------


@dataclass(frozen=True)
class TopologicalEmbedding:
    """A subdivision of ``pattern`` inside ``host``: branch vertices and one path per edge."""

    host: Graph
    pattern: Graph
    branch_vertices: dict
    paths: dict

    def to_dict(self):
        from .io import to_jsonable
        return {
            "branch_vertices": [[to_jsonable(x), to_jsonable(v)] for x, v in self.branch_vertices.items()],
            "paths": [[to_jsonable(e), to_jsonable(p)] for e, p in self.paths.items()],
        }


def _simple_paths(adj, a, b, blocked):
    """Simple a-b paths whose interior avoids ``blocked``; shortest first."""
    out = []
    stack = [(a, (a,))]
    while stack:
        x, path = stack.pop()
        for y in adj[x]:
            if y == b:
                out.append(path + (b,))
            elif y not in blocked and y not in path:
                stack.append((y, path + (y,)))
    out.sort(key=lambda p: (len(p), tuple(sort_key(v) for v in p)))
    return out


def find_topological_minor(h, g, host_bound=DEFAULT_MINOR_HOST_BOUND,
                           pattern_bound=DEFAULT_MINOR_PATTERN_BOUND):
    """Search for a subdivision of ``h`` in ``g``; a :class:`TopologicalEmbedding` or None.

    Branch vertices are assigned injectively (host degree at least pattern degree);
    each pattern edge is routed as soon as both ends are placed, along a path whose
    interior avoids every branch vertex and every other path. Exhaustive.
    """
    _undirected(g, "topological minor search")
    _undirected(h, "topological minor search")
    if len(g.vertices) > host_bound:
        raise ResourceLimitError("topological minor search (host vertices)", len(g.vertices), host_bound)
    if len(h.vertices) > pattern_bound:
        raise ResourceLimitError("topological minor search (pattern vertices)", len(h.vertices), pattern_bound)
    if len(h.vertices) > len(g.vertices) or h.has_loops():
        return None
    adj = {v: sorted((u for u in g.neighbors(v) if u != v), key=sort_key) for v in g.vertices}
    hdeg = {x: len(h.neighbors(x)) for x in h.vertices}
    gdeg = {v: len(adj[v]) for v in g.vertices}
    order = _pattern_order(h)
    h_edges = {}
    for e in h.edges:
        t, x = h.endpoints[e]
        if frozenset((t, x)) not in {frozenset(p) for p in h_edges.values()}:
            h_edges[e] = (t, x)
    place, used, paths = {}, set(), {}

    def route(pending, k, then):
        if k == len(pending):
            return then()
        e, (t, x) = pending[k]
        for p in _simple_paths(adj, place[t], place[x], used):
            interior = p[1:-1]
            paths[e] = p
            used.update(interior)
            if route(pending, k + 1, then):
                return True
            used.difference_update(interior)
            del paths[e]
        return False

    def rec(i):
        if i == len(order):
            return True
        x = order[i]
        for v in g.vertices:
            if v in used or gdeg[v] < hdeg[x]:
                continue
            place[x] = v
            used.add(v)
            pending = [(e, (t, y)) for e, (t, y) in h_edges.items()
                       if x in (t, y) and (t if y == x else y) in place]
            if route(pending, 0, lambda: rec(i + 1)):
                return True
            used.discard(v)
            del place[x]
        return False

    if rec(0):
        return TopologicalEmbedding(g, h, dict(place), dict(paths))
    return None


def is_topological_minor(h, g, **bounds):
    return find_topological_minor(h, g, **bounds) is not None


def verify_topological_embedding(w):
    g, h = w.host, w.pattern
    bv = w.branch_vertices
    if len(set(bv.values())) != len(bv) or set(bv) != set(h.vertices):
        return False
    interiors = []
    for e, (t, x) in h.endpoints.items():
        p = w.paths.get(e)
        if p is None or {p[0], p[-1]} != {bv[t], bv[x]}:
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if len(set(p)) != len(p):
            return False
        interiors.extend(p[1:-1])
    return len(interiors) == len(set(interiors)) and not set(interiors) & set(bv.values())


def is_planar(g):
    """Kuratowski test at desk scale: no subdivision of K_5 or K_{3,3}."""
    from .graph import complete_graph
    from .named import complete_bipartite
    if len(g.vertices) < 5:
        return True
    return not (is_topological_minor(complete_graph(5), g)
                or is_topological_minor(complete_bipartite(3, 3), g))


def max_degree(g):
    return max((len(g.neighbors(v) - {v}) for v in g.vertices), default=0)


# -- audits -------------------------------------------------------------------------------


@dataclass
class MinorAuditReport:
    pool_size: int
    relation: set = field(default_factory=set)
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def to_dict(self):
        return {"pool_size": self.pool_size, "passed": self.passed,
                "checks": self.checks,
                "relation": sorted([list(p) for p in self.relation]),
                "violations": [list(v) for v in self.violations]}


def minor_order_audit(pool):
    """Check the order properties of the minor relation on ``pool``.

    ``relation`` holds index pairs ``(i, j)`` with ``pool[i] <= pool[j]``. Checked:
    reflexivity, subgraph implies minor, contraction implies minor, transitivity on
    every triple whose premises hold, and antisymmetry up to isomorphism.
    """
    n = len(pool)
    rep = MinorAuditReport(n)
    minor = [[is_minor(pool[i], pool[j]) for j in range(n)] for i in range(n)]
    rep.relation = {(i, j) for i in range(n) for j in range(n) if minor[i][j]}
    counts = dict.fromkeys(["reflexivity", "subgraph", "contraction", "transitivity",
                            "antisymmetry"], 0)
    for i in range(n):
        counts["reflexivity"] += 1
        if not minor[i][i]:
            rep.violations.append(("reflexivity", i, i))
    for i, j in product(range(n), repeat=2):
        if find_subgraph_embedding(pool[i], pool[j]) is not None:
            counts["subgraph"] += 1
            if not minor[i][j]:
                rep.violations.append(("subgraph", i, j))
        if len(pool[i].vertices) <= len(pool[j].vertices):
            if exists_contraction(pool[j], pool[i]):
                counts["contraction"] += 1
                if not minor[i][j]:
                    rep.violations.append(("contraction", i, j))
    for i, j, k in product(range(n), repeat=3):
        if minor[i][j] and minor[j][k]:
            counts["transitivity"] += 1
            if not minor[i][k]:
                rep.violations.append(("transitivity", i, j, k))
    for i, j in combinations(range(n), 2):
        if minor[i][j] and minor[j][i]:
            counts["antisymmetry"] += 1
            if not are_isomorphic(pool[i], pool[j]):
                rep.violations.append(("antisymmetry", i, j))
    rep.checks = counts
    return rep


@dataclass
class LowDegreeReport:
    pairs_checked: int
    discrepancies: list
    literal_pairs_checked: int
    literal_discrepancies: list
    agreements: dict

    @property
    def passed(self):
        return not self.discrepancies

    def to_dict(self):
        return {"passed": self.passed, "pairs_checked": self.pairs_checked,
                "discrepancies": [list(d) for d in self.discrepancies],
                "literal_pairs_checked": self.literal_pairs_checked,
                "literal_discrepancies": [list(d) for d in self.literal_discrepancies],
                "agreements": self.agreements}


def minor_equivalence_low_degree(patterns, hosts=None):
    """Compare minor and topological-minor containment on low-degree pairs.

    Main check: every (pattern, host) with pattern max degree <= 3. Also recorded:
    pairs with host max degree <= 3, the condition as literally placed on the host.
    Discrepancies are index pairs ``(pattern_index, host_index)``.
    """
    hosts = patterns if hosts is None else hosts
    disc, lit_disc = [], []
    checked = lit_checked = 0
    agree = {"both": 0, "neither": 0}
    for i, h in enumerate(patterns):
        for j, g in enumerate(hosts):
            low_pattern = max_degree(h) <= 3
            low_host = max_degree(g) <= 3
            if not (low_pattern or low_host):
                continue
            a = is_minor(h, g)
            b = is_topological_minor(h, g)
            if low_pattern:
                checked += 1
                if a != b:
                    disc.append((i, j))
                else:
                    agree["both" if a else "neither"] += 1
            if low_host:
                lit_checked += 1
                if a != b:
                    lit_disc.append((i, j))
    return LowDegreeReport(checked, disc, lit_checked, lit_disc, agree)
