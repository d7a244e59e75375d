"""Command line interface: ``graphcat <verb> ...``.

Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 1 internal error.
Results go to stdout and diagnostics to stderr. Nothing is printed until a result
is complete. Flags ``--format``, ``--budget`` and ``--seed`` default to the
environment variables ``GRAPHCAT_FORMAT``, ``GRAPHCAT_BUDGET`` and ``GRAPHCAT_SEED``.
"""
import argparse
import json
import os
import sys
from pathlib import Path

from . import io
from .catalog import catalog, connected_catalog
from .errors import InvalidInputError, ResourceLimitError
from .graph import induced_by_edges, induced_by_vertices, incidence_matrix, underlying_undirected
from .invariants import INVARIANTS, check_invariance
from .minors import (Partition, contract, contract_faithful, find_contraction,
                     find_minor, find_topological_minor, minor_order_audit, verify_minor_witness)
from .morphisms import (Morphism, automorphism_group, enumerate_morphisms, find_isomorphism,
                        morphism_violation)
from .named import named_graph
from .orders import (antichains_and_chains, classify_relation, divisibility_order, induction_fold,
                     minimal_elements, order_from_dict, order_to_dict)
from .products import (PRODUCTS, coproduct, verify_coproduct_over_pool,
                       verify_product_over_pool)
from .relational import arity, graph_to_relational, relational_from_dict, type_symbol
from .transform import (divisibility_graph, line_graph, matching_transformation_graph,
                        realization_graph, super_line_graph, tree_transformation_graph)

ENV_PREFIX = "GRAPHCAT_"
EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class Output:
    """A finished result in its three renderings (dot and text are optional)."""

    def __init__(self, data, text=None, dot=None):
        self.data = data
        self.text = text
        self.dot = dot

    def render(self, fmt):
        if fmt == "json":
            return io.dumps(self.data)
        if fmt == "dot":
            if self.dot is None:
                raise InvalidInputError("this result has no DOT form; use --format json or text")
            return self.dot
        return self.text if self.text is not None else io.dumps(self.data)


# -- input helpers ----------------------------------------------------------------------


def load_graph_arg(spec):
    """A graph from a file path (JSON or edge list) or a built-in name like ``petersen``."""
    if spec is None:
        raise InvalidInputError("a graph input is required")
    path = Path(spec)
    if path.is_file():
        try:
            return io.load_graph(path)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InvalidInputError(f"cannot read graph from {spec}: {exc}") from None
    return named_graph(spec)


def _load_json_arg(spec):
    """Inline JSON text or a path to a JSON file."""
    path = Path(spec)
    try:
        text = path.read_text() if path.is_file() else spec
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"bad JSON in {spec!r}: {exc}") from None


def _pool(spec):
    """``nK`` means every isomorphism class of order 1..K; ``cK`` only the connected ones."""
    spec = spec.strip().lower()
    if len(spec) > 1 and spec[0] in "nc" and spec[1:].isdigit():
        k = int(spec[1:])
        return catalog(k) if spec[0] == "n" else connected_catalog(k)
    return [load_graph_arg(s) for s in spec.split(",")]


def _ints(spec):
    """``2..12`` or ``2,3,5``."""
    try:
        if ".." in spec:
            lo, hi = spec.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise InvalidInputError(f"cannot parse integer list {spec!r}") from None


def _ids(spec, ids):
    """Comma separated ids, matched against ``ids`` by their string form."""
    lookup = {str(io.to_jsonable(x)): x for x in ids}
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if tok not in lookup:
            raise InvalidInputError(f"unknown id {tok!r}")
        out.append(lookup[tok])
    return out


def _graph_output(g, name="G", labels=None):
    return Output(io.graph_to_dict(g), text=io.dumps_edgelist(g),
                  dot=io.to_dot(g, name=name, labels=labels))


def _pairs_text(f):
    return ", ".join(f"{k}->{v}" for k, v in f.items())


def _map_json(f):
    return {str(io.to_jsonable(k)) if not isinstance(k, (int, str)) else k: io.to_jsonable(v)
            for k, v in f.items()}


def _parse_map(data, g, h):
    if isinstance(data, dict) and "map" in data:
        data = data["map"]
    if not isinstance(data, dict):
        raise InvalidInputError("a vertex map must be a JSON object")
    src = {str(io.to_jsonable(v)): v for v in g.vertices}
    src.update({json.dumps(io.to_jsonable(v)): v for v in g.vertices})
    dst = {json.dumps(io.to_jsonable(v)): v for v in h.vertices}
    f = {}
    for k, v in data.items():
        if k not in src:
            raise InvalidInputError(f"map key {k!r} is not a source vertex")
        key = json.dumps(v)
        if key not in dst:
            raise InvalidInputError(f"map value {v!r} is not a target vertex")
        f[src[k]] = dst[key]
    return f


# -- handlers ---------------------------------------------------------------------------


def cmd_named(a):
    return _graph_output(named_graph(a.name), name=a.name)


def cmd_catalog(a):
    gs = connected_catalog(a.n) if a.connected else catalog(a.n)
    text = "".join(f"{len(g.vertices)} {len(g.edges)} "
                   + " ".join(f"{u}-{v}" for u, v in g.edge_pairs()) + "\n" for g in gs)
    dot = "".join(io.to_dot(g, name=f"G{i}") for i, g in enumerate(gs))
    return Output([io.graph_to_dict(g) for g in gs], text=text, dot=dot)


def cmd_incidence(a):
    m = incidence_matrix(load_graph_arg(a.input))
    rows = m.to_list()
    text = "".join(" ".join(f"{x:2d}" for x in row) + "\n" for row in rows)
    return Output({"rows": io.to_jsonable(m.rows), "cols": io.to_jsonable(m.cols),
                   "entries": rows}, text=text)


def cmd_induced(a):
    g = load_graph_arg(a.input)
    if (a.vertices is None) == (a.edges is None):
        raise InvalidInputError("give exactly one of --vertices or --edges")
    if a.vertices is not None:
        return _graph_output(induced_by_vertices(g, _ids(a.vertices, g.vertices)))
    return _graph_output(induced_by_edges(g, _ids(a.edges, g.edges)))


def cmd_underlying(a):
    g = load_graph_arg(a.input)
    return _graph_output(underlying_undirected(g, simple=False if a.multi else None))


def cmd_relsys(a):
    path = Path(a.input)
    data = _load_json_arg(a.input) if path.is_file() and path.suffix == ".json" else None
    if isinstance(data, dict) and "carrier" in data:
        rs = relational_from_dict(data)
    else:
        rs = graph_to_relational(load_graph_arg(a.input))
    ts = type_symbol(rs)
    ar = arity(rs)
    text = f"type symbol {ts}\narity {ar}\n"
    return Output({"type_symbol": [list(p) for p in ts], "arity": ar,
                   "carrier_size": len(rs.carrier), "relations": len(rs.relations)}, text=text)


def cmd_morphism(a):
    g, h = load_graph_arg(a.source), load_graph_arg(a.target)
    if a.action == "check":
        if a.map is None:
            raise InvalidInputError("morphism check needs --map")
        f = _parse_map(_load_json_arg(a.map), g, h)
        bad = morphism_violation(f, g, h, a.kind)
        data = {"kind": a.kind, "valid": bad is None,
                "violation": None if bad is None else
                {"reason": bad.reason, "pair": io.to_jsonable(bad.pair)}}
        text = "valid\n" if bad is None else f"invalid: {bad.reason} {bad.pair!r}\n"
        return Output(data, text=text)
    maps = []
    for f in enumerate_morphisms(g, h, a.kind, budget=a.budget):
        maps.append(f)
        if a.limit and len(maps) >= a.limit:
            break
    text = f"{len(maps)} morphisms\n" + "".join(_pairs_text(f) + "\n" for f in maps)
    return Output({"kind": a.kind, "count": len(maps),
                   "morphisms": [{"map": _map_json(f), "kind": a.kind} for f in maps]}, text=text)


def cmd_aut(a):
    group = automorphism_group(load_graph_arg(a.input), bound=a.bound)
    text = f"|Aut| = {len(group)}\n" + "".join(_pairs_text(f) + "\n" for f in group)
    return Output({"order": len(group), "automorphisms": [_map_json(f) for f in group]},
                  text=text)


def cmd_iso(a):
    g, h = load_graph_arg(a.g), load_graph_arg(a.h)
    f = find_isomorphism(g, h)
    if f is None:
        return Output({"isomorphic": False, "map": None}, text="not isomorphic\n")
    m = Morphism(g, h, f, "iso")
    return Output({"isomorphic": True, "map": m.to_dict()["map"]},
                  text="isomorphic: " + _pairs_text(f) + "\n")


def cmd_invariant(a):
    g = load_graph_arg(a.input)
    names = sorted(INVARIANTS) if a.name == "all" else [a.name]
    reports = [check_invariance(n, g, trials=a.trials, seed=a.seed, exhaustive=a.exhaustive)
               for n in names]
    text = "".join(f"{r.invariant_name}: {r.value} ({'invariant' if r.passed else 'CHANGED'}"
                   f" over {r.witness_checked} relabelings)\n" for r in reports)
    return Output([r.to_dict() for r in reports], text=text)


def cmd_product(a):
    if a.action == "build":
        g1, g2 = load_graph_arg(a.g1), load_graph_arg(a.g2)
        if a.kind == "coproduct":
            return _graph_output(coproduct(g1, g2)[0], name="coproduct")
        w = PRODUCTS[a.kind](g1, g2)
        return _graph_output(w.object, name=a.kind)
    pool = _pool(a.pool)
    if a.kind == "coproduct":
        res = verify_coproduct_over_pool(a.category, pool, budget=a.budget)
    else:
        res = verify_product_over_pool(a.kind, a.category, pool, budget=a.budget)
    return _check_output(res, f"{a.kind} in {a.category}")


def cmd_coproduct(a):
    res = verify_coproduct_over_pool(a.category, _pool(a.pool), budget=a.budget)
    return _check_output(res, f"coproduct in {a.category}")


def _check_output(res, label):
    d = res.to_dict()
    if res.passed:
        text = f"PASS {label}: {res.tested_objects} test objects, {res.tested_pairs} pairs\n"
    else:
        text = f"FAIL {label}: {res.counterexample['reason']}\n"
    return Output(d, text=text)


def cmd_contract(a):
    g = load_graph_arg(a.input)
    data = _load_json_arg(a.blocks)
    blocks = data["blocks"] if isinstance(data, dict) else data
    p = Partition(g, [[io.from_jsonable(v) for v in b] for b in blocks])
    q = contract_faithful(p) if a.faithful else contract(p)
    return _graph_output(q, name="contraction")


def cmd_contraction_exists(a):
    g, h = load_graph_arg(a.host), load_graph_arg(a.pattern)
    p = find_contraction(g, h, budget=a.budget, faithful=a.faithful)
    data = {"exists": p is not None, "faithful": a.faithful,
            "partition": None if p is None else p.to_dict()}
    text = "false\n" if p is None else "true " + " | ".join(map(str, p.blocks)) + "\n"
    return Output(data, text=text)


def cmd_minor(a):
    h, g = load_graph_arg(a.pattern), load_graph_arg(a.host)
    w = find_minor(h, g, host_bound=a.host_bound)
    if w is None:
        return Output({"minor": False, "witness": None}, text="false\n")
    verify_minor_witness(w)
    text = "true\n" + "".join(f"{x}: {b}\n" for x, b in w.branch_map.items())
    return Output({"minor": True, "witness": w.to_dict()}, text=text)


def cmd_topo_minor(a):
    h, g = load_graph_arg(a.pattern), load_graph_arg(a.host)
    w = find_topological_minor(h, g, host_bound=a.host_bound)
    if w is None:
        return Output({"topological_minor": False, "embedding": None}, text="false\n")
    return Output({"topological_minor": True, "embedding": w.to_dict()},
                  text="true\n" + "".join(f"{k}: {p}\n" for k, p in w.paths.items()))


def cmd_minor_audit(a):
    rep = minor_order_audit(_pool(a.pool))
    text = ("PASS" if rep.passed else "FAIL") + f" minor order over {rep.pool_size} graphs\n"
    text += "".join(f"  {k}: {v} applicable\n" for k, v in rep.checks.items())
    text += "".join(f"  violation {v}\n" for v in rep.violations)
    return Output(rep.to_dict(), text=text)


def _load_order(a):
    if a.divisors:
        return divisibility_order(_ints(a.divisors))
    if a.input is None:
        raise InvalidInputError("order commands need --input or --divisors")
    return order_from_dict(_load_json_arg(a.input))


def cmd_order(a):
    r = _load_order(a)
    if a.action == "classify":
        c = classify_relation(r)
        text = f"{c.kind}\n" + "".join(f"  {k}: {v}\n" for k, v in c.axioms.items())
        text += f"  well-founded: {c.well_founded}\n"
        if c.cycle:
            text += "  strict cycle: " + " < ".join(map(str, c.cycle + c.cycle[:1])) + "\n"
        return Output(c.to_dict(), text=text)
    if a.action == "minimal":
        found = minimal_elements(r)
        mins = [x for x in r.elements() if x in found]
        return Output({"minimal": io.to_jsonable(mins)}, text=" ".join(map(str, mins)) + "\n")
    if a.action == "fold":
        order = []

        def height(x, below):
            order.append(x)
            return 1 + max(below.values(), default=-1)

        res = induction_fold(r, height)
        data = {"order": io.to_jsonable(order),
                "height": [[io.to_jsonable(x), res[x]] for x in order]}
        return Output(data, text="".join(f"{x}: {res[x]}\n" for x in order))
    if a.action == "dump":
        return Output(order_to_dict(r))
    rep = antichains_and_chains(r, bound=a.bound)
    text = (f"max antichain {rep.max_antichain_size}: {list(rep.max_antichain)}\n"
            f"longest chain {rep.longest_chain_length}: {list(rep.longest_chain)}\n")
    return Output(rep.to_dict(), text=text)


def cmd_transform(a):
    if a.kind == "divisor":
        if not a.ints:
            raise InvalidInputError("transform divisor needs --ints")
        tg = divisibility_graph(_ints(a.ints))
    elif a.kind == "realization":
        if not a.degrees:
            raise InvalidInputError("transform realization needs --degrees")
        tg = realization_graph(_ints(a.degrees), budget=a.budget)
    else:
        g = load_graph_arg(a.input)
        if a.kind == "line":
            return _graph_output(line_graph(g), name="line")
        if a.kind == "tree":
            tg = tree_transformation_graph(g, budget=a.budget)
        elif a.kind == "matching":
            tg = matching_transformation_graph(g, budget=a.budget)
        else:
            pattern = load_graph_arg(a.pattern) if a.pattern else None
            tg = super_line_graph(g, a.r, pattern, mode=a.mode,
                                  allow_overlap=not a.disjoint, budget=a.budget)
    text = (f"{tg.kind}: {len(tg.graph.vertices)} objects, {len(tg.graph.edges)} moves\n"
            + "".join(f"  {v}: {tg.describe(v)}\n" for v in tg.graph.vertices)
            + "".join(f"  {u} -- {v}\n" for u, v in tg.graph.edge_pairs()))
    return Output(tg.to_dict(), text=text, dot=tg.to_dot())


# -- parser -----------------------------------------------------------------------------


def _env(name, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _positive(s):
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
    if n <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return n


def build_parser():
    def options(defaults):
        common = argparse.ArgumentParser(add_help=False)
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        common.add_argument("--format", choices=["json", "dot", "text"],
                            default=d(_env("FORMAT", "json")))
        common.add_argument("--budget", type=_positive, default=d(_env("BUDGET", "1000000")))
        common.add_argument("--seed", type=int, default=d(_env("SEED", "0")))
        return common

    # flags may come before or after the verb; the verb-level copy must not reset them
    common = options(False)
    p = argparse.ArgumentParser(prog="graphcat", parents=[options(True)],
                                description="Finite graphs, their categories, minors, orders "
                                            "and transformation graphs.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("named", cmd_named, "emit a built-in graph")
    sp.add_argument("name")

    sp = add("catalog", cmd_catalog, "isomorphism-class representatives up to order n")
    sp.add_argument("n", type=int)
    sp.add_argument("--connected", action="store_true")

    add("incidence", cmd_incidence, "incidence matrix").add_argument("--input", required=True)

    sp = add("induced", cmd_induced, "subgraph induced by vertices or edges")
    sp.add_argument("--input", required=True)
    sp.add_argument("--vertices")
    sp.add_argument("--edges")

    sp = add("underlying", cmd_underlying, "underlying undirected graph")
    sp.add_argument("--input", required=True)
    sp.add_argument("--multi", action="store_true", help="keep loops and parallel edges")

    add("relsys", cmd_relsys, "type symbol and arity").add_argument("--input", required=True)

    sp = add("morphism", cmd_morphism, "check or enumerate morphisms")
    sp.add_argument("action", choices=["check", "enumerate"])
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--kind", default="hom",
                    choices=["hom", "ega", "co", "iso", "contraction", "set"])
    sp.add_argument("--map", help="JSON object or file")
    sp.add_argument("--limit", type=int, default=0)

    sp = add("aut", cmd_aut, "automorphism group")
    sp.add_argument("--input", required=True)
    sp.add_argument("--bound", type=int, default=10)

    sp = add("iso", cmd_iso, "isomorphism test")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)

    sp = add("invariant", cmd_invariant, "evaluate and check an invariant under relabeling")
    sp.add_argument("--input", required=True)
    sp.add_argument("--name", default="all", choices=["all"] + sorted(INVARIANTS))
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--exhaustive", action="store_true")

    sp = add("product", cmd_product, "build a product or verify its universal property")
    sp.add_argument("action", choices=["build", "verify"])
    sp.add_argument("--kind", required=True, choices=sorted(PRODUCTS) + ["coproduct"])
    sp.add_argument("--category", default="gra", choices=["gra", "egra", "cgra", "set"])
    sp.add_argument("--pool", default="n3")
    sp.add_argument("--g1")
    sp.add_argument("--g2")

    sp = add("coproduct", cmd_coproduct, "verify the disjoint-union coproduct")
    sp.add_argument("action", choices=["verify"])
    sp.add_argument("--category", default="gra", choices=["gra", "egra", "cgra", "set"])
    sp.add_argument("--pool", default="n3")

    sp = add("contract", cmd_contract, "contract a connected partition")
    sp.add_argument("--input", required=True)
    sp.add_argument("--blocks", required=True, help='JSON {"blocks": [[...], ...]} or file')
    sp.add_argument("--faithful", action="store_true")

    sp = add("contraction-exists", cmd_contraction_exists, "does host contract onto pattern")
    sp.add_argument("--host", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--faithful", action="store_true")

    for name, func in (("minor", cmd_minor), ("topo-minor", cmd_topo_minor)):
        sp = add(name, func, f"{name} containment with witness")
        sp.add_argument("--pattern", required=True)
        sp.add_argument("--host", required=True)
        sp.add_argument("--host-bound", type=int, default=12)

    add("minor-audit", cmd_minor_audit, "order axioms of the minor relation on a pool") \
        .add_argument("--pool", default="n4")

    sp = add("order", cmd_order, "finite order relations")
    sp.add_argument("action", choices=["classify", "minimal", "fold", "antichain", "dump"])
    sp.add_argument("--input", help="order JSON (one binary relation)")
    sp.add_argument("--divisors", help="divisibility order on e.g. 2..12")
    sp.add_argument("--bound", type=int, default=40)

    sp = add("transform", cmd_transform, "transformation graphs")
    sp.add_argument("kind", choices=["divisor", "tree", "matching", "realization",
                                     "superline", "line"])
    sp.add_argument("--input")
    sp.add_argument("--ints", help="e.g. 1..12")
    sp.add_argument("--degrees", help="e.g. 2,2,2,2")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--pattern")
    sp.add_argument("--mode", choices=["cross", "literal"], default="cross")
    sp.add_argument("--disjoint", action="store_true")
    return p


def run(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        text = args.func(args).render(args.format)
    except ResourceLimitError as exc:
        print(f"graphcat: resource limit: {exc}", file=stderr)
        return EXIT_BUDGET
    except InvalidInputError as exc:
        print(f"graphcat: invalid input: {exc}", file=stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"graphcat: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
