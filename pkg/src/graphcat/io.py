"""JSON, edge-list and DOT serialisation.

JSON output is canonical (sorted ids, fixed key order, two-space indent, trailing
newline), so ``dumps(loads(dumps(x))) == dumps(x)`` holds byte for byte. Tuple ids are
written as JSON arrays and read back as tuples. DOT is export-only.
"""
import json

from .errors import InvalidInputError
from .graph import Graph, sort_key

__all__ = [
    "graph_to_dict", "graph_from_dict", "dumps_graph", "loads_graph", "save_graph",
    "load_graph", "dumps_edgelist", "loads_edgelist", "to_dot", "dumps", "from_jsonable",
    "to_jsonable",
]


def to_jsonable(x):
    if isinstance(x, (tuple, list)):
        return [to_jsonable(y) for y in x]
    if isinstance(x, (frozenset, set)):
        return [to_jsonable(y) for y in sorted(x, key=sort_key)]
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    return x


def from_jsonable(x):
    """Inverse of :func:`to_jsonable` for ids: arrays become tuples."""
    if isinstance(x, list):
        return tuple(from_jsonable(y) for y in x)
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return x
    raise InvalidInputError(f"invalid id in JSON: {x!r}")


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def graph_to_dict(g):
    return {
        "directed": g.directed,
        "simple": g.simple,
        "vertices": [to_jsonable(v) for v in g.vertices],
        "edges": [{"id": to_jsonable(e), "tail": to_jsonable(t), "head": to_jsonable(h)}
                  for e, (t, h) in g.endpoints.items()],
    }


def graph_from_dict(data):
    try:
        vertices = [from_jsonable(v) for v in data["vertices"]]
        edges = {}
        for item in data["edges"]:
            eid = from_jsonable(item["id"])
            if eid in edges:
                raise InvalidInputError(f"duplicate edge id {eid!r}")
            edges[eid] = (from_jsonable(item["tail"]), from_jsonable(item["head"]))
        return Graph(vertices, edges, directed=bool(data.get("directed", False)),
                     simple=bool(data.get("simple", True)))
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"malformed graph JSON: {exc}") from exc


def dumps_graph(g):
    return dumps(graph_to_dict(g))


def loads_graph(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)


def save_graph(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g))


def load_graph(path):
    path = str(path)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith((".txt", ".edges", ".edgelist")):
        return loads_edgelist(text)
    return loads_graph(text)


def _token(s):
    try:
        return int(s)
    except ValueError:
        return s


def dumps_edgelist(g):
    """One ``tail head`` line per edge in edge-id order; isolated vertices on their own line.

    Edge ids are not recorded: loading renumbers edges ``0, 1, ...``.
    """
    lines = []
    if g.directed:
        lines.append("# directed")
    touched = {x for pair in g.endpoints.values() for x in pair}
    for v in g.vertices:
        if v not in touched:
            lines.append(str(v))
    for t, h in g.endpoints.values():
        lines.append(f"{t} {h}")
    return "\n".join(lines) + "\n"


def loads_edgelist(text, directed=None, simple=None):
    """Parse the edge-list format. ``# directed`` as a comment line sets the flag."""
    vertices = []
    pairs = []
    is_directed = False
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            if line[1:].strip().lower() == "directed":
                is_directed = True
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.append(_token(parts[0]))
        elif len(parts) == 2:
            t, h = map(_token, parts)
            pairs.append((t, h))
            vertices.extend((t, h))
        else:
            raise InvalidInputError(f"bad edge-list line: {raw!r}")
    if directed is None:
        directed = is_directed
    if simple is None:
        probe = Graph(vertices, pairs, directed=directed, simple=False)
        simple = not probe.has_loops() and all(
            probe.multiplicity(t, h) == 1 for t, h in probe.endpoints.values())
    return Graph(vertices, pairs, directed=directed, simple=simple)


def _dot_id(x):
    return json.dumps(str(x) if not isinstance(x, (int, str)) else str(x))


def to_dot(g, name="G", labels=None):
    """DOT text for ``g``; ``labels`` optionally maps vertex ids to display strings."""
    arrow = "->" if g.directed else "--"
    out = [f"{'digraph' if g.directed else 'graph'} {name} {{"]
    for v in g.vertices:
        if labels and v in labels:
            out.append(f"  {_dot_id(v)} [label={json.dumps(str(labels[v]))}];")
        else:
            out.append(f"  {_dot_id(v)};")
    for t, h in g.endpoints.values():
        out.append(f"  {_dot_id(t)} {arrow} {_dot_id(h)};")
    out.append("}")
    return "\n".join(out) + "\n"
