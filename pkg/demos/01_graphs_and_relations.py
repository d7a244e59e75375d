# Graphs as maps from an edge set into V x V, and their relational systems.

from graphcat import (Graph, graph_to_relational, incidence_matrix, induced_by_edges, induced_by_vertices,
                      relational_to_graph, type_symbol, arity, underlying_undirected)

# A directed multigraph: two parallel arcs 0 -> 1 and a loop at 2.

g = Graph([0, 1, 2], {"a": (0, 1), "b": (0, 1), "c": (1, 2), "d": (2, 2)}, directed=True, simple=False)
print(g, "simple:", g.simple, "loops:", g.has_loops())
print("multiplicity of 0 -> 1:", g.multiplicity(0, 1))

# Incidence matrix rows are vertices, columns edges. Loops have no column, so
# take the loop-free part first.

m = incidence_matrix(induced_by_edges(g, ["a", "b", "c"]))
print(m.rows, m.cols)
for row in m.to_list():
    print(row)

# Forgetting direction keeps parallels and loops unless a simple result is asked for.

print(underlying_undirected(g, simple=False))
print(induced_by_vertices(g, [0, 1]).edge_pairs())

# The same data seen as a relational system with one binary relation.

rs = graph_to_relational(Graph(range(4), [(0, 1), (1, 2), (2, 3)]))
print("type symbol:", type_symbol(rs), "arity:", arity(rs))
print(relational_to_graph(rs).edge_pairs())
