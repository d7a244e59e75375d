# Graphs whose vertices are trees, matchings, realizations or integers.

from graphcat import (complete_graph, cycle_graph, divisibility_graph, hypercube_graph,
                      line_graph, matching_transformation_graph, realization_graph,
                      super_line_graph, tree_transformation_graph, vertex_connectivity,
                      are_isomorphic, path_graph)

print(divisibility_graph(range(2, 13)).graph.edge_pairs())

# Spanning trees of K4, adjacent when one edge exchange apart.

tg = tree_transformation_graph(complete_graph(4))
print(len(tg.objects), "spanning trees,", tg.graph.size, "exchanges")

# Perfect matchings of the cube: 9 of them, and the graph is 2-connected.

mg = matching_transformation_graph(hypercube_graph(3))
print(len(mg.objects), "matchings, connectivity", vertex_connectivity(mg.graph))

# Realizations of (2,2,2,2,2,2): the hexagon and two triangles, one 2-switch apart.

rg = realization_graph([2, 2, 2, 2, 2, 2])
print([rg.describe(v) for v in rg.graph.vertices], rg.graph.size)

# The 1-subset super line graph with pattern K_{1,2} is the line graph.

for g in (path_graph(4), cycle_graph(5), complete_graph(4)):
    print(are_isomorphic(super_line_graph(g, 1).graph, line_graph(g)))

print(super_line_graph(cycle_graph(4), 2, mode="literal").graph)
print(tg.to_dot()[:120])
