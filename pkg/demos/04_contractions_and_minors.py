# Contractions, minors, topological minors and planarity.

from graphcat import (Partition, complete_bipartite, complete_graph, contract, contract_faithful,
                      cycle_graph, exists_contraction, find_contraction, find_minor,
                      find_topological_minor, is_minor, is_planar, is_topological_minor,
                      minor_order_audit, catalog, petersen_graph, star_graph)

c4 = cycle_graph(4)
p = Partition(c4, [[0, 1], [2], [3]])
print(contract(p).edge_pairs())

# The faithful quotient keeps one edge per crossing edge.

q = contract_faithful(Partition(c4, [[0, 1], [2, 3]]))
print(q.size, "parallel edges between the two blocks")

pete, k33 = petersen_graph(), complete_bipartite(3, 3)

w = find_minor(k33, pete)
print("K33 minor of Petersen, branch sets:", w.to_dict()["branch_sets"])
print("K33 topological minor:", find_topological_minor(k33, pete) is not None)
print("K5 minor:", is_minor(complete_graph(5), pete),
      "K5 topological minor:", is_topological_minor(complete_graph(5), pete))

# With one edge per adjacent block pair, Petersen does contract onto K33.
# Counting parallels it does not.

print("simple quotient:", find_contraction(pete, k33).blocks)
print("faithful quotient:", exists_contraction(pete, k33, faithful=True))

# K_{1,4} separates the two containment relations on a cubic host.

print(is_minor(star_graph(4), pete), is_topological_minor(star_graph(4), pete))
print("planar:", is_planar(pete), is_planar(cycle_graph(7)))

rep = minor_order_audit(catalog(4))
print(rep.passed, rep.checks)
