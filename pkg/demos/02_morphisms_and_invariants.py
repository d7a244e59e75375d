# Morphisms between small graphs, automorphisms and relabelling invariants.

from graphcat import (Morphism, automorphism_group, check_invariance, complete_graph,
                      cycle_graph, enumerate_morphisms, find_isomorphism, morphism_violation,
                      petersen_graph, adjacency_determinant, degree_sequence)

c5, k3 = cycle_graph(5), complete_graph(3)

# Homomorphisms C5 -> K3 are the proper 3-colourings of C5: 30 of them.

homs = enumerate_morphisms(c5, k3, "hom")
print(len(homs), "homomorphisms C5 -> K3")

# An egamorphism may also collapse an edge onto a single vertex.

collapse = {v: 0 for v in c5.vertices}
print("collapse is hom?", morphism_violation(collapse, c5, k3, "hom"))
print("collapse is ega?", morphism_violation(collapse, c5, k3, "ega"))

f = Morphism(c5, k3, homs[0], "hom")
print(f.to_dict())

# The Petersen graph has 120 automorphisms.

pete = petersen_graph()
print("|Aut(Petersen)| =", len(automorphism_group(pete)))
print(find_isomorphism(pete, pete.relabel({v: (v * 3) % 10 for v in pete.vertices})) is not None)

# Invariants survive relabelling.

print(degree_sequence(pete), adjacency_determinant(pete))
for name in ("degree_sequence", "automorphism_order", "adjacency_determinant"):
    print(check_invariance(name, cycle_graph(6), trials=50).to_dict())
