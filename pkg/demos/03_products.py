# Four graph products and exhaustive universal-property checks.

from graphcat import (catalog, complete_graph, cross_product, cartesian_product,
                      strong_product, disjunction, verify_product_over_pool,
                      verify_coproduct_over_pool)

k2, k3 = complete_graph(2), complete_graph(3)
for build in (cross_product, cartesian_product, strong_product, disjunction):
    w = build(k2, k3)
    print(build.__name__, w.object)

# Each product is checked against every pair of test morphisms from a pool of
# small graphs. The cross product is the product for homomorphisms, the strong
# product for egamorphisms and the disjunction for comorphisms.

pool = catalog(3)
for kind, category in [("cross", "gra"), ("strong", "egra"), ("disjunction", "cgra"),
                       ("cartesian", "gra")]:
    res = verify_product_over_pool(kind, category, pool)
    print(kind, category, "passed" if res.passed else res.counterexample["reason"])

# Disjoint union is the coproduct for homomorphisms but not for comorphisms.

for category in ("gra", "set", "cgra"):
    print("coproduct in", category, verify_coproduct_over_pool(category, pool).passed)
