# Finite orders: classification, minimal elements, induction folds, antichains.

from graphcat import (NotWellFoundedError, OrderRelation, antichains_and_chains,
                      classify_relation, divisibility_order, induction_fold, minimal_elements)

div = divisibility_order(range(2, 13))
print(classify_relation(div).kind)
print("minimal:", sorted(minimal_elements(div)))

# The fold visits each element after everything strictly below it. Here it
# computes heights in the divisibility order.


def height(x, below):
    return 1 + max(below.values(), default=0)


print(induction_fold(div, height))

rep = antichains_and_chains(div)
print("largest antichain", rep.max_antichain, "longest chain", rep.longest_chain)

# A strict cycle makes the fold refuse, naming the cycle.

cyc = OrderRelation("abc", [("a", "b"), ("b", "c"), ("c", "a")])
try:
    induction_fold(cyc, height)
except NotWellFoundedError as exc:
    print(exc)
