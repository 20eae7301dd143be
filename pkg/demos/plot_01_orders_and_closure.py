"""
Ordered graphs and the magical closure
======================================

A double-ordered graph carries two vertex orders.  The closure adds every
edge the magical rule forces; the result is the smallest magical supergraph.
"""

from xmono import OrderedGraph, is_magical, is_semi_comparability, magical_closure
from xmono.oracle import closure_oracle, witness_search

###############################################################################
# A path 1-2-3-4 with both orders equal to the identity is not magical:
# every middle vertex comes after its left neighbour in o2.

ident = (1, 2, 3, 4)
g = OrderedGraph(4, [(1, 2), (2, 3), (3, 4)], [ident, ident])
print("magical:", bool(is_magical(g)), is_magical(g).violations)

###############################################################################
# The closure joins every pair linked by a mountain path, here every pair.

closed = magical_closure(g)
print("closure edges:", sorted(closed.edges))
print("agrees with path enumeration:", closed == closure_oracle(g))
print("closure is magical:", bool(is_magical(closed)))

###############################################################################
# With one order only, we can ask whether some second order makes the
# graph magical.  The 8-vertex graph below is semi-comparability but has
# no such order, which the witness search certifies by covering all 8!.

edges = [(1, 2), (2, 3), (3, 4), (4, 7), (7, 8), (2, 5), (5, 6), (6, 7),
         (2, 7), (1, 5), (5, 7), (2, 4), (4, 8), (1, 7), (2, 8)]
h = OrderedGraph(8, edges)
found = witness_search(h)
print("semi-comparability:", bool(is_semi_comparability(h)))
print("witness:", found.order, "orders covered:", found.orders_covered)
