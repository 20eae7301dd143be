"""
Randomized constructions at desk scale
======================================

Clusters of points, random cross-cluster edges, closure, and deletion of
hole-triangles.  The report lists every post-condition.
"""

from fractions import Fraction

from xmono.construction import construct, paper_params

###############################################################################
# Grounded variant, two orders.

g, report = construct(k=2, n_per_group=10, p=Fraction(3, 10), seed=7, variant="grounded")
print(report.to_text())

###############################################################################
# Vertical variant, three orders and double-magical output.

g, report = construct(k=3, n_per_group=5, p=Fraction(1, 5), seed=7, variant="vertical")
print(report.to_text())

###############################################################################
# The parameters under which the extremal chromatic number is guaranteed
# are far out of reach; they are only reported.

pp = paper_params(2, "grounded")
print("lambda:", pp.lam, " log k upper bound:", pp.log_k)
print("digits in n:", len(str(int(pp.n))), " exact:", pp.exact)
