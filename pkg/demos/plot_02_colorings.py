"""
Colourings with certified bounds
================================

Each colouring returns colour tuples and the bound it guarantees in terms
of the clique number.
"""

import numpy as np

from xmono import color_double_magical, color_semi_comparability, color_xmonotone
from xmono.generators import random_double_magical_graph, random_magical_graph, random_polyline_family
from xmono.oracle import chromatic_number, clique_number
from xmono.realization import disjointness_graph

rng = np.random.default_rng(1)

###############################################################################
# Magical graphs are semi-comparability graphs, so the first algorithm
# applies.  We compare against the exact chromatic number.

g = random_magical_graph(rng, 12, 0.3)
c = color_semi_comparability(g)
print(f"semi: omega={clique_number(g)} chi={chromatic_number(g)} "
      f"used={c.palette_size} bound={c.bound} proper={c.is_proper(g)}")

###############################################################################
# Double-magical graphs get four-part colours from four partial orders.

g = random_double_magical_graph(rng, 12, 0.3)
c = color_double_magical(g)
print(f"double: omega={clique_number(g)} used={c.palette_size} bound={c.bound}")
print("a few colours:", dict(list(sorted(c.colors.items()))[:4]))

###############################################################################
# Arbitrary x-monotone polylines: classes by two "below" orders, then the
# semi-comparability colouring inside each class.

fam = random_polyline_family(rng, 25)
d = disjointness_graph(fam, attach_orders=False)
c = color_xmonotone(fam)
print(f"x-monotone: omega={clique_number(d)} used={c.palette_size} bound={c.bound} "
      f"proper={c.is_proper(d)}")
