"""
Composition over product groups
===============================

Label each piece in a small group, then glue with an extra cyclic coordinate.
"""

from edgeirreg import abelian, graphs
from edgeirreg.constructors import (
    compose_four_set,
    four_set_sublabeling,
    label_components,
    smallest_odd_prime_at_least,
)
from edgeirreg.labeling import is_edge_irregular

# three components: the extra coordinate is Z_p, p the least odd prime >= 3
g = graphs.disjoint_union([graphs.complete(3), graphs.cycle(4), graphs.path(3)])
p = smallest_odd_prime_at_least(len(g.components))
L = label_components(g, abelian.cyclic(4), p)
print(g, "over", L.group, "irregular:", is_edge_irregular(g, L)[0])

# four-set partition: two triangles on the V12 and V22 sides, glued over Z3 x Z5
g = graphs.disjoint_union([graphs.complete(3), graphs.complete(3)])
part = graphs.FourSetPartition(("12",) * 3 + ("22",) * 3)
sub = four_set_sublabeling(g, part, abelian.cyclic(5))
L = compose_four_set(g, part, abelian.cyclic(5), sub)
print(g, "over", L.group, "irregular:", is_edge_irregular(g, L)[0])
