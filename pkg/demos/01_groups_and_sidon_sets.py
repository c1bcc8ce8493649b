"""
Finite Abelian groups and Sidon sets
====================================

Groups are direct sums of cyclic groups.  Elements are residue tuples.
"""

from edgeirreg import abelian
from edgeirreg.solvers import max_sidon, smallest_cyclic_sidon_order

# build Z4 + Z2 and do some arithmetic
G = abelian.parse_group("Z4xZ2")
a, b = G(3, 1), G(2, 1)
print(G, "order", G.order, "invariant factors", G.invariant_factors)
print(a, "+", b, "=", a + b, "  3*a =", 3 * a, "  -a =", -a)

# all groups of order 12, up to isomorphism
print("order 12:", [str(H) for H in abelian.enumerate_groups(12)])

# Z2 + Z3 is cyclic, Z2 + Z2 is not
print(abelian.parse_group("Z2xZ3").is_cyclic(), abelian.parse_group("Z2xZ2").is_cyclic())

# a subgroup and its cosets
H = abelian.cyclic(12).subgroup_of_order(4)
print("subgroup of order 4 in Z12:", sorted(str(x) for x in H))

# Sidon sets: all pairwise sums x+y (x != y) distinct.  These label complete graphs.
for t in (11, 16, 19):
    rec = max_sidon(abelian.cyclic(t))
    print(f"largest Sidon set in Z{t}: size {rec.size}", [str(x) for x in rec.elements])

# the noncyclic group of order 16 does better than Z16
rec = max_sidon(abelian.parse_group("Z2xZ2xZ2xZ2"))
print("Z2^4:", rec.size)

for k in range(3, 7):
    print(f"smallest cyclic order holding a Sidon set of size {k}:", smallest_cyclic_sidon_order(k, 40))
