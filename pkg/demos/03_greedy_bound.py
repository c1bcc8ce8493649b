"""
The greedy degeneracy bound
===========================

Order the vertices by the coloring number and label them one at a time.
Any group of order (col-1)(m-1)+1 or more is large enough.
"""

from edgeirreg import abelian, graphs
from edgeirreg.constructors import (
    greedy_col_bound,
    greedy_injective_bound,
    label_greedy_col,
    label_greedy_injective,
)
from edgeirreg.labeling import is_edge_irregular, is_injective

g = graphs.random_graph(10, 0.35, seed=11)
col, order = graphs.coloring_number(g)
print(g, "m =", g.m, "col =", col, "witness order", order)

bound = greedy_col_bound(g)
for G in abelian.enumerate_groups(bound):
    L = label_greedy_col(g, G)
    print(f"|G| = {bound}, {G}: irregular = {is_edge_irregular(g, L)[0]}")

# injective variant in Z_t, t = n + (col-1)(m-1)
t = greedy_injective_bound(g)
L = label_greedy_injective(g, abelian.cyclic(t))
print(f"Z{t}: injective = {is_injective(L)}, irregular = {is_edge_irregular(g, L)[0]}")
