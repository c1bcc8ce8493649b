"""
Forests and complete bipartite graphs
=====================================

Both families reach the pigeonhole floor: m edges, group of order m.
"""

import random

from edgeirreg import abelian, graphs
from edgeirreg.constructors import WeightPlan, label_complete_bipartite, label_forest
from edgeirreg.labeling import edge_weights

# a random forest; ask for an arbitrary weighting of its edges
F = graphs.random_forest(9, seed=3)
G = abelian.enumerate_groups(F.m)[-1]
rng = random.Random(0)
targets = {e: G.from_index(i) for e, i in zip(F.edges, rng.sample(range(G.order), F.m))}
L = label_forest(F, G, WeightPlan(targets))
w = edge_weights(F, L)
print(F, "over", G)
for e, x in zip(w.edges, w.weights):
    print(f"  edge {e}: wanted {targets[e]}, got {x}")

# complete bipartite K_{3,4} over every group of order 12
K = graphs.complete_bipartite(3, 4)
for G in abelian.enumerate_groups(12):
    L = label_complete_bipartite(3, 4, G)
    print(G, "distinct weights:", edge_weights(K, L).distinct)
