"""
Directed acyclic graphs
=======================

Arc weight is tail minus head.  A group of order (m-1)min(indeg, outdeg)+1 suffices.
"""

from edgeirreg import abelian, graphs
from edgeirreg.constructors import dag_bound, label_dag_greedy
from edgeirreg.labeling import arc_weights

d = graphs.random_dag(8, 0.4, seed=5)
print(d, "max indegree", d.max_indegree(), "max outdegree", d.max_outdegree())
G = abelian.cyclic(dag_bound(d))
L = label_dag_greedy(d, G)
w = arc_weights(d, L)
print("labels:", [str(x) for x in L.values])
print(G, "distinct arc weights:", w.distinct)

# cycles are rejected
try:
    label_dag_greedy(graphs.Digraph(3, ((0, 1), (1, 2), (2, 0))), abelian.cyclic(5))
except ValueError as e:
    print("rejected:", e)
