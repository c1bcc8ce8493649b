"""
Exact values by search
======================

es_g sweeps group orders upward, trying every group of each order.
Every answer carries a certificate; every smaller order carries a refutation.
"""

from edgeirreg import abelian, graphs
from edgeirreg.solvers import bounds_report, exact_es, exact_esg, exact_har, parity_obstruction

for g in (graphs.complete(4), graphs.complete(5), graphs.cycle(6)):
    r = exact_esg(g, 25)
    print(f"{g}: es_g = {r.value}, certificates {list(r.certificates)}")
    for ref in r.refutations:
        print("   ", ref)

# cycles with n = 2 mod 4 cannot be labeled in a group of order n
for n in (6, 10):
    for G in abelian.enumerate_groups(n):
        ob = parity_obstruction(graphs.cycle(n), G)
        print(f"C{n} in {G}:", ob.reason if ob else "no obstruction")

# integer and harmonious variants
g = graphs.complete_bipartite(2, 3)
print(g, "es =", exact_es(g, 20).value, "es_g =", exact_esg(g, 20).value, "har =", exact_har(g, 30).value)

# everything known about one graph
print(bounds_report(graphs.cycle(7)).to_dict())
