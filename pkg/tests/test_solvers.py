import random

import pytest

from edgeirreg.abelian import AbelianGroup, cyclic, enumerate_groups
from edgeirreg.constructors import label_complete_bipartite
from edgeirreg.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    path,
    random_dag,
    random_forest,
    random_graph,
    star,
)
from edgeirreg.labeling import is_edge_irregular, is_injective
from edgeirreg.primes import is_prime, next_prime
from edgeirreg.solvers import (
    bounds_report,
    conjecture_sweep,
    exact_es,
    exact_esg,
    exact_har,
    has_sidon_set,
    max_sidon,
    parity_obstruction,
    search_group_labeling,
    smallest_cyclic_sidon_order,
)

import oracles


def Z(*fs):
    return AbelianGroup(fs)


# -- primes ------------------------------------------------------------------

@pytest.mark.parametrize("k,p", [(10, 11), (22, 23), (13, 17), (0, 2), (1, 2), (2, 3)])
def test_next_prime(k, p):
    assert next_prime(k) == p


def test_next_prime_against_sieve():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 45):
        for j in range(i * i, 2000, i):
            sieve[j] = False
    assert [is_prime(i) for i in range(2000)] == sieve
    for k in range(1900):
        assert next_prime(k) == next(i for i in range(k + 1, 2000) if sieve[i])


# -- group search vs brute force --------------------------------------------

def _small_cases():
    cases = [path(3), path(4), cycle(3), cycle(4), cycle(5), star(3), complete(4),
             complete_bipartite(2, 2), disjoint_union([path(2), path(2)]),
             disjoint_union([cycle(3), path(2)]), Graph(4, ((0, 1),))]
    for s in range(25):
        g = random_graph(random.Random(s).randint(2, 5), 0.5, s)
        if 0 < g.m:
            cases.append(g)
    return cases


@pytest.mark.parametrize("g", _small_cases(), ids=str)
def test_search_matches_brute_force(g):
    # symmetry reductions must not lose solutions
    for s in range(g.m, g.m + 3):
        for grp in enumerate_groups(s):
            if grp.order ** g.n > 400_000:
                continue
            out = search_group_labeling(g, grp)
            expect = oracles.group_labeling_exists(g.edges, g.n, grp.factors)
            assert (out.status == "found") == expect, (g, grp)
            if out.labels is not None:
                from edgeirreg.labeling import Labeling
                assert is_edge_irregular(g, Labeling.from_indices(grp, out.labels))[0]


def test_brute_force_group_enumeration_agrees():
    for n in range(1, 50):
        ours = sorted(g.invariant_factors for g in enumerate_groups(n))
        assert ours == sorted(oracles.abelian_groups(n))


# -- exact_es ----------------------------------------------------------------

def test_exact_es_examples():
    assert exact_es(path(2), 5).value == 1
    assert exact_es(path(3), 5).value == 2
    assert oracles.brute_es(path(3).edges, 3) == 2
    k14 = oracles.brute_es(star(4).edges, 5)
    assert exact_es(star(4), 10).value == k14 == 4


@pytest.mark.parametrize("g", [path(5), cycle(4), cycle(5), complete(3), complete(4), star(3),
                               complete_bipartite(2, 2), random_graph(5, 0.5, 3)], ids=str)
def test_exact_es_matches_brute_force(g):
    r = exact_es(g, 12)
    assert r.value == oracles.brute_es(g.edges, g.n)
    labels = r.certificates["integer"]
    sums = [labels[u] + labels[v] for u, v in g.edges]
    assert len(set(sums)) == len(sums)
    assert all(1 <= x <= r.value for x in labels)


def test_exact_es_exceeded():
    r = exact_es(complete(5), 3)
    assert r.status == "exceeded" and r.value is None


# -- exact_esg ---------------------------------------------------------------

def test_exact_esg_examples():
    assert exact_esg(cycle(6), 20).value == 7
    assert exact_esg(complete_bipartite(2, 3), 20).value == 6
    r = exact_esg(complete(5), 20)
    assert r.value == 11
    assert {x["s"] for x in r.refutations} == {10}


@pytest.mark.parametrize("g", [path(3), cycle(4), cycle(5), star(3), complete(4),
                               disjoint_union([path(2), path(3)]), random_graph(5, 0.5, 1)], ids=str)
def test_exact_esg_matches_brute_force(g):
    assert exact_esg(g, 20).value == oracles.brute_esg(g.edges, g.n)


def test_exact_esg_certificates_per_group():
    r = exact_esg(cycle(8), 12)
    assert r.value == 8
    assert set(r.certificates) == {str(grp) for grp in enumerate_groups(8)}
    for lab in r.certificates.values():
        assert is_edge_irregular(cycle(8), lab)[0]


def test_exact_esg_budget_and_limit():
    r = exact_esg(complete(5), 20, nodes=10)
    assert r.status == "unknown" and r.value is None
    r = exact_esg(complete(5), 10)
    assert r.status == "exceeded"


def test_exact_esg_parallel_matches_serial():
    g = cycle(8)
    a = exact_esg(g, 12)
    b = exact_esg(g, 12, workers=2)
    assert a.value == b.value
    assert {k: v.indices() for k, v in a.certificates.items()} == {k: v.indices() for k, v in b.certificates.items()}


@pytest.mark.parametrize("m,n", [(a, b) for a in range(1, 5) for b in range(a, 7) if a * b <= 12])
def test_bipartite_solver_constructor_agreement(m, n):
    g = complete_bipartite(m, n)
    assert exact_esg(g, 13).value == m * n
    for grp in enumerate_groups(m * n):
        L = label_complete_bipartite(m, n, grp)
        assert is_edge_irregular(g, L)[0]


@pytest.mark.parametrize("seed", range(15))
def test_forest_law(seed):
    f = random_forest(random.Random(seed).randint(2, 10), seed)
    if f.m == 0 or f.m > 9:
        return
    assert exact_esg(f, 20).value == f.m


# -- exact_har ---------------------------------------------------------------

def test_exact_har_examples():
    r = exact_har(complete(3), 10)
    assert r.value == 3
    assert oracles.brute_har(complete(3).edges, 3) == 3
    assert exact_har(path(3), 10).value == oracles.brute_har(path(3).edges, 3) == 2
    k4 = oracles.brute_har(complete(4).edges, 4)
    assert exact_har(complete(4), 12).value == k4


@pytest.mark.parametrize("g", [path(4), path(5), cycle(4), cycle(5), star(3), star(4),
                               complete_bipartite(2, 2), complete_bipartite(2, 3),
                               disjoint_union([path(2), path(2)]), random_graph(5, 0.5, 7)], ids=str)
def test_exact_har_matches_brute_force(g):
    r = exact_har(g, 12)
    assert r.value == oracles.brute_har(g.edges, g.n)
    lab = next(iter(r.certificates.values()))
    assert is_edge_irregular(g, lab)[0]
    if r.value >= g.n:
        assert is_injective(lab)
    else:
        assert len({x.residues for x in lab}) == r.value


# -- Sidon sets --------------------------------------------------------------

def test_max_sidon_examples():
    assert max_sidon(cyclic(11)).size == 5
    assert max_sidon(cyclic(2)).size == 2
    assert max_sidon(cyclic(19)).size == 6


@pytest.mark.parametrize("N", range(1, 21))
def test_max_sidon_brute_force(N):
    rec = max_sidon(cyclic(N))
    assert rec.size == oracles.max_sidon_size(N)
    sums = [a + b for i, a in enumerate(rec.elements) for b in rec.elements[i + 1:]]
    assert len({s.residues for s in sums}) == len(sums)


def test_sidon_in_noncyclic_group():
    # {0, e1, e2, e3, e4, e1+e2+e3+e4} is an S_2-set of size 6 in Z2^4
    assert has_sidon_set(Z(2, 2, 2, 2), 6) is not None
    assert has_sidon_set(cyclic(16), 6) is None


@pytest.mark.parametrize("n", range(3, 7))
def test_har_complete_equals_cyclic_sidon_threshold(n):
    assert exact_har(complete(n), 25).value == smallest_cyclic_sidon_order(n)


# -- parity obstruction -----------------------------------------------------

def test_parity_examples():
    assert parity_obstruction(cycle(6), Z(6)) is not None
    assert parity_obstruction(cycle(6), Z(2, 3)) is not None
    assert parity_obstruction(cycle(5), Z(5)) is None
    assert parity_obstruction(cycle(8), Z(8)) is None
    assert parity_obstruction(cycle(6), Z(7)) is None
    assert parity_obstruction(path(7), Z(6)) is None


def _even_graphs():
    return [cycle(6), disjoint_union([cycle(3), cycle(3)]),
            Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4))),
            complete(5)]


@pytest.mark.parametrize("g", _even_graphs(), ids=str)
def test_obstruction_soundness(g):
    grp = cyclic(g.m)
    ob = parity_obstruction(g, grp)
    assert ob is not None
    assert search_group_labeling(g, grp).status == "refuted"
    if grp.order ** g.n <= 2_000_000:
        assert not oracles.group_labeling_exists(g.edges, g.n, grp.factors)


# -- bounds ------------------------------------------------------------------

def test_bounds_path4():
    rep = bounds_report(path(4))
    assert rep.best_lower == 3
    assert {b.source: b.value for b in rep.upper}["greedy-col"] == 3
    assert rep.exact["es_g"] == 3


def test_bounds_c6():
    rep = bounds_report(cycle(6))
    lows = {b.source: b.value for b in rep.lower}
    assert lows == {"pigeonhole": 6, "parity": 7}
    assert rep.exact["es_g"] == 7


def test_bounds_k5():
    rep = bounds_report(complete(5))
    lows = {b.source: b.value for b in rep.lower}
    assert lows["complete-graph"] == 10
    assert rep.exact["es_g"] == 11


def test_bounds_planar_and_dag():
    rep = bounds_report(cycle(5), planar=True)
    assert {b.source: b.value for b in rep.upper}["planar"] == 21
    d = random_dag(7, 0.4, 2)
    rep = bounds_report(d)
    assert [b.source for b in rep.upper] == ["dag"]


@pytest.mark.parametrize("seed", range(20))
def test_bounds_consistency_random(seed):
    g = random_graph(6, 0.4, seed)
    rep = bounds_report(g, nodes=50_000)
    rep.check()
    if rep.exact.get("es_g") is not None:
        assert rep.best_lower <= rep.exact["es_g"] <= rep.best_upper


def test_bounds_no_exact():
    rep = bounds_report(complete(7), exact=False)
    assert rep.exact == {}
    assert rep.best_lower == 28


# -- conjecture sweep --------------------------------------------------------

def test_sweep_margins():
    forests = [random_forest(6, s) for s in range(5)]
    rows = conjecture_sweep(forests + [cycle(6), complete(5)], c_grid=(0, 1))
    for f, row in zip(forests, rows):
        if f.m:
            assert row["margin"] == -f.m
    assert rows[-2]["margin"] == -5
    assert rows[-1]["margin"] == -9
    assert all(row["within"]["0"] for row in rows)
