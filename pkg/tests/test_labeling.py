import random

import pytest
from hypothesis import given, settings, strategies as st

from edgeirreg.abelian import AbelianGroup, cyclic, enumerate_groups
from edgeirreg.constructors import label_complete_bipartite
from edgeirreg.graphs import Digraph, Graph, complete, complete_bipartite, cycle, path, random_graph
from edgeirreg.labeling import (
    Labeling,
    arc_weights,
    edge_weights,
    is_arc_irregular,
    is_edge_irregular,
    is_injective,
)


def lab(grp, *vals):
    return Labeling.from_residues(grp, vals)


def test_edge_weight_examples():
    t = edge_weights(path(3), lab(cyclic(2), 0, 0, 1))
    assert [w.residues for w in t.weights] == [(0,), (1,)]
    assert t.distinct and t.witness is None

    t = edge_weights(cycle(3), lab(cyclic(3), 0, 0, 0))
    assert [w.residues for w in t.weights] == [(0,), (0,), (0,)]
    assert not t.distinct
    assert t.witness == ((0, 1), (0, 2))


def test_bipartite_weights_cover_z6():
    g = complete_bipartite(2, 3)
    L = label_complete_bipartite(2, 3, cyclic(6))
    t = edge_weights(g, L)
    assert t.distinct
    assert sorted(w.residues[0] for w in t.weights) == list(range(6))


def test_single_edge_always_irregular():
    for grp in enumerate_groups(4):
        for a in grp:
            for b in grp:
                assert is_edge_irregular(path(2), Labeling(grp, (a, b)))[0]


@pytest.mark.parametrize("seed", range(30))
def test_pigeonhole(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(4, 8), 0.6, seed)
    if g.m < 2:
        return
    grp = cyclic(rng.randint(1, g.m - 1))
    L = Labeling.from_indices(grp, [rng.randrange(grp.order) for _ in range(g.n)])
    ok, witness = is_edge_irregular(g, L)
    assert not ok and witness is not None
    (a, b), (c, d) = witness
    assert L[a] + L[b] == L[c] + L[d]


def test_arc_weight_examples():
    d = Digraph(2, ((0, 1),))
    assert arc_weights(d, lab(cyclic(5), 1, 1)).weights[0].residues == (0,)
    d = Digraph(3, ((0, 1), (0, 2)))
    t = arc_weights(d, lab(cyclic(5), 0, 1, 2))
    assert [w.residues for w in t.weights] == [(4,), (3,)]
    assert is_arc_irregular(d, lab(cyclic(5), 0, 1, 2))[0]


def test_injective():
    assert not is_injective(lab(cyclic(5), 1, 1, 1))
    g = complete(4)
    grp = cyclic(7)
    L = lab(grp, 0, 1, 2, 4)
    assert is_edge_irregular(g, L)[0]
    assert is_injective(L)


def test_labeling_must_cover_graph():
    with pytest.raises(ValueError):
        edge_weights(path(3), lab(cyclic(3), 0, 1))
    with pytest.raises(ValueError):
        Labeling(cyclic(3), (cyclic(4)(1),))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([g for n in range(5, 30) for g in enumerate_groups(n)]))
def test_translation_invariance_within_component(seed, grp):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 7), 0.5, seed)
    L = Labeling.from_indices(grp, [rng.randrange(grp.order) for _ in range(g.n)])
    comp = g.components[rng.randrange(len(g.components))]
    c = grp.from_index(rng.randrange(grp.order))
    L2 = L.translate(c, comp)
    inside = [e for e in g.edges if e[0] in comp]
    sub = Graph(g.n, tuple(inside))
    assert is_edge_irregular(sub, L)[0] == is_edge_irregular(sub, L2)[0]
    w1, w2 = edge_weights(sub, L).weights, edge_weights(sub, L2).weights
    assert all(b == a + 2 * c for a, b in zip(w1, w2))
