"""Constructive labelings.

Each constructor returns a :class:`Labeling`.  The greedy constructors may
be called below their guaranteed group order; if they run out of labels
they return a falsy :class:`Stuck` instead of raising.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .abelian import AbelianGroup, GroupElement, direct_sum, cyclic
from .graphs import (
    Digraph,
    FourSetPartition,
    Graph,
    back_neighbors,
    coloring_number,
    topological_order,
    validate_four_set_partition,
)
from .labeling import Labeling
from .primes import is_prime

__all__ = [
    "Stuck",
    "WeightPlan",
    "label_forest",
    "label_complete_bipartite",
    "label_greedy_col",
    "label_greedy_injective",
    "greedy_col_bound",
    "greedy_injective_bound",
    "dag_bound",
    "compose_four_set",
    "four_set_sublabeling",
    "compose_components",
    "component_sublabeling",
    "label_components",
    "label_dag_greedy",
]


@dataclass(frozen=True)
class Stuck:
    """A greedy run found no admissible label for ``vertex``."""

    vertex: int
    partial: dict = field(default_factory=dict)

    def __bool__(self):
        return False


# ---------------------------------------------------------------------------
# forests


@dataclass
class WeightPlan:
    """Target weight per edge and a fixed label for one vertex per component."""

    targets: dict[tuple[int, int], GroupElement]
    anchors: dict[int, GroupElement] = field(default_factory=dict)

    def __post_init__(self):
        self.targets = {(min(u, v), max(u, v)): w for (u, v), w in self.targets.items()}


def label_forest(f: Graph, g: AbelianGroup, plan: WeightPlan) -> Labeling:
    """Realise every planned edge weight exactly.

    Each component is walked breadth-first from its anchor; a newly reached
    vertex gets ``target - label(known endpoint)``.  Components without an
    anchor are anchored at their smallest vertex with label zero.
    """
    if not f.is_acyclic():
        raise ValueError("label_forest needs an acyclic graph")
    if set(plan.targets) != set(f.edges):
        raise ValueError("plan must give a target for every edge and nothing else")
    seen = {}
    for e, w in plan.targets.items():
        if w.group != g:
            raise ValueError(f"target for {e} is not in {g}")
        if w.residues in seen:
            raise ValueError(f"edges {seen[w.residues]} and {e} share target {w}")
        seen[w.residues] = e

    labels: list[GroupElement | None] = [None] * f.n
    comp_of = f.component_index()
    anchored = {}
    for v, a in plan.anchors.items():
        c = comp_of[v]
        if c in anchored:
            raise ValueError(f"two anchors ({anchored[c]}, {v}) in one component")
        if a.group != g:
            raise ValueError(f"anchor label for {v} is not in {g}")
        anchored[c] = v
    for c, comp in enumerate(f.components):
        root = anchored.get(c, comp[0])
        labels[root] = plan.anchors.get(root, g.zero)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(f.adj[x]):
                if labels[y] is None:
                    labels[y] = plan.targets[(min(x, y), max(x, y))] - labels[x]
                    queue.append(y)
    return Labeling(g, tuple(labels))


# ---------------------------------------------------------------------------
# complete bipartite graphs


def label_complete_bipartite(m: int, n: int, g: AbelianGroup) -> Labeling:
    """Coset labeling of K_{m,n} (V1 = 0..m-1, V2 = m..m+n-1) over a group of order mn.

    V1 gets the elements of a subgroup H of order m, V2 a transversal of
    G/H.  The weights at a vertex of V2 sweep its coset, so all mn weights
    are distinct and cover G.
    """
    if g.order != m * n:
        raise ValueError(f"|{g}| = {g.order} but K_{m},{n} needs order {m * n}")
    H = g.subgroup_of_order(m)
    reps = g.coset_representatives(H)
    assert len(reps) == n
    return Labeling(g, tuple(H) + tuple(reps))


# ---------------------------------------------------------------------------
# greedy along a degeneracy ordering


def greedy_col_bound(g: Graph) -> int:
    col, _ = coloring_number(g)
    return (col - 1) * (g.m - 1) + 1


def greedy_injective_bound(g: Graph) -> int:
    col, _ = coloring_number(g)
    return g.n + (col - 1) * (g.m - 1)


def _greedy(g: Graph, grp: AbelianGroup, injective: bool, first_label: GroupElement | None):
    _, order = coloring_number(g)
    pos = {v: i for i, v in enumerate(order)}
    back = back_neighbors(g, order)
    add, neg = grp.index_adder(), grp.index_negator()
    N = grp.order
    lab: list[int | None] = [None] * g.n
    used_w: set[int] = set()
    used_l: set[int] = set()
    for step, v in enumerate(order):
        forbidden = set(used_l) if injective else set()
        for u in back[v]:
            nu = neg(lab[u])
            forbidden.update(add(w, nu) for w in used_w)
        if not injective:
            # two earlier neighbours of a later vertex must not share a label,
            # otherwise that vertex cannot separate their edges
            for x in g.adj[v]:
                if pos[x] > step:
                    forbidden.update(lab[y] for y in back[x] if y != v and pos[y] < step)
        if step == 0 and first_label is not None:
            choice = grp.index(first_label)
            if choice in forbidden:
                choice = None
        else:
            choice = next((c for c in range(N) if c not in forbidden), None)
        if choice is None:
            partial = {u: grp.from_index(lab[u]) for u in order[:step]}
            return Stuck(v, partial)
        lab[v] = choice
        used_l.add(choice)
        for u in back[v]:
            used_w.add(add(choice, lab[u]))
    return Labeling.from_indices(grp, lab)


def label_greedy_col(g: Graph, grp: AbelianGroup, first_label: GroupElement | None = None):
    """Greedy edge-irregular labeling; guaranteed when |grp| >= (col-1)(m-1)+1.

    Vertices are taken in the degeneracy witness order and each gets the
    first group element (lexicographic order) that keeps all weights so far
    distinct and differs from the labels of the other already-labelled
    back-neighbours of its later neighbours.  The first vertex gets
    ``first_label`` (default zero).
    """
    return _greedy(g, grp, False, first_label)


def label_greedy_injective(g: Graph, grp: AbelianGroup, first_label: GroupElement | None = None):
    """As :func:`label_greedy_col` but also injective on vertices.

    Guaranteed when |grp| >= n + (col-1)(m-1).
    """
    return _greedy(g, grp, True, first_label)


# ---------------------------------------------------------------------------
# composition over Z_3 x G'


def four_set_sublabeling(g: Graph, p: FourSetPartition, gp: AbelianGroup):
    """Second-coordinate labeling over ``gp`` suitable for :func:`compose_four_set`.

    Labels V11 and V21 first, then V12 avoiding labels used in V11, then
    V22 avoiding labels used in V21; greedy within each step.  Returns a
    :class:`Stuck` if ``gp`` is too small.
    """
    zones = p.zones
    order = p.members("11") + p.members("21") + p.members("12") + p.members("22")
    pos = {v: i for i, v in enumerate(order)}
    add = gp.index_adder()
    lab: list[int | None] = [None] * g.n
    used = {0: set(), 1: set(), 2: set()}
    for step, v in enumerate(order):
        forbidden = set()
        if zones[v] == "12":
            forbidden.update(lab[u] for u in p.members("11"))
        elif zones[v] == "22":
            forbidden.update(lab[u] for u in p.members("21"))
        back = [u for u in g.adj[v] if pos[u] < step]
        for x in g.adj[v]:
            if pos[x] > step:
                forbidden.update(lab[y] for y in g.adj[x] if y != v and pos[y] < step)
        for c in range(gp.order):
            if c in forbidden:
                continue
            new = {}
            ok = True
            for u in back:
                z = _zone_coord(zones[u], zones[v])
                w = add(c, lab[u])
                if w in used[z] or w in new.get(z, ()):
                    ok = False
                    break
                new.setdefault(z, set()).add(w)
            if ok:
                lab[v] = c
                for z, ws in new.items():
                    used[z] |= ws
                break
        else:
            return Stuck(v, {u: gp.from_index(lab[u]) for u in order[:step]})
    return Labeling.from_indices(gp, lab)


def _zone_coord(a: str, b: str) -> int:
    # first coordinate of an edge weight: 0 inside row 1, 2 inside row 2, 1 across
    return int(a[0]) - 1 + int(b[0]) - 1


def compose_four_set(g: Graph, p: FourSetPartition, gp: AbelianGroup, sub: Labeling) -> Labeling:
    """Combine a second-coordinate labeling over ``gp`` into a labeling over Z_3 x gp.

    Vertices of V11, V12 get first coordinate 0 and those of V21, V22 get 1,
    so the three kinds of edges carry first coordinates 0, 2 and 1.
    """
    problems = validate_four_set_partition(g, p)
    if problems:
        raise ValueError("invalid four-set partition: " + "; ".join(problems))
    if gp.order % 3 == 0:
        raise ValueError(f"|{gp}| = {gp.order} is divisible by 3")
    if sub.group != gp or len(sub) != g.n:
        raise ValueError(f"sublabeling must label all {g.n} vertices over {gp}")
    used11 = {sub[v].residues for v in p.members("11")}
    used21 = {sub[v].residues for v in p.members("21")}
    for v in p.members("12"):
        if sub[v].residues in used11:
            raise ValueError(f"V12 vertex {v} reuses a label of V11")
    for v in p.members("22"):
        if sub[v].residues in used21:
            raise ValueError(f"V22 vertex {v} reuses a label of V21")
    zone_w: dict[tuple[int, tuple[int, ...]], tuple[int, int]] = {}
    for u, v in g.edges:
        key = (_zone_coord(p.zones[u], p.zones[v]), (sub[u] + sub[v]).residues)
        if key in zone_w:
            raise ValueError(f"sublabeling gives edges {zone_w[key]} and {(u, v)} equal weight in one zone")
        zone_w[key] = (u, v)

    G = direct_sum(cyclic(3), gp)
    vals = tuple(G.element((int(p.zones[v][0]) - 1,) + sub[v].residues) for v in range(g.n))
    return Labeling(G, vals)


# ---------------------------------------------------------------------------
# composition over Z_p x G' for many components


def compose_components(g: Graph, p: int, gp: AbelianGroup, sub: Labeling) -> Labeling:
    """Give component i first coordinate i in Z_p and keep ``sub`` as second coordinate.

    Edges of component i then have first coordinate 2i, pairwise distinct
    because 2 is invertible modulo the odd prime p.  ``sub`` only has to
    separate edges within each component.
    """
    comps = g.components
    q = len(comps)
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    if p < q:
        raise ValueError(f"p = {p} is smaller than the number of components {q}")
    if gp.order % p == 0:
        raise ValueError(f"|{gp}| = {gp.order} is divisible by p = {p}")
    if sub.group != gp or len(sub) != g.n:
        raise ValueError(f"sublabeling must label all {g.n} vertices over {gp}")
    comp_of = g.component_index()
    seen: dict[tuple[int, tuple[int, ...]], tuple[int, int]] = {}
    for u, v in g.edges:
        key = (comp_of[u], (sub[u] + sub[v]).residues)
        if key in seen:
            raise ValueError(f"sublabeling gives edges {seen[key]} and {(u, v)} equal weight")
        seen[key] = (u, v)
    G = direct_sum(cyclic(p), gp)
    vals = tuple(G.element((comp_of[v],) + sub[v].residues) for v in range(g.n))
    return Labeling(G, vals)


def component_sublabeling(g: Graph, gp: AbelianGroup):
    """Greedy labeling of each component separately over ``gp``, merged."""
    vals = [gp.zero] * g.n
    for comp in g.components:
        h, back = g.subgraph(comp)
        lab = label_greedy_col(h, gp)
        if not lab:
            return Stuck(back[lab.vertex])
        for i, v in enumerate(back):
            vals[v] = lab[i]
    return Labeling(gp, tuple(vals))


def smallest_odd_prime_at_least(q: int) -> int:
    k = max(3, q)
    while not is_prime(k):
        k += 1
    return k


def label_components(g: Graph, gp: AbelianGroup, p: int | None = None):
    """Convenience: pick p, label components greedily over ``gp``, compose."""
    if p is None:
        p = smallest_odd_prime_at_least(len(g.components))
    sub = component_sublabeling(g, gp)
    if not sub:
        return sub
    return compose_components(g, p, gp, sub)


# ---------------------------------------------------------------------------
# DAGs, arc weight = label(tail) - label(head)


def dag_bound(d: Digraph) -> int:
    return (d.m - 1) * min(d.max_indegree(), d.max_outdegree()) + 1


def label_dag_greedy(d: Digraph, grp: AbelianGroup, first_label: GroupElement | None = None):
    """Greedy difference labeling of a DAG; guaranteed when |grp| >= (m-1)min(in, out)+1.

    Uses topological order when the maximum in-degree is the smaller one
    (each vertex sees only its in-arcs as already placed), otherwise the
    reverse order with out-arcs.
    """
    order, cyc = topological_order(d)
    if order is None:
        raise ValueError(f"digraph has a directed cycle {cyc}")
    forward = d.max_indegree() <= d.max_outdegree()
    if not forward:
        order = order[::-1]
    # back[v]: already-placed partners; sign: +1 if v is the tail of the arc
    earlier = d.in_nbrs if forward else d.out_nbrs
    later = d.out_nbrs if forward else d.in_nbrs
    add, neg = grp.index_adder(), grp.index_negator()
    pos = {v: i for i, v in enumerate(order)}
    lab: list[int | None] = [None] * d.n
    used: set[int] = set()

    def weight(v, c, u):
        # arc between new vertex v (label c) and placed vertex u
        return add(lab[u], neg(c)) if forward else add(c, neg(lab[u]))

    for step, v in enumerate(order):
        forbidden = set()
        for u in earlier[v]:
            # weight(v, c, u) = lab[u] - c  (or c - lab[u]) must avoid used
            if forward:
                forbidden.update(add(lab[u], neg(w)) for w in used)
            else:
                forbidden.update(add(w, lab[u]) for w in used)
        for x in later[v]:
            forbidden.update(lab[y] for y in earlier[x] if y != v and pos[y] < step)
        if step == 0 and first_label is not None:
            choice = grp.index(first_label)
            if choice in forbidden:
                choice = None
        else:
            choice = next((c for c in range(grp.order) if c not in forbidden), None)
        if choice is None:
            return Stuck(v, {u: grp.from_index(lab[u]) for u in order[:step]})
        lab[v] = choice
        for u in earlier[v]:
            used.add(weight(v, choice, u))
    return Labeling.from_indices(grp, lab)
