"""Exact values of es, es_g and har, S_2-sets, obstructions and bound reports.

All exact searches are depth-first over vertices in degeneracy witness
order, trying candidate labels in increasing order, so the certificate
returned is always the lexicographically least one in that search order.
Budgets (nodes, seconds) turn an unfinished search into ``"unknown"``
rather than a wrong answer.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .abelian import AbelianGroup, cyclic, enumerate_groups
from .graphs import Digraph, Graph, back_neighbors, coloring_number, topological_order
from .labeling import Labeling, is_edge_irregular
from .primes import next_prime

__all__ = [
    "BudgetExceeded",
    "SearchResult",
    "ExactResult",
    "Obstruction",
    "SidonRecord",
    "Bound",
    "BoundsReport",
    "search_group_labeling",
    "exact_es",
    "exact_esg",
    "exact_har",
    "max_sidon",
    "has_sidon_set",
    "smallest_cyclic_sidon_order",
    "parity_obstruction",
    "bounds_report",
    "conjecture_sweep",
]


class BudgetExceeded(Exception):
    pass


class _Budget:
    def __init__(self, nodes=None, secs=None):
        self.limit = nodes
        self.deadline = None if secs is None else time.monotonic() + secs
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded


@dataclass
class SearchResult:
    """Outcome of one exhaustive search: ``status`` is found, refuted or unknown."""

    status: str
    labels: list[int] | None
    nodes: int


def _backtrack(order, back, domains, combine, budget, injective=False, onto=None):
    """Depth-first labeling search with all-distinct edge weights.

    ``onto``: if set, every label in range(onto) must be used (surjective regime).
    """
    n = len(domains)
    depth = len(order)
    labels = [None] * n
    used_w = set()
    count: dict[int, int] = {}

    def rec(i):
        if i == depth:
            return onto is None or len(count) == onto
        budget.tick()
        v = order[i]
        bv = [labels[u] for u in back[v]]
        for c in domains[v]:
            if injective and c in count:
                continue
            if onto is not None and c in count and onto - len(count) > depth - i - 1:
                continue
            ws = []
            for a in bv:
                w = combine(a, c)
                if w in used_w or w in ws:
                    break
                ws.append(w)
            else:
                labels[v] = c
                used_w.update(ws)
                count[c] = count.get(c, 0) + 1
                if rec(i + 1):
                    return True
                used_w.difference_update(ws)
                count[c] -= 1
                if not count[c]:
                    del count[c]
                labels[v] = None
        return False

    return rec(0), labels


def _run(order, back, domains, combine, nodes, secs, **kw) -> SearchResult:
    budget = _Budget(nodes, secs)
    try:
        ok, labels = _backtrack(order, back, domains, combine, budget, **kw)
    except BudgetExceeded:
        return SearchResult("unknown", None, budget.nodes)
    return SearchResult("found" if ok else "refuted", list(labels) if ok else None, budget.nodes)


def search_group_labeling(g: Graph, grp: AbelianGroup, nodes=None, secs=None) -> SearchResult:
    """Exhaustive search for a ``grp``-edge irregular labeling of ``g``.

    Symmetry reduction: translating everything by c shifts every weight by
    2c, so the first vertex is pinned to zero.  The first vertex of any
    other component may be shifted by an element of order <= 2 without
    changing its weights, so it ranges over a transversal modulo the
    2-torsion subgroup.  Isolated vertices are pinned to zero.  Scalar
    multiplication by a unit of the exponent is an automorphism fixing 0,
    so the second vertex only tries one label per orbit.
    """
    if g.m > grp.order:
        return SearchResult("refuted", None, 0)
    _, order = coloring_number(g)
    back = back_neighbors(g, order)
    N = grp.order
    full = range(N)
    roots = grp.two_torsion_transversal()
    domains = [full] * g.n
    comp_of = g.component_index()
    first_seen = set()
    for i, v in enumerate(order):
        c = comp_of[v]
        if c in first_seen:
            continue
        first_seen.add(c)
        domains[v] = [0] if (i == 0 or g.degree(v) == 0) else roots
    if len(order) > 1 and comp_of[order[1]] == comp_of[order[0]]:
        # x -> kx (k a unit) fixes 0 and preserves distinctness
        domains[order[1]] = grp.unit_orbit_representatives()
    table = grp.add_table if N <= 2048 else None
    combine = (lambda a, b: table[a][b]) if table is not None else grp.index_adder()
    return _run(order, back, domains, combine, nodes, secs)


@dataclass
class ExactResult:
    """Result of an ascending sweep for the least admissible parameter."""

    quantity: str
    value: int | None
    status: str  # computed | exceeded | unknown
    certificates: dict[str, Labeling] = field(default_factory=dict)
    refutations: list[dict] = field(default_factory=list)
    nodes: int = 0
    start: int = 0

    @property
    def computed(self) -> bool:
        return self.status == "computed"


def _esg_task(args):
    g, grp, nodes, secs = args
    return search_group_labeling(g, grp, nodes, secs)


def exact_esg(g: Graph, s_max: int, nodes=None, secs=None, workers: int = 1) -> ExactResult:
    """Least s >= m such that every Abelian group of order s admits an edge irregular labeling.

    Every s from the pigeonhole floor upward is tested; no monotonicity is
    assumed.  For a failed s the first refuted group is recorded; at the
    answer a certificate is kept for each group.
    """
    start = max(1, g.m)
    res = ExactResult("es_g", None, "exceeded", start=start)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for s in range(start, s_max + 1):
            groups = enumerate_groups(s)
            tasks = [(g, grp, nodes, secs) for grp in groups]
            if pool is not None:
                outcomes = list(pool.map(_esg_task, tasks))
            else:
                outcomes = []
                for t in tasks:
                    out = _esg_task(t)
                    outcomes.append(out)
                    if out.status != "found":
                        break
            certs = {}
            for grp, out in zip(groups, outcomes):
                res.nodes += out.nodes
                if out.status == "unknown":
                    res.status = "unknown"
                    res.refutations.append({"s": s, "group": str(grp), "status": "unknown", "nodes": out.nodes})
                    return res
                if out.status == "refuted":
                    res.refutations.append({"s": s, "group": str(grp), "status": "refuted", "nodes": out.nodes})
                    break
                certs[str(grp)] = Labeling.from_indices(grp, out.labels)
            else:
                res.value, res.status, res.certificates = s, "computed", certs
                return res
    finally:
        if pool is not None:
            pool.shutdown()
    return res


def exact_es(g: Graph, k_max: int, nodes=None, secs=None) -> ExactResult:
    """Least k such that labels 1..k give pairwise distinct integer edge sums.

    The sweep starts at ceil((m+1)/2), since k labels give only 2k-1
    possible sums.  Reflection x -> k+1-x preserves distinctness, so the
    first vertex is restricted to the lower half.
    """
    start = max(1, -(-(g.m + 1) // 2))
    res = ExactResult("es", None, "exceeded", start=start)
    _, order = coloring_number(g)
    back = back_neighbors(g, order)
    for k in range(start, k_max + 1):
        domains = [range(1, k + 1)] * g.n
        if order:
            domains[order[0]] = range(1, (k + 1) // 2 + 1)
        out = _run(order, back, domains, int.__add__, nodes, secs)
        res.nodes += out.nodes
        if out.status == "unknown":
            res.status = "unknown"
            return res
        if out.status == "found":
            res.value, res.status = k, "computed"
            res.certificates["integer"] = out.labels
            return res
        res.refutations.append({"k": k, "status": "refuted", "nodes": out.nodes})
    return res


def exact_har(g: Graph, t_max: int, nodes=None, secs=None) -> ExactResult:
    """Least t with a labeling V -> Z_t giving distinct edge sums mod t.

    The labeling must be injective when t >= n and surjective when t < n.
    Translation keeps both properties, so the first vertex is pinned to 0.
    """
    start = max(1, g.m)
    res = ExactResult("har", None, "exceeded", start=start)
    _, order = coloring_number(g)
    back = back_neighbors(g, order)
    for t in range(start, t_max + 1):
        domains = [range(t)] * g.n
        if order:
            domains[order[0]] = [0]
        kw = {"injective": True} if t >= g.n else {"onto": t}
        out = _run(order, back, domains, lambda a, b, t=t: (a + b) % t, nodes, secs, **kw)
        res.nodes += out.nodes
        if out.status == "unknown":
            res.status = "unknown"
            return res
        if out.status == "found":
            res.value, res.status = t, "computed"
            res.certificates[f"Z{t}"] = Labeling.from_indices(cyclic(t), out.labels)
            return res
        res.refutations.append({"t": t, "status": "refuted", "nodes": out.nodes})
    return res


# ---------------------------------------------------------------------------
# S_2-sets


@dataclass(frozen=True)
class SidonRecord:
    group: AbelianGroup
    elements: tuple
    size: int


def _sidon(grp: AbelianGroup, target: int | None):
    """Largest S_2-set containing 0 (enough, by translation); stop early at ``target``."""
    N = grp.order
    if N == 1:
        return [0]
    add = grp.index_adder()
    best = [0]
    cur = [0]
    sums: set[int] = set()

    def rec(start):
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
            if target is not None and len(best) >= target:
                return True
        for x in range(start, N):
            if len(cur) + (N - x) <= len(best):
                return False
            new = []
            for a in cur:
                s = add(a, x)
                if s in sums or s in new:
                    break
                new.append(s)
            else:
                cur.append(x)
                sums.update(new)
                if rec(x + 1):
                    return True
                cur.pop()
                sums.difference_update(new)
        return False

    rec(1)
    return best


def max_sidon(grp: AbelianGroup) -> SidonRecord:
    """A maximum S_2-set: all sums of two distinct members are distinct."""
    best = _sidon(grp, None)
    return SidonRecord(grp, tuple(grp.from_index(i) for i in best), len(best))


def has_sidon_set(grp: AbelianGroup, k: int):
    """An S_2-set of size k in ``grp``, or None."""
    best = _sidon(grp, k)
    return tuple(grp.from_index(i) for i in best) if len(best) >= k else None


def smallest_cyclic_sidon_order(k: int, t_max: int = 10_000) -> int | None:
    """Least t such that Z_t holds an S_2-set of size k."""
    for t in range(max(1, k * (k - 1) // 2), t_max + 1):
        if has_sidon_set(cyclic(t), k) is not None:
            return t
    return None


# ---------------------------------------------------------------------------
# parity obstruction


@dataclass(frozen=True)
class Obstruction:
    graph: str
    group: str
    reason: str

    def to_dict(self):
        return {"graph": self.graph, "group": self.group, "reason": self.reason}


def parity_obstruction(g: Graph, grp: AbelianGroup) -> Obstruction | None:
    """Certificate that ``grp`` admits no edge irregular labeling of ``g``, or None.

    Fires when all degrees are even, m = |grp| and the 2-part of ``grp`` is
    Z_2.  Then the weights would be all of ``grp``, summing to an element
    with Z_2-coordinate 1, while the weight sum equals sum deg(v) w(v),
    which lies in 2*grp.
    """
    if g.m != grp.order or any(d % 2 for d in g.degrees()) or not grp.sylow_two_is_z2():
        return None
    total = grp.element_sum()
    reason = (
        f"m = |G| = {grp.order}, so the {g.m} edge weights must be all of {grp}; "
        f"their sum is the sum of all group elements, {total}, which is not in 2G "
        f"because the 2-part of {grp} is Z2.  But every degree is even, so the "
        f"weight sum equals sum_v deg(v) w(v), which lies in 2G."
    )
    return Obstruction(str(g), str(grp), reason)


# ---------------------------------------------------------------------------
# bounds report


@dataclass(frozen=True)
class Bound:
    value: int
    source: str
    note: str = ""

    def to_dict(self):
        return {"value": self.value, "source": self.source, "note": self.note}


class InconsistentBounds(AssertionError):
    pass


@dataclass
class BoundsReport:
    graph: str
    n: int
    m: int
    col: int | None
    lower: list[Bound] = field(default_factory=list)
    upper: list[Bound] = field(default_factory=list)
    exact: dict[str, int | None] = field(default_factory=dict)
    certificates: dict[str, object] = field(default_factory=dict)

    @property
    def best_lower(self) -> int:
        return max((b.value for b in self.lower), default=0)

    @property
    def best_upper(self) -> int | None:
        return min((b.value for b in self.upper), default=None)

    def check(self):
        lo, hi = self.best_lower, self.best_upper
        if hi is not None and lo > hi:
            raise InconsistentBounds(f"{self.graph}: lower {lo} > upper {hi}")
        v = self.exact.get("es_g")
        if v is not None:
            if v < lo or (hi is not None and v > hi):
                raise InconsistentBounds(f"{self.graph}: es_g = {v} outside [{lo}, {hi}]")
            es = self.exact.get("es")
            if es is not None and es > v:
                raise InconsistentBounds(f"{self.graph}: es = {es} > es_g = {v}")

    def to_dict(self):
        return {
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "col": self.col,
            "lower": [b.to_dict() for b in self.lower],
            "upper": [b.to_dict() for b in self.upper],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "exact": self.exact,
        }


def bounds_report(g, nodes: int | None = 200_000, secs=None, planar: bool = False,
                  exact: bool = True) -> BoundsReport:
    """Every applicable bound on es_g, plus exact es, es_g, har if the budget allows.

    ``planar`` is a promise by the caller; planarity is not tested.
    ``g`` may be a :class:`Digraph`, in which case only the pigeonhole
    floor and the DAG bound apply.
    """
    if isinstance(g, Digraph):
        rep = BoundsReport(str(g), g.n, g.m, None)
        rep.lower.append(Bound(g.m, "pigeonhole"))
        order, _ = topological_order(g)
        if order is not None and g.m:
            v = (g.m - 1) * min(g.max_indegree(), g.max_outdegree()) + 1
            rep.upper.append(Bound(v, "dag", "(m-1)min(maxin, maxout)+1"))
        rep.check()
        return rep

    col, _ = coloring_number(g)
    rep = BoundsReport(str(g), g.n, g.m, col)
    m, n = g.m, g.n
    rep.lower.append(Bound(m, "pigeonhole", "m distinct weights"))
    if m and m % 4 == 2 and all(d % 2 == 0 for d in g.degrees()):
        rep.lower.append(Bound(m + 1, "parity", "every group of order m is Z2 x odd; even degrees"))
    if n >= 3 and g.is_complete():
        rep.lower.append(Bound(n * n - 3 * n, "complete-graph", "n^2-3n"))
    if m:
        rep.upper.append(Bound((col - 1) * (m - 1) + 1, "greedy-col", "(col-1)(m-1)+1"))
        if planar:
            rep.upper.append(Bound(5 * m - 4, "planar", "5m-4, caller-declared planar"))
        if g.bipartition() is not None:
            rep.upper.append(Bound(-(-(n * n - 1) // 4), "bipartite-embed", "ceil((n^2-1)/4)"))

    if exact:
        cap_g = rep.best_upper if rep.best_upper is not None else max(1, m)
        es = exact_es(g, max(1, cap_g), nodes, secs)
        esg = exact_esg(g, max(1, cap_g), nodes, secs)
        har = exact_har(g, max(1, n + (col - 1) * max(m - 1, 0)), nodes, secs)
        rep.exact = {
            "es": es.value,
            "es_g": esg.value,
            "har": har.value,
        }
        if es.value is not None:
            rep.upper.append(Bound(next_prime(2 * es.value), "prime-sandwich-es", "p(2 es)"))
        if har.value is not None:
            rep.upper.append(Bound(next_prime(2 * har.value), "prime-sandwich-har", "p(2 har)"))
        if esg.computed:
            rep.certificates["es_g"] = esg.certificates
        if es.computed:
            rep.certificates["es"] = es.certificates["integer"]
        if har.computed:
            rep.certificates["har"] = next(iter(har.certificates.values()))
    rep.check()
    return rep


def conjecture_sweep(corpus, c_grid=(0,), nodes: int | None = 200_000, secs=None) -> list[dict]:
    """Margins es_g(G) - 2m over a corpus; records for each c whether es_g <= 2m + c."""
    rows = []
    for g in corpus:
        r = exact_esg(g, max(1, 2 * g.m + max(c_grid)), nodes, secs)
        margin = None if r.value is None else r.value - 2 * g.m
        rows.append({
            "graph": str(g),
            "m": g.m,
            "es_g": r.value,
            "status": r.status,
            "margin": margin,
            "within": {str(c): (None if margin is None else margin <= c) for c in c_grid},
        })
    return rows


def verify_certificates(g: Graph, res: ExactResult) -> bool:
    return all(is_edge_irregular(g, lab)[0] for lab in res.certificates.values()
               if isinstance(lab, Labeling))
