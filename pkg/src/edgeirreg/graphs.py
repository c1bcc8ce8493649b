"""Simple graphs, digraphs, generators and degeneracy orderings.

Vertices are always ``0..n-1``.  Graph objects are immutable.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

__all__ = [
    "Graph",
    "Digraph",
    "FourSetPartition",
    "ZONES",
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "random_forest",
    "random_graph",
    "random_dag",
    "directed_path",
    "disjoint_union",
    "coloring_number",
    "topological_order",
    "validate_four_set_partition",
    "parse_generator",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        es = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
            e = (min(u, v), max(u, v))
            if e in es:
                raise ValueError(f"multi-edge {e}")
            es.add(e)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def component_index(self) -> list[int]:
        idx = [0] * self.n
        for i, comp in enumerate(self.components):
            for v in comp:
                idx[v] = i
        return idx

    def is_acyclic(self) -> bool:
        return self.m == self.n - len(self.components)

    def bipartition(self) -> list[int] | None:
        """A 0/1 side per vertex, or None if the graph has an odd cycle."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return None
        return side

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def subgraph(self, vertices) -> tuple[Graph, list[int]]:
        """Induced subgraph relabeled to 0..k-1, plus the old vertex for each new one."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), tuple(es)), vs

    def __str__(self):
        return self.name or f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        seen = set()
        for u, v in self.arcs:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"repeated arc ({u},{v})")
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_nbrs(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_nbrs(self) -> tuple[tuple[int, ...], ...]:
        inn = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(x) for x in inn)

    def max_indegree(self) -> int:
        return max((len(x) for x in self.in_nbrs), default=0)

    def max_outdegree(self) -> int:
        return max((len(x) for x in self.out_nbrs), default=0)

    def underlying(self) -> Graph:
        return Graph(self.n, tuple({(min(u, v), max(u, v)) for u, v in self.arcs}))

    def __str__(self):
        return self.name or f"Digraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# generators


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), name=f"C{n}")


def star(k: int) -> Graph:
    """K_{1,k}: centre 0 and leaves 1..k."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)), name=f"K1,{k}")


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)), name=f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with side V1 = 0..m-1 and V2 = m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs m, n >= 1")
    es = tuple((i, m + j) for i in range(m) for j in range(n))
    return Graph(m + n, es, name=f"K{m},{n}")


def random_forest(n: int, seed=None, p_edge: float = 0.8) -> Graph:
    """Each vertex i > 0 attaches to a random earlier vertex with probability p_edge."""
    if n < 1:
        raise ValueError("forest needs n >= 1")
    rng = random.Random(seed)
    es = []
    for i in range(1, n):
        if rng.random() < p_edge:
            es.append((rng.randrange(i), i))
    # shuffle labels so trees are not always rooted at low indices
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, tuple((perm[u], perm[v]) for u, v in es), name=f"forest({n},{seed})")


def random_graph(n: int, p: float, seed=None) -> Graph:
    if n < 1 or not 0 <= p <= 1:
        raise ValueError("random graph needs n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    es = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, es, name=f"G({n},{p},{seed})")


def random_dag(n: int, p: float, seed=None) -> Digraph:
    """Random DAG: arcs i->j (i<j) w.p. p, vertices then shuffled."""
    if n < 1 or not 0 <= p <= 1:
        raise ValueError("random dag needs n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = tuple((perm[i], perm[j]) for i, j in combinations(range(n), 2) if rng.random() < p)
    return Digraph(n, arcs, name=f"DAG({n},{p},{seed})")


def directed_path(n: int) -> Digraph:
    return Digraph(n, tuple((i, i + 1) for i in range(n - 1)), name=f"dP{n}")


def disjoint_union(graphs) -> Graph:
    es, off = [], 0
    names = []
    for g in graphs:
        es.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
        names.append(str(g))
    return Graph(off, tuple(es), name="+".join(names))


# ---------------------------------------------------------------------------
# orderings


def coloring_number(g: Graph) -> tuple[int, list[int]]:
    """Coloring number and a witness ordering.

    Repeatedly removes a vertex of minimum current degree (lowest index on
    ties).  The witness ordering is the reverse removal order: each vertex
    has at most col-1 neighbours before it.
    """
    if g.n == 0:
        return 0, []
    deg = g.degrees()
    alive = [True] * g.n
    removal = []
    degeneracy = 0
    for _ in range(g.n):
        v = min((d, i) for i, d in enumerate(deg) if alive[i])[1]
        degeneracy = max(degeneracy, deg[v])
        alive[v] = False
        removal.append(v)
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
    return degeneracy + 1, removal[::-1]


def back_neighbors(g: Graph, order: list[int]) -> list[list[int]]:
    """For each vertex, its neighbours that come earlier in ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    return [sorted((u for u in g.adj[v] if pos[u] < pos[v]), key=pos.get) for v in range(g.n)]


def topological_order(d: Digraph) -> tuple[list[int] | None, list[int] | None]:
    """Kahn's algorithm with smallest-index tie breaking.

    Returns ``(order, None)`` for a DAG, or ``(None, cycle)`` where ``cycle``
    lists the vertices of a directed cycle.
    """
    indeg = [len(x) for x in d.in_nbrs]
    ready = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in d.out_nbrs[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) == d.n:
        return order, None
    return None, _find_cycle(d, {v for v in range(d.n) if indeg[v] > 0})


def _find_cycle(d: Digraph, rest: set[int]) -> list[int]:
    # every vertex left over has an in-neighbour that is also left over
    v = min(rest)
    seen: dict[int, int] = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = min(u for u in d.in_nbrs[v] if u in rest)
    cyc = walk[seen[v]:]
    return cyc[::-1]


# ---------------------------------------------------------------------------
# four-set partitions

ZONES = ("11", "12", "21", "22")


@dataclass(frozen=True)
class FourSetPartition:
    """Zone label per vertex, one of "11", "12", "21", "22"."""

    zones: tuple[str, ...]

    def __post_init__(self):
        zs = tuple(str(z).upper().replace("V", "") for z in self.zones)
        bad = [z for z in zs if z not in ZONES]
        if bad:
            raise ValueError(f"unknown zone(s) {bad}")
        object.__setattr__(self, "zones", zs)

    def members(self, zone: str) -> list[int]:
        return [v for v, z in enumerate(self.zones) if z == zone]

    def sizes(self) -> dict[str, int]:
        return {z: self.zones.count(z) for z in ZONES}

    @classmethod
    def from_sets(cls, n: int, v11=(), v12=(), v21=(), v22=()) -> FourSetPartition:
        zones = [None] * n
        for name, vs in zip(ZONES, (v11, v12, v21, v22)):
            for v in vs:
                if zones[v] is not None:
                    raise ValueError(f"vertex {v} in two zones")
                zones[v] = name
        if None in zones:
            raise ValueError(f"vertex {zones.index(None)} has no zone")
        return cls(tuple(zones))


def validate_four_set_partition(g: Graph, p: FourSetPartition) -> list[str]:
    """All violated conditions; an empty list means the partition is valid."""
    out = []
    if len(p.zones) != g.n:
        return [f"partition covers {len(p.zones)} vertices, graph has {g.n}"]
    half = -(-g.n // 2)
    s = p.sizes()
    for a, b in (("11", "12"), ("11", "21"), ("21", "22")):
        if s[a] + s[b] > half:
            out.append(f"|V{a}|+|V{b}| = {s[a] + s[b]} > ceil(n/2) = {half}")
    for u, v in g.edges:
        (i, j), (k, l) = p.zones[u], p.zones[v]
        if not (i == k or (j == "1" and l == "1")):
            out.append(f"edge {u}-{v} joins V{p.zones[u]} and V{p.zones[v]}")
    return out


# ---------------------------------------------------------------------------
# generator mini-grammar: "cycle:6", "kmn:2,3", "random:8,0.3,1"


def parse_generator(spec: str, seed=None):
    """Build a graph (or digraph) from a ``name:args`` string."""
    name, _, rest = spec.strip().partition(":")
    args = [a for a in rest.split(",") if a.strip()] if rest else []
    name = name.lower()
    ints = lambda k: [int(a) for a in args[:k]]  # noqa: E731
    if name in ("path", "p"):
        return path(*ints(1))
    if name in ("cycle", "c"):
        return cycle(*ints(1))
    if name in ("star",):
        return star(*ints(1))
    if name in ("complete", "k"):
        return complete(*ints(1))
    if name in ("kmn", "bipartite"):
        return complete_bipartite(*ints(2))
    if name == "forest":
        s = int(args[1]) if len(args) > 1 else seed
        return random_forest(int(args[0]), s)
    if name in ("random", "gnp"):
        s = int(args[2]) if len(args) > 2 else seed
        return random_graph(int(args[0]), float(args[1]), s)
    if name == "dag":
        s = int(args[2]) if len(args) > 2 else seed
        return random_dag(int(args[0]), float(args[1]), s)
    if name in ("dpath",):
        return directed_path(*ints(1))
    if name == "union":
        # union:cycle/3+cycle/3  (slashes stand in for colons)
        parts = rest.split("+")
        return disjoint_union(parse_generator(p.replace("/", ":", 1), seed) for p in parts)
    raise ValueError(f"unknown generator {spec!r}")
