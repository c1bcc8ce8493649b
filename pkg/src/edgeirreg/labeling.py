"""Vertex labelings, edge weights and the edge-irregularity verifier."""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbelianGroup, GroupElement, GroupMismatch
from .graphs import Digraph, Graph

__all__ = [
    "Labeling",
    "WeightTable",
    "edge_weights",
    "arc_weights",
    "is_edge_irregular",
    "is_arc_irregular",
    "is_injective",
]


@dataclass(frozen=True)
class Labeling:
    group: AbelianGroup
    values: tuple[GroupElement, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        for v in vals:
            if not isinstance(v, GroupElement) or v.group != self.group:
                raise GroupMismatch(f"label {v!r} is not in {self.group}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_residues(cls, group: AbelianGroup, rows) -> Labeling:
        return cls(group, tuple(group.element(r) for r in rows))

    @classmethod
    def from_indices(cls, group: AbelianGroup, idx) -> Labeling:
        return cls(group, tuple(group.from_index(i) for i in idx))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v: int) -> GroupElement:
        return self.values[v]

    def residues(self) -> list[list[int]]:
        return [list(x.residues) for x in self.values]

    def indices(self) -> list[int]:
        return [x.index for x in self.values]

    def translate(self, c: GroupElement, vertices=None) -> Labeling:
        """Add ``c`` to the labels of ``vertices`` (default: all)."""
        vs = set(range(len(self))) if vertices is None else set(vertices)
        return Labeling(self.group, tuple(x + c if i in vs else x for i, x in enumerate(self.values)))

    def __str__(self):
        return f"[{', '.join(map(str, self.values))}] in {self.group}"


@dataclass(frozen=True)
class WeightTable:
    """Edge (or arc) weights in lexicographic edge order.

    ``witness`` holds the first pair of edges found with equal weight.
    """

    edges: tuple[tuple[int, int], ...]
    weights: tuple[GroupElement, ...]
    witness: tuple[tuple[int, int], tuple[int, int]] | None

    @property
    def distinct(self) -> bool:
        return self.witness is None

    def __bool__(self):
        return self.distinct

    def as_dict(self) -> dict[tuple[int, int], GroupElement]:
        return dict(zip(self.edges, self.weights))


def _table(pairs, weights) -> WeightTable:
    first: dict[tuple[int, ...], tuple[int, int]] = {}
    witness = None
    for e, w in zip(pairs, weights):
        prev = first.setdefault(w.residues, e)
        if prev is not e and witness is None:
            witness = (prev, e)
    return WeightTable(tuple(pairs), tuple(weights), witness)


def _check_cover(n: int, lab: Labeling):
    if len(lab) != n:
        raise ValueError(f"labeling has {len(lab)} values but the graph has {n} vertices")


def edge_weights(g: Graph, lab: Labeling) -> WeightTable:
    _check_cover(g.n, lab)
    add = lab.group.add
    return _table(g.edges, [add(lab[u], lab[v]) for u, v in g.edges])


def arc_weights(d: Digraph, lab: Labeling) -> WeightTable:
    """Arc weight is label(tail) - label(head)."""
    _check_cover(d.n, lab)
    sub = lab.group.sub
    return _table(d.arcs, [sub(lab[u], lab[v]) for u, v in d.arcs])


def is_edge_irregular(g: Graph, lab: Labeling):
    """``(ok, witness)``; witness is a pair of edges with equal weight, or None."""
    t = edge_weights(g, lab)
    return t.distinct, t.witness


def is_arc_irregular(d: Digraph, lab: Labeling):
    t = arc_weights(d, lab)
    return t.distinct, t.witness


def is_injective(lab: Labeling) -> bool:
    return len({x.residues for x in lab.values}) == len(lab.values)
