"""Text, JSON and DOT formats for graphs, labelings and verification reports."""

from __future__ import annotations

import json
from pathlib import Path

from .abelian import AbelianGroup, parse_group
from .graphs import Digraph, Graph
from .labeling import Labeling, arc_weights, edge_weights

SCHEMA = 1


# -- graphs ------------------------------------------------------------------

def read_edge_list(text: str):
    """First line ``n m`` (optionally ``n m directed``), then m lines ``u v``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) < 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    directed = len(head) > 2 and head[2].lower() in ("d", "directed")
    pairs = []
    for ln in lines[1:]:
        u, v = ln.split()[:2]
        pairs.append((int(u), int(v)))
    if len(pairs) != m:
        raise ValueError(f"header says {m} edges, found {len(pairs)}")
    return Digraph(n, tuple(pairs)) if directed else Graph(n, tuple(pairs))


def write_edge_list(g) -> str:
    if isinstance(g, Digraph):
        lines = [f"{g.n} {g.m} directed"] + [f"{u} {v}" for u, v in g.arcs]
    else:
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g) -> dict:
    if isinstance(g, Digraph):
        return {"schema": SCHEMA, "directed": True, "n": g.n, "arcs": [list(a) for a in g.arcs]}
    return {"schema": SCHEMA, "n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(d: dict):
    if d.get("directed"):
        return Digraph(int(d["n"]), tuple(tuple(a) for a in d["arcs"]), name=d.get("name", ""))
    return Graph(int(d["n"]), tuple(tuple(e) for e in d["edges"]), name=d.get("name", ""))


def load_graph(path):
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        g = graph_from_json(json.loads(text))
    else:
        g = read_edge_list(text)
    if not g.name:
        object.__setattr__(g, "name", p.stem)
    return g


def to_dot(g, lab: Labeling | None = None) -> str:
    directed = isinstance(g, Digraph)
    out = ["digraph G {" if directed else "graph G {"]
    for v in range(g.n):
        attr = f' [label="{v}: {lab[v]}"]' if lab is not None else ""
        out.append(f"  {v}{attr};")
    if directed:
        table = arc_weights(g, lab) if lab is not None else None
        for i, (u, v) in enumerate(g.arcs):
            attr = f' [label="{table.weights[i]}"]' if table else ""
            out.append(f"  {u} -> {v}{attr};")
    else:
        table = edge_weights(g, lab) if lab is not None else None
        for i, (u, v) in enumerate(g.edges):
            attr = f' [label="{table.weights[i]}"]' if table else ""
            out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


# -- labelings ---------------------------------------------------------------

def labeling_to_json(lab: Labeling) -> dict:
    return {"group": str(lab.group), "values": lab.residues()}


def labeling_from_json(d: dict) -> Labeling:
    grp = d["group"]
    if not isinstance(grp, AbelianGroup):
        grp = parse_group(grp)
    return Labeling.from_residues(grp, [tuple(r) for r in d["values"]])


def verification_report(g, lab: Labeling) -> dict:
    table = arc_weights(g, lab) if isinstance(g, Digraph) else edge_weights(g, lab)
    return {
        "weights": [{"edge": list(e), "weight": list(w.residues)} for e, w in zip(table.edges, table.weights)],
        "irregular": table.distinct,
        "witness": None if table.witness is None else [list(e) for e in table.witness],
    }
