"""Command line entry point: ``edgeirreg VERB [options]``.

Exit codes: 0 computed, 1 bad input, 2 budget or search limit exceeded,
3 an internally produced labeling failed verification.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import constructors as C
from .abelian import cyclic, enumerate_groups, parse_group
from .graphs import Digraph, FourSetPartition, Graph, parse_generator
from .formats import (
    SCHEMA,
    labeling_to_json,
    load_graph,
    to_dot,
    verification_report,
)
from .labeling import Labeling
from .solvers import (
    bounds_report,
    conjecture_sweep,
    exact_es,
    exact_esg,
    exact_har,
    max_sidon,
    parity_obstruction,
)

VERBS = ("esg", "es", "har", "sidon", "obstruct", "bounds", "sweep", "label")
STRATEGIES = ("forest", "bipartite", "greedy", "greedy-injective", "compose4", "components", "dag")


class InputError(Exception):
    pass


class VerificationFailure(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgeirreg", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=VERBS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--gen", action="append", help="generator, e.g. cycle:6, kmn:2,3, random:8,0.3,1")
    src.add_argument("--graph", action="append", help="edge-list or JSON graph file")
    p.add_argument("--group", help="group spec such as Z6 or Z2xZ3")
    p.add_argument("--strategy", choices=STRATEGIES)
    p.add_argument("--partition", help="zones per vertex for compose4, e.g. 12,12,22,22")
    p.add_argument("--max", type=int, dest="limit", help="largest parameter value to try")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planar", action="store_true", help="promise that the graph is planar")
    p.add_argument("--c-grid", default="0", help="comma separated c values for sweep")
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    return p


def _graphs(args, rng):
    if args.gen:
        return [parse_generator(s, seed=rng.randrange(2**31)) for s in args.gen]
    if args.graph:
        return [load_graph(path) for path in args.graph]
    raise InputError("one of --gen or --graph is required")


def _one_graph(args, rng):
    gs = _graphs(args, rng)
    if len(gs) != 1:
        raise InputError(f"{args.verb} takes exactly one graph")
    return gs[0]


def _undirected(g):
    if isinstance(g, Digraph):
        raise InputError("this verb needs an undirected graph")
    return g


def _group(args, default=None):
    if args.group:
        try:
            return parse_group(args.group)
        except ValueError as e:
            raise InputError(str(e)) from e
    if default is None:
        raise InputError("--group is required")
    return default


def _certs(res):
    out = {}
    for k, v in res.certificates.items():
        out[k] = labeling_to_json(v) if isinstance(v, Labeling) else v
    return out


def _exact_payload(res, key):
    return {
        key: res.value,
        "status": res.status,
        "start": res.start,
        "nodes": res.nodes,
        "certificates": _certs(res),
        "refutations": res.refutations,
    }


def _verify(g, lab):
    rep = verification_report(g, lab)
    if not rep["irregular"]:
        raise VerificationFailure(f"labeling {lab} fails on {rep['witness']}")
    return rep


# -- verbs -------------------------------------------------------------------

def cmd_esg(args, rng):
    g = _undirected(_one_graph(args, rng))
    limit = args.limit or max(1, C.greedy_col_bound(g))
    res = exact_esg(g, limit, args.budget_nodes, args.budget_secs, args.workers)
    for lab in res.certificates.values():
        _verify(g, lab)
    return _exact_payload(res, "es_g"), res.computed


def cmd_es(args, rng):
    g = _undirected(_one_graph(args, rng))
    limit = args.limit or max(1, C.greedy_col_bound(g))
    res = exact_es(g, limit, args.budget_nodes, args.budget_secs)
    return _exact_payload(res, "es"), res.computed


def cmd_har(args, rng):
    g = _undirected(_one_graph(args, rng))
    limit = args.limit or max(1, C.greedy_injective_bound(g))
    res = exact_har(g, limit, args.budget_nodes, args.budget_secs)
    for lab in res.certificates.values():
        _verify(g, lab)
    return _exact_payload(res, "har"), res.computed


def cmd_sidon(args, rng):
    grp = _group(args)
    rec = max_sidon(grp)
    return {"group": str(grp), "size": rec.size, "set": [list(x.residues) for x in rec.elements]}, True


def cmd_obstruct(args, rng):
    g = _undirected(_one_graph(args, rng))
    groups = [_group(args)] if args.group else enumerate_groups(max(1, g.m))
    found = []
    for grp in groups:
        ob = parity_obstruction(g, grp)
        found.append({"group": str(grp), "obstruction": None if ob is None else ob.reason})
    return {"graph": str(g), "m": g.m, "results": found}, True


def cmd_bounds(args, rng):
    g = _one_graph(args, rng)
    rep = bounds_report(g, args.budget_nodes or 200_000, args.budget_secs, planar=args.planar)
    out = rep.to_dict()
    for key, cert in rep.certificates.items():
        if isinstance(cert, dict):
            out.setdefault("certificates", {})[key] = {k: labeling_to_json(v) for k, v in cert.items()}
        elif isinstance(cert, Labeling):
            out.setdefault("certificates", {})[key] = labeling_to_json(cert)
        else:
            out.setdefault("certificates", {})[key] = cert
    complete = not isinstance(g, Graph) or all(v is not None for v in rep.exact.values())
    return out, complete


def cmd_sweep(args, rng):
    corpus = [_undirected(g) for g in _graphs(args, rng)]
    grid = [int(c) for c in args.c_grid.split(",") if c.strip()]
    rows = conjecture_sweep(corpus, grid, args.budget_nodes or 200_000, args.budget_secs)
    return {"c_grid": grid, "rows": rows}, all(r["es_g"] is not None for r in rows)


def _default_partition(g: Graph) -> FourSetPartition:
    # put whole components on the V12 / V22 sides, largest first
    half = -(-g.n // 2)
    zones = [None] * g.n
    sizes = {"12": 0, "22": 0}
    for comp in sorted(g.components, key=len, reverse=True):
        side = min(sizes, key=lambda z: (sizes[z], z))
        if sizes[side] + len(comp) > half:
            raise InputError("cannot split the components into two halves; pass --partition")
        sizes[side] += len(comp)
        for v in comp:
            zones[v] = side
    return FourSetPartition(tuple(zones))


def _coprime_order(k: int, p: int) -> int:
    while k % p == 0:
        k += 1
    return k


def _label(args, rng):
    g = _one_graph(args, rng)
    strat = args.strategy
    if strat is None:
        raise InputError("--strategy is required for label")
    if strat == "dag":
        if not isinstance(g, Digraph):
            raise InputError("dag strategy needs a digraph (e.g. --gen dag:6,0.4,1)")
        grp = _group(args, cyclic(max(1, C.dag_bound(g))))
        return g, C.label_dag_greedy(g, grp)
    g = _undirected(g)
    if strat == "forest":
        grp = _group(args, cyclic(max(1, g.m)))
        if grp.order < g.m:
            raise InputError(f"group of order {grp.order} is too small for {g.m} edges")
        targets = rng.sample(range(grp.order), g.m)
        plan = C.WeightPlan({e: grp.from_index(t) for e, t in zip(g.edges, targets)})
        return g, C.label_forest(g, grp, plan)
    if strat == "bipartite":
        side = g.bipartition()
        a = [v for v in range(g.n) if side and side[v] == side[0]] if side else []
        b = [v for v in range(g.n) if side and side[v] != side[0]]
        if not side or not b or g.m != len(a) * len(b):
            raise InputError("bipartite strategy needs a complete bipartite graph")
        grp = _group(args, cyclic(g.m))
        lab = C.label_complete_bipartite(len(a), len(b), grp)
        vals = [None] * g.n
        for i, v in enumerate(a + b):
            vals[v] = lab[i]
        return g, Labeling(grp, tuple(vals))
    if strat == "greedy":
        grp = _group(args, cyclic(max(1, C.greedy_col_bound(g))))
        return g, C.label_greedy_col(g, grp)
    if strat == "greedy-injective":
        grp = _group(args, cyclic(max(1, C.greedy_injective_bound(g))))
        return g, C.label_greedy_injective(g, grp)
    if strat == "compose4":
        if args.partition:
            part = FourSetPartition(tuple(z.strip() for z in args.partition.split(",")))
        else:
            part = _default_partition(g)
        gp = _group(args, cyclic(_coprime_order(max(2, C.greedy_col_bound(g)), 3)))
        sub = C.four_set_sublabeling(g, part, gp)
        if not sub:
            return g, sub
        return g, C.compose_four_set(g, part, gp, sub)
    if strat == "components":
        q = len(g.components)
        if q < 2:
            raise InputError("components strategy needs at least two components")
        p = C.smallest_odd_prime_at_least(q)
        need = max(max(1, C.greedy_col_bound(g.subgraph(c)[0])) for c in g.components)
        gp = _group(args, cyclic(_coprime_order(max(2, need), p)))
        return g, C.label_components(g, gp, p)
    raise InputError(f"unknown strategy {strat}")


def cmd_label(args, rng):
    g, lab = _label(args, rng)
    if isinstance(lab, C.Stuck):
        return {"strategy": args.strategy, "status": "stuck", "vertex": lab.vertex}, False
    rep = _verify(g, lab)
    out = {"strategy": args.strategy, "status": "ok", "labeling": labeling_to_json(lab), "verification": rep}
    if args.format == "dot":
        out["dot"] = to_dot(g, lab)
    return out, True


COMMANDS = {
    "esg": cmd_esg,
    "es": cmd_es,
    "har": cmd_har,
    "sidon": cmd_sidon,
    "obstruct": cmd_obstruct,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
    "label": cmd_label,
}


def _table(payload: dict) -> str:
    lines = []
    for k, v in payload.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        lines.append(f"{k:>14}  {v}")
    return "\n".join(lines)


def run(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    rng = random.Random(args.seed)
    try:
        payload, complete = COMMANDS[args.verb](args, rng)
    except (InputError, ValueError, OSError) as e:
        print(f"edgeirreg: error: {e}", file=err)
        return 1
    except VerificationFailure as e:
        print(f"edgeirreg: internal verification failure: {e}", file=err)
        return 3
    payload = {"schema": SCHEMA, "verb": args.verb, "seed": args.seed, **payload}
    if args.format == "dot" and "dot" in payload:
        out.write(payload["dot"])
    elif args.format == "table":
        out.write(_table(payload) + "\n")
    else:
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0 if complete else 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
