"""Command-line front end: ``mvsets {analyze,certify,reduce,census,fixtures}``.

Exit codes: 0 success, 1 counterexample found (census disagreement or failed
reduction check), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path

from . import census as cen
from . import constructions as con
from . import graphcore as gc
from . import invariants as inv
from . import reduction as red
from . import structure as st
from .visibility import VARIANTS, check

ANALYSIS_SCHEMA = "mvsets.analysis/1"
CERTIFY_SCHEMA = "mvsets.certify/1"
FIXTURES_SCHEMA = "mvsets.fixtures/1"

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2

SKIPPED_CAP = "skipped(cap)"
SKIPPED_DISCONNECTED = "skipped(disconnected)"


class InputError(Exception):
    pass


# -- input ----------------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def load_input(args) -> tuple[gc.Graph, con.Fixture | None]:
    """Graph from ``--fixture`` or a file; rotation systems may be hatted."""
    if getattr(args, "fixture", None):
        try:
            fx = con.fixture_info(args.fixture)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        return fx.graph, fx
    if not getattr(args, "graph", None):
        raise InputError("give a graph file or --fixture NAME")
    text = _read_text(args.graph)
    try:
        if args.format == "rotation":
            R = con.parse_rotation_system(text)
            if args.hat:
                hat = con.fullerene_hat(R)
                return hat.graph, con.Fixture(hat.graph, marked=hat.pentagon_centers)
            return R.graph(), None
        fmt = {"edge-list": "edgelist"}.get(args.format, args.format)
        return gc.load_graph(text, fmt), None
    except (gc.GraphError, ValueError) as exc:
        raise InputError(f"cannot parse {args.graph}: {exc}") from None


def caps_from_args(args) -> inv.SolverCaps:
    kw = {f.name: getattr(args, f"cap_{f.name}") for f in fields(inv.SolverCaps)}
    return inv.SolverCaps(**kw)


def parse_vertex_set(spec: str, G: gc.Graph, labels=()) -> tuple[int, ...]:
    """Comma or space separated vertex ids or labels; empty string is the empty set."""
    out = set()
    for tok in spec.replace(",", " ").split():
        if tok.lstrip("-").isdigit():
            v = int(tok)
        elif tok in labels:
            v = labels.index(tok)
        else:
            raise InputError(f"unknown vertex {tok!r}")
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range 0..{G.n - 1}")
        out.add(v)
    return tuple(sorted(out))


# -- analyze --------------------------------------------------------------------

PREDICATES = {
    "edge_critical": st.is_edge_critical,
    "vertex_critical": st.is_vertex_critical,
    "dense_diamond": st.is_dense_diamond,
    "total_mv_independent": st.total_mv_independent_condition,
    "strong_critical_set": st.has_independent_strong_critical_set,
    "join": st.is_join_graph,
}


@dataclass
class AnalysisReport:
    name: str
    order: int
    size: int
    connected: bool
    diameter: object
    girth: object
    invariants: dict = field(default_factory=dict)
    predicates: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"schema": ANALYSIS_SCHEMA, "name": self.name, "order": self.order,
                "size": self.size, "connected": self.connected, "diameter": self.diameter,
                "girth": self.girth, "invariants": self.invariants, "predicates": self.predicates}


def _finite(x):
    return None if x == gc.INF else int(x)


def analyze(G: gc.Graph, caps: inv.SolverCaps = inv.DEFAULT_CAPS,
            names=inv.INVARIANT_NAMES) -> AnalysisReport:
    rep = AnalysisReport(G.name, G.n, G.m, G.is_connected,
                         _finite(gc.diameter(G)), _finite(gc.girth(G)))
    for name in names:
        if name != "alpha" and not G.is_connected:
            rep.invariants[name] = SKIPPED_DISCONNECTED
            continue
        try:
            res = inv.compute(G, name, caps)
        except inv.CapExceeded:
            rep.invariants[name] = SKIPPED_CAP
            continue
        rep.invariants[name] = {"value": res.value, "certificate": list(res.certificate),
                                "verified": inv.verify_certificate(G, res)}
    for name, fn in PREDICATES.items():
        if name != "join" and not G.is_connected:
            rep.predicates[name] = SKIPPED_DISCONNECTED
            continue
        flag, witness = fn(G)
        rep.predicates[name] = {"value": flag, "witness": _jsonable(witness)}
    return rep


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def _print_analysis(rep: AnalysisReport, out) -> None:
    print(f"graph {rep.name or '-'}: n={rep.order} m={rep.size} connected={rep.connected} "
          f"diameter={rep.diameter} girth={rep.girth}", file=out)
    for name, val in rep.invariants.items():
        if isinstance(val, str):
            print(f"  {name:<8} {val}", file=out)
        else:
            print(f"  {name:<8} {val['value']:<4} {val['certificate']}", file=out)
    for name, val in rep.predicates.items():
        if isinstance(val, str):
            print(f"  {name:<22} {val}", file=out)
        else:
            w = "" if val["witness"] is None else f"  witness {val['witness']}"
            print(f"  {name:<22} {str(val['value']).lower()}{w}", file=out)


def cmd_analyze(args) -> int:
    G, _ = load_input(args)
    names = args.only.split(",") if args.only else inv.INVARIANT_NAMES
    unknown = set(names) - set(inv.INVARIANT_NAMES)
    if unknown:
        raise InputError(f"unknown invariants {sorted(unknown)}")
    rep = analyze(G, caps_from_args(args), names)
    if args.json:
        json.dump(rep.to_dict(), sys.stdout, sort_keys=True)
        print()
    else:
        _print_analysis(rep, sys.stdout)
    return EXIT_OK


# -- certify --------------------------------------------------------------------

def certify(G: gc.Graph, S, variants=VARIANTS, labels=()) -> dict:
    mask = gc.to_mask(S)
    results = {}
    for var in variants:
        if var in ("total", "dual") and not G.is_connected:
            results[var] = {"holds": SKIPPED_DISCONNECTED, "witness": None}
            continue
        verdict = check(G, mask, var)
        w = verdict.witness
        results[var] = {"holds": verdict.holds, "witness": None if w is None else list(w)}
        if w is not None and labels:
            results[var]["witness_labels"] = [labels[x] for x in w]
    return {"schema": CERTIFY_SCHEMA, "set": list(gc.members(mask)),
            "independent": G.is_independent(mask), "results": results}


def cmd_certify(args) -> int:
    G, fx = load_input(args)
    labels = fx.labels if fx else ()
    if args.roles:
        try:
            labels = tuple(json.loads(_read_text(args.roles))["roles"])
        except (ValueError, KeyError) as exc:
            raise InputError(f"bad roles sidecar: {exc}") from None
    if args.marked:
        if fx is None or not fx.marked:
            raise InputError("--marked needs a fixture with a marked set")
        S = fx.marked
    else:
        S = parse_vertex_set(args.set or "", G, labels)
    variants = VARIANTS if args.variant == "all" else (args.variant,)
    rep = certify(G, S, variants, labels)
    if args.json:
        json.dump(rep, sys.stdout, sort_keys=True)
        print()
    else:
        print(f"set {rep['set']} independent={str(rep['independent']).lower()}")
        for var, r in rep["results"].items():
            if isinstance(r["holds"], str):
                print(f"  {var:<6} {r['holds']}")
                continue
            tag = "PASS" if r["holds"] else "FAIL"
            extra = ""
            if r["witness"] is not None:
                extra = f"  witness {tuple(r.get('witness_labels', r['witness']))}"
            print(f"  {var:<6} {tag}{extra}")
    return EXIT_OK


# -- reduce ---------------------------------------------------------------------

def cmd_reduce(args) -> int:
    text = _read_text(args.cnf)
    try:
        F = red.parse_dimacs(text, repair=args.repair)
        g = red.gadget(F, args.d)
    except (red.CnfError, gc.GraphError) as exc:
        raise InputError(str(exc)) from None
    side = g.sidecar()
    if args.out:
        prefix = Path(args.out)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        Path(f"{prefix}.edges").write_text(gc.to_edge_list(g.graph))
        Path(f"{prefix}.g6").write_text(gc.to_graph6(g.graph) + "\n")
        Path(f"{prefix}.json").write_text(json.dumps(side, indent=2, sort_keys=True) + "\n")
    code = EXIT_OK
    if args.verify:
        rep = red.verify_claims(F, args.d, caps_from_args(args))
        side["verify"] = rep.to_dict()
        if not rep.passed:
            code = EXIT_COUNTEREXAMPLE
    if args.json:
        json.dump(side, sys.stdout, sort_keys=True, default=list)
        print()
    else:
        print(f"G_{g.d}(F): n={g.n} l={g.l} order={g.graph.n} target={g.target}")
        if args.verify:
            v = side["verify"]
            sig = " ".join(f"{k}={x}" for k, x in v["sigma"].items())
            print(f"  alpha={v['alpha']} sat={str(v['satisfiable']).lower()} {sig}")
            print(f"  {'PASS' if v['passed'] else 'FAIL'}")
    return code


# -- census ---------------------------------------------------------------------

def cmd_census(args) -> int:
    theorems = args.theorem or list(cen.THEOREMS)
    unknown = set(theorems) - set(cen.THEOREMS)
    if unknown:
        raise InputError(f"unknown theorems {sorted(unknown)}; choose from {cen.THEOREMS}")
    lo, hi = args.n_min, args.n_max
    if lo < 1 or hi < lo:
        raise InputError("need 1 <= n-min <= n-max")
    if args.mode == "exhaustive":
        if hi > gc.MAX_ENUM_ORDER:
            raise InputError(f"exhaustive mode supports n <= {gc.MAX_ENUM_ORDER}")
        graphs = cen.exhaustive_corpus(lo, hi)
    else:
        if hi > cen.MAX_SUBSET_ORDER and set(theorems) - {"chains"}:
            raise InputError(f"subset theorems need n <= {cen.MAX_SUBSET_ORDER}; use --theorem chains")
        graphs = cen.random_corpus(lo, hi, args.p, args.seed, args.count)
    caps = caps_from_args(args)
    sink = open(args.out, "w") if args.out else None
    records = []
    try:
        for rec in cen.run_census(graphs, theorems, args.workers, caps):
            records.append(rec)
            if sink:
                sink.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
    except inv.CapExceeded as exc:
        raise InputError(str(exc)) from None
    finally:
        if sink:
            sink.close()
    summary = cen.summarize(records)
    summary["mode"] = args.mode
    summary["n_range"] = [lo, hi]
    if args.mode == "random":
        summary.update(seed=args.seed, p=args.p, count=args.count)
    if args.json:
        json.dump(summary, sys.stdout, sort_keys=True)
        print()
    else:
        print(f"census {args.mode} n={lo}..{hi}: {summary['graphs']} graphs")
        for name, s in summary["theorems"].items():
            print(f"  {name:<4} checked={s['checked']:<6} disagree={s['disagree']}")
        for ce in summary["counterexamples"]:
            print(json.dumps(ce, sort_keys=True))
    return EXIT_COUNTEREXAMPLE if summary["disagreements"] else EXIT_OK


# -- fixtures -------------------------------------------------------------------

def cmd_fixtures(args) -> int:
    if args.show:
        try:
            fx = con.fixture_info(args.show)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        G = fx.graph
        if args.format == "graph6":
            print(gc.to_graph6(G))
        else:
            sys.stdout.write(gc.to_edge_list(G))
        return EXIT_OK
    rows = []
    for name in con.fixture_names():
        if "<" in name:
            rows.append({"name": name, "family": True})
            continue
        fx = con.fixture_info(name)
        rows.append({"name": name, "order": fx.graph.n, "size": fx.graph.m,
                     "marked": list(fx.marked), "note": fx.note})
    if args.json:
        json.dump({"schema": FIXTURES_SCHEMA, "fixtures": rows}, sys.stdout, sort_keys=True)
        print()
    else:
        for r in rows:
            if r.get("family"):
                print(f"{r['name']:<18} (family)")
            else:
                print(f"{r['name']:<18} n={r['order']:<3} m={r['size']:<3} {r['note']}")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def _add_caps(p) -> None:
    g = p.add_argument_group("solver caps (graphs above a cap are reported as skipped(cap))")
    for f in fields(inv.SolverCaps):
        g.add_argument(f"--cap-{f.name.replace('_', '-')}", dest=f"cap_{f.name}", type=int,
                       default=f.default, metavar="N", help=f"default {f.default}")


def _add_graph_input(p) -> None:
    p.add_argument("graph", nargs="?", help="graph file ('-' for stdin)")
    p.add_argument("--fixture", help="built-in graph instead of a file (see 'fixtures')")
    p.add_argument("--format", default="auto", choices=["auto", "edge-list", "graph6", "rotation"])
    p.add_argument("--hat", action="store_true", help="with --format rotation: add face centres")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mvsets", description="Mutual-visibility sets in graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants and structural flags of a graph")
    _add_graph_input(p)
    p.add_argument("--only", help="comma-separated invariant names")
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="check a vertex set against the visibility families")
    _add_graph_input(p)
    p.add_argument("--set", default="", help="vertices, e.g. '0,3,5' or fixture labels 'x1,x6'")
    p.add_argument("--marked", action="store_true", help="use the fixture's marked set")
    p.add_argument("--roles", help="gadget sidecar JSON whose roles serve as labels")
    p.add_argument("--variant", default="all", choices=("all",) + VARIANTS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("reduce", help="build the diameter-d gadget of a 3-CNF")
    p.add_argument("cnf", help="DIMACS cnf file ('-' for stdin)")
    p.add_argument("-d", type=int, default=4, help="target diameter (>= 3)")
    p.add_argument("--out", help="output prefix for .edges, .g6 and .json")
    p.add_argument("--repair", action="store_true", help="pad missing literals instead of rejecting")
    p.add_argument("--verify", action="store_true", help="check the SAT equivalence by exact solving")
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("census", help="validate the characterizations on small graphs")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--p", type=float, default=0.3, help="edge probability (random mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="graphs to sample (random mode)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--theorem", action="append", choices=cen.THEOREMS,
                   help="restrict to a theorem (repeatable)")
    p.add_argument("--out", help="write one JSON record per graph to this file")
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("fixtures", help="list built-in graphs")
    p.add_argument("--show", metavar="NAME", help="print one fixture")
    p.add_argument("--format", default="edge-list", choices=["edge-list", "graph6"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"mvsets: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
