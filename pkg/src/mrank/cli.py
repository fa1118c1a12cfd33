"""Command-line interface: ``mrank <command> ...``.

Exit status: 0 on success, 1 on domain errors (wrong graph class, cap
exceeded, failing selftest), 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import itertools
import json
import sys
from dataclasses import dataclass

from .convexity import INTERVAL_CAP, hull, interval_bruteforce, is_convex, is_independent_def
from .decomposition import atoms, classify_atom, is_independent_charac
from .errors import MrankError, ParseError
from .gadgets import gamma3_gadget, npc_gadget, split_to_bipartite
from .generate import GENERATORS, generate
from .graph import Graph, read_graph, save_graph
from .rank import SOLVERS
from . import selftest as st


@dataclass
class CommandResult:
    exit_code: int
    stdout_payload: str
    diagnostics: str


class UsageError(Exception):
    pass


def _vertex_list(text):
    try:
        return sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}; expected e.g. 0,2,5")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--quiet", action="store_true", help="suppress diagnostics")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=None, help="size cap for exact solvers")

    p = argparse.ArgumentParser(prog="mrank", description="Monophonic convexity and rank toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", parents=[common], help="atoms with borders and petal flags")
    d.add_argument("graph")

    for name, text in [("hull", "monophonic hull of -s"),
                       ("interval", "brute-force interval of -s"),
                       ("convex-check", "is -s convex"),
                       ("check-independent", "is -s m-convexly independent")]:
        c = sub.add_parser(name, parents=[common], help=text)
        c.add_argument("graph")
        c.add_argument("-s", "--set", dest="vertices", type=_vertex_list, required=True)
        if name == "hull":
            c.add_argument("--trace", action="store_true", help="print every addition")
        if name == "check-independent":
            c.add_argument("--via", choices=["definition", "characterization"], default="definition")

    r = sub.add_parser("rank", parents=[common], help="monophonic rank")
    r.add_argument("graph")
    r.add_argument("--method", choices=sorted(SOLVERS), default="auto")

    g = sub.add_parser("gen", parents=[common], help="generate graphs or gadgets")
    g.add_argument("kind", choices=sorted(GENERATORS) + ["split-reduction", "npc-gadget", "gamma3"])
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--p", type=float, default=None)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--source", help="source graph file for gadgets")
    g.add_argument("--legend", help="write the gadget legend JSON sidecar here")

    s = sub.add_parser("selftest", parents=[common], help="run the oracle-equivalence suites")
    s.add_argument("--suite", action="append", choices=sorted(st.SUITES))
    s.add_argument("--n", type=int, action="append", help="source sizes for the npc suite")
    return p


def _load(path):
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _check_vertices(g: Graph, vs):
    bad = [v for v in vs if not 0 <= v < g.n]
    if bad:
        raise UsageError(f"vertex ids out of range 0..{g.n - 1}: {bad}")


def _fmt(vs):
    return " ".join(str(v) for v in sorted(vs))


def _cmd_decompose(args, out):
    g = _load(args.graph)
    d = atoms(g)
    rows = []
    for i, a in enumerate(d.atoms):
        cls = classify_atom(d, i)
        rows.append({"vertices": sorted(a.vertices), "border": sorted(a.border), "petal": cls.is_petal})
    if args.json:
        out.append(json.dumps({"atoms": rows}))
    else:
        for row in rows:
            tag = "petal" if row["petal"] else "-"
            out.append(f"{_fmt(row['vertices'])} | border: {_fmt(row['border'])} | {tag}")


def _cmd_set(args, out):
    g = _load(args.graph)
    _check_vertices(g, args.vertices)
    s = args.vertices
    if args.command == "hull":
        result, trace = hull(g, s)
        if args.json:
            doc = {"hull": sorted(result)}
            if args.trace:
                doc["trace"] = [{"vertex": a.vertex, "pair": list(a.pair), "component": sorted(a.component)}
                                for a in trace.additions]
            out.append(json.dumps(doc))
        else:
            if args.trace:
                for a in trace.additions:
                    out.append(f"+{a.vertex} via {a.pair[0]}-{a.pair[1]} in {_fmt(a.component)}")
            out.append(_fmt(result))
    elif args.command == "interval":
        cap = args.max_n if args.max_n is not None else INTERVAL_CAP
        result = interval_bruteforce(g, s, cap)
        out.append(json.dumps({"interval": sorted(result)}) if args.json else _fmt(result))
    elif args.command == "convex-check":
        ok = is_convex(g, s)
        out.append(json.dumps({"convex": ok}) if args.json else str(ok).lower())
    else:
        check = is_independent_def if args.via == "definition" else is_independent_charac
        ok = check(g, s)
        out.append(json.dumps({"independent": ok}) if args.json else str(ok).lower())


def _cmd_rank(args, out):
    g = _load(args.graph)
    solver = SOLVERS[args.method]
    if args.max_n is not None and args.method in ("brute", "auto"):
        res = solver(g, args.max_n) if args.method == "brute" else solver(g, brute_cap=args.max_n)
    else:
        res = solver(g)
    if args.json:
        doc = {"rank": res.value, "method": res.method, "witness": sorted(res.witness)}
        if res.flower_used is not None:
            doc["flower"] = sorted(res.flower_used)
        out.append(json.dumps(doc))
    else:
        out.append(f"rank: {res.value}")
        out.append(f"method: {res.method}")
        out.append(f"witness: {_fmt(res.witness)}")
        if res.flower_used is not None:
            out.append(f"flower: {_fmt(res.flower_used)}")


def _graph_doc(g):
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _cmd_gen(args, out):
    if args.kind in ("split-reduction", "npc-gadget", "gamma3"):
        if not args.source:
            raise UsageError(f"gen {args.kind} needs --source FILE")
        src = _load(args.source)
        if args.kind == "split-reduction":
            inst = split_to_bipartite(src)
        elif args.kind == "npc-gadget":
            inst = npc_gadget(src, args.k)
        else:
            inst = gamma3_gadget(src)
        sidecar = {"threshold": inst.threshold, "provenance": inst.provenance,
                   "legend": {str(v): lab for v, lab in sorted(inst.vertex_legend.items())}}
        if args.legend:
            with open(args.legend, "w") as fh:
                json.dump(sidecar, fh, indent=1, sort_keys=True)
                fh.write("\n")
        if args.json:
            out.append(json.dumps({"graph": _graph_doc(inst.graph), **sidecar}, sort_keys=True))
        else:
            comment = f"{args.kind}" + (f" threshold {inst.threshold}" if inst.threshold is not None else "")
            out.append(save_graph(inst.graph, comment).rstrip("\n"))
        return
    if args.max_n is not None and args.n > args.max_n:
        raise MrankError(f"n = {args.n} exceeds --max-n {args.max_n}")
    stream = generate(args.kind, args.n, p=args.p, seed=args.seed)
    graphs = list(itertools.islice(stream, args.count))
    if args.json:
        out.append(json.dumps({"graphs": [_graph_doc(g) for g in graphs]}))
    else:
        out.append("\n".join(save_graph(g).rstrip("\n") for g in graphs))


def _cmd_selftest(args, out):
    names = args.suite or list(st.SUITES)
    max_n = args.max_n if args.max_n is not None else 6
    params = st.quick_params(max_n, args.seed, args.n)
    results = []
    for name in names:
        res = st.SUITES[name](**params[name])
        results.append(res)
        if not args.json:
            out.append(res.summary())
            for text, message in res.failures:
                out.append(f"  counterexample: {message}")
                out.extend("    " + line for line in text.rstrip("\n").split("\n"))
    if args.json:
        out.append(json.dumps({"suites": [
            {"name": r.name, "checked": r.checked, "mismatches": r.mismatches,
             "failures": [{"graph": t, "message": m} for t, m in r.failures]} for r in results]}))
    return 0 if all(r.ok for r in results) else 1


def run(argv) -> CommandResult:
    out = []
    err = io.StringIO()
    parser = _build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), "", err.getvalue())
    code = 0
    try:
        if args.command == "decompose":
            _cmd_decompose(args, out)
        elif args.command in ("hull", "interval", "convex-check", "check-independent"):
            _cmd_set(args, out)
        elif args.command == "rank":
            _cmd_rank(args, out)
        elif args.command == "gen":
            _cmd_gen(args, out)
        else:
            code = _cmd_selftest(args, out)
    except (ParseError, UsageError) as exc:
        return CommandResult(2, "", f"mrank: error: {exc}\n")
    except MrankError as exc:
        return CommandResult(1, "", "" if args.quiet else f"mrank: {exc}\n")
    text = "\n".join(out)
    return CommandResult(code, text + "\n" if text else "", err.getvalue())


def main(argv=None):
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout_payload)
    sys.stderr.write(res.diagnostics)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
