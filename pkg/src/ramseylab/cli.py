"""Command-line surface: constructions, deciders, factors, and recolorings.

Every subcommand prints a single JSON report on stdout:

    {"schema": 1, "command": ..., "inputs": {path: sha256, ...},
     "verdict": {...}, "nodes_explored": ..., "elapsed": ..., "seed": ...}

Reports are deterministic given identical inputs and seed, except for the
`elapsed` field.  Witness colorings are embedded inline for hosts of at most
62 vertices and written to a file otherwise.

Exit codes: 0 success; 2 usage error (bad arguments, unknown subcommand);
3 indeterminate (budget or trial limit hit); 4 internal invariant violation;
5 malformed input file; 6 graph/coloring mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import arrowing, factors, families, recolor
from .errors import (
    BudgetExhaustedError,
    CapExceededError,
    InvariantViolationError,
    RamseyLabError,
    SearchExhaustedError,
)
from .formats import FormatError, coloring_from_text, coloring_to_text, graph_from_graph6, graph_to_graph6
from .graphs import BLUE, EdgeColoring, Graph
from .subgraph import contains_copy

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3
EXIT_INVARIANT = 4
EXIT_BAD_INPUT = 5
EXIT_MISMATCH = 6

SCHEMA_VERSION = 1


class _UsageError(RamseyLabError):
    pass


class _MismatchError(RamseyLabError):
    pass


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return graph_from_graph6(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _load_coloring(path: str, host: Graph) -> EdgeColoring:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return coloring_from_text(text, host=host)
    except FormatError as exc:
        if "does not match" in str(exc):
            raise _MismatchError(str(exc)) from exc
        raise


def _coloring_payload(c: EdgeColoring, witness_out: str | None):
    if c.host.n <= 62 and witness_out is None:
        return {
            "format": "inline",
            "edges": [[u, v, c.color((u, v))] for u, v in c.host.edges],
        }
    path = witness_out or f"witness-{hashlib.sha256(coloring_to_text(c).encode()).hexdigest()[:12]}.txt"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(coloring_to_text(c))
    return {"format": "file", "path": path}


def _verdict_payload(v: arrowing.ArrowingVerdict, witness_out: str | None):
    payload = {"arrows": v.arrows, "method": v.method}
    if v.witness is not None:
        payload["witness"] = _coloring_payload(v.witness, witness_out)
    return payload


def _emit(command: str, inputs: dict[str, str], verdict, nodes: int, t0: float, seed):
    report = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "verdict": verdict,
        "nodes_explored": nodes,
        "elapsed": round(time.monotonic() - t0, 6),
        "seed": seed,
    }
    print(json.dumps(report, sort_keys=True))


# -- subcommand handlers -------------------------------------------------------


def _parse_edge(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise _UsageError(f"expected an edge as 'u,v', got {text!r}")
    return int(parts[0]), int(parts[1])


def _cmd_construct(args, seed, t0) -> int:
    kind = args.kind
    inputs = {}
    coloring = None
    extra = {}
    if kind in ("star", "path", "clique", "cycle"):
        graph = families.basic_family(kind, args.param)
    elif kind == "clique-pendants":
        graph = families.clique_with_pendants(args.t, args.a, args.b)
    elif kind == "caterpillar":
        mid = args.mid if args.mid is not None else 0
        graph = families.suitable_caterpillar(args.s, args.s, mid, args.s)
    elif kind == "uniform-tree":
        gadget = families.uniform_tree(args.k, args.i)
        graph, extra = gadget.graph, {"root": gadget.root}
    elif kind == "lambda":
        T = _load_graph(args.T)
        gamma = _load_graph(args.gamma)
        inputs = {args.T: _sha256(args.T), args.gamma: _sha256(args.gamma)}
        gadget = families.lambda_gadget(T, gamma, args.i)
        graph, coloring, extra = gadget.graph, gadget.witness_coloring, {"root": gadget.root}
    elif kind == "c-gadget":
        gp = _load_graph(args.gamma_prime)
        inputs = {args.gamma_prime: _sha256(args.gamma_prime)}
        gadget = families.c_gadget(gp)
        graph, coloring = gadget.graph, gadget.witness_coloring
        extra = {"root": gadget.root, "co_root": gadget.co_root}
    elif kind == "distinguisher":
        T = _load_graph(args.T)
        inputs = {args.T: _sha256(args.T)}
        gamma = _load_graph(args.gamma) if args.gamma else None
        gp = _load_graph(args.gamma_prime) if args.gamma_prime else None
        J = _load_graph(args.J) if args.J else None
        for name in ("gamma", "gamma_prime", "J"):
            value = getattr(args, name)
            if value:
                inputs[value] = _sha256(value)
        graph, coloring = families.diameter_distinguisher(T, args.t, gamma, gp, J)
    elif kind == "factor-extremal":
        graph, trace, cert = families.factor_extremal_graph(args.p, args.q, args.r)
        extra = {
            "params": list(trace.params),
            "hub": list(trace.hub),
            "odd_components": cert.odd_component_count,
        }
    elif kind == "hypergraph-blowup":
        hyper, graph = families.hypergraph_blowup(
            args.t, args.girth, args.min_degree, args.n, trials=args.trials, seed=seed or 0
        )
        extra = {"hyperedges": sorted(sorted(e) for e in hyper.hyperedges)}
    elif kind == "determiner-chain":
        T = _load_graph(args.T)
        d_graph = _load_graph(args.determiner)
        inputs = {args.T: _sha256(args.T), args.determiner: _sha256(args.determiner)}
        gadget = families.DeterminerGadget(d_graph, _parse_edge(args.beta))
        graph = families.determiner_chain(T, gadget)
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown construction {kind!r}")

    verdict = {"graph6": graph_to_graph6(graph), "n": graph.n, "m": graph.m, **extra}
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(graph_to_graph6(graph) + "\n")
    if coloring is not None:
        verdict["coloring"] = _coloring_payload(coloring, args.coloring_out)
    _emit(f"construct {kind}", inputs, verdict, 0, t0, seed)
    return EXIT_OK


def _cmd_arrows(args, seed, t0) -> int:
    f = _load_graph(args.f)
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    inputs = {p: _sha256(p) for p in (args.g, args.h, args.f)}
    if args.sampled:
        verdict = arrowing.sampled_arrows(f, g, h, samples=args.sampled, seed=seed or 0)
        if verdict is None:
            _emit(
                "arrows",
                inputs,
                {"arrows": None, "method": "sampled", "samples": args.sampled},
                args.sampled,
                t0,
                seed,
            )
            return EXIT_INDETERMINATE
        _emit("arrows", inputs, _verdict_payload(verdict, args.witness_out), verdict.nodes_explored, t0, seed)
        return EXIT_OK
    if args.jobs and args.jobs > 1:
        verdict = arrowing.arrows_parallel(f, g, h, budget=args.budget, jobs=args.jobs)
    else:
        verdict = arrowing.arrows(f, g, h, budget=args.budget)
    _emit("arrows", inputs, _verdict_payload(verdict, args.witness_out), verdict.nodes_explored, t0, seed)
    return EXIT_OK


def _cmd_ramsey_number(args, seed, t0) -> int:
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    inputs = {p: _sha256(p) for p in (args.g, args.h)}
    value = arrowing.ramsey_number(g, h, cap=args.cap, budget=args.budget)
    _emit("ramsey-number", inputs, {"ramsey_number": value}, 0, t0, seed)
    return EXIT_OK


def _cmd_minimal(args, seed, t0) -> int:
    f = _load_graph(args.f)
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    inputs = {p: _sha256(p) for p in (args.f, args.g, args.h)}
    value = arrowing.minimal_ramsey_check(f, g, h, budget=args.budget)
    _emit("minimal", inputs, {"minimal": value}, 0, t0, seed)
    return EXIT_OK


def _cmd_equiv_scan(args, seed, t0) -> int:
    graphs = [_load_graph(p) for p in (args.g1, args.h1, args.g2, args.h2)]
    inputs = {p: _sha256(p) for p in (args.g1, args.h1, args.g2, args.h2)}
    result = arrowing.equivalence_scan(*graphs, max_vertices=args.max_vertices, budget=args.budget)
    verdict = {"kind": result.kind}
    if result.reason:
        verdict["reason"] = result.reason
    if result.distinguisher is not None:
        verdict["distinguisher"] = graph_to_graph6(result.distinguisher)
        verdict["first_pair_arrows"] = result.verdict_first.arrows
        verdict["second_pair_arrows"] = result.verdict_second.arrows
    if result.skipped:
        verdict["skipped"] = [graph_to_graph6(s) for s in result.skipped]
    _emit("equiv-scan", inputs, verdict, 0, t0, seed)
    return EXIT_OK


def _cmd_factor(args, seed, t0) -> int:
    g = _load_graph(args.graph)
    inputs = {args.graph: _sha256(args.graph)}
    witness = factors.has_k_factor(g, args.k)
    if witness is None:
        verdict = {"k": args.k, "factor": None}
    else:
        verdict = {"k": args.k, "factor": sorted([u, v] for u, v in witness.edges)}
    _emit("factor", inputs, verdict, 0, t0, seed)
    return EXIT_OK


def _cmd_belck(args, seed, t0) -> int:
    g = _load_graph(args.graph)
    inputs = {args.graph: _sha256(args.graph)}
    D = [int(x) for x in args.d.split(",")] if args.d else []
    cert = factors.belck_check(g, D, args.p)
    if cert is None:
        verdict = {"p": args.p, "D": sorted(D), "certificate": False}
    else:
        verdict = {
            "p": args.p,
            "D": sorted(cert.D),
            "certificate": True,
            "odd_components": cert.odd_component_count,
        }
    _emit("belck", inputs, verdict, 0, t0, seed)
    return EXIT_OK


def _cmd_recolor(args, seed, t0) -> int:
    f = _load_graph(args.f)
    coloring = _load_coloring(args.coloring, f)
    inputs = {args.f: _sha256(args.f), args.coloring: _sha256(args.coloring)}
    if args.mode == "walk":
        result = recolor.star_clique_recolor(f, coloring, args.s, args.t)
        summary = {"mode": "walk", "s": args.s, "t": args.t}
    else:
        g = _load_graph(args.g)
        inputs[args.g] = _sha256(args.g)
        result, trace = recolor.woven_recolor(
            f, coloring, g, k=args.k, a=args.a, b=args.b, t=args.t
        )
        summary = {
            "mode": "woven",
            "family_size": len(trace.family_B),
            "matching": [[u, v] for u, v in trace.matching_M],
            "hitting_sets": [sorted([list(e) for e in y]) for y in trace.Y_sets],
        }
    out_path = args.out or "recolored.txt"
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(coloring_to_text(result))
    summary["output"] = out_path
    _emit(f"recolor {args.mode}", inputs, summary, 0, t0, seed)
    return EXIT_OK


def verify_determiner(d: Graph, beta, T: Graph, t: int, budget: int = 10_000_000) -> dict:
    """Check the four determiner axioms for (d, beta) against the pair (T, K_t).

    Axioms: (i) d has a (T, K_t)-free coloring; (ii) beta is red in every free
    coloring; (iii) some free coloring turns every edge adjacent to beta blue;
    (iv) the closed neighborhood of beta induces exactly K_t.  Each axiom is
    decided by exhaustive search (via the pruned decider with pinned edges);
    an exhausted budget leaves that axiom as None.
    """
    from .graphs import edge as norm_edge

    beta = norm_edge(*beta)
    if beta not in d.edge_set():
        raise _UsageError(f"beta {beta} is not an edge of the determiner graph")
    target = families.clique(t)
    results: dict[str, bool | None] = {}

    def run(pinned):
        try:
            return arrowing.arrows(d, T, target, budget=budget, pinned=pinned)
        except BudgetExhaustedError:
            return None

    base = run(None)
    results["free_coloring_exists"] = None if base is None else not base.arrows
    blue_beta = run({beta: BLUE})
    results["beta_forced_red"] = None if blue_beta is None else blue_beta.arrows
    u, v = beta
    adjacent = {
        e: BLUE
        for e in d.edges
        if e != beta and (u in e or v in e)
    }
    well = run(adjacent)
    results["well_behaved"] = None if well is None else not well.arrows
    closure = {u, v}
    closure.update(d.neighbors(u))
    closure.update(d.neighbors(v))
    induced = d.induced(closure)
    results["beta_closure_is_clique"] = (
        induced.n == t and induced.m == t * (t - 1) // 2
        and contains_copy(induced, target) is not None
    )
    return results


def _cmd_verify_determiner(args, seed, t0) -> int:
    d = _load_graph(args.d)
    T = _load_graph(args.T)
    inputs = {args.d: _sha256(args.d), args.T: _sha256(args.T)}
    results = verify_determiner(d, _parse_edge(args.beta), T, args.t, budget=args.budget)
    _emit("verify-determiner", inputs, results, 0, t0, seed)
    if any(v is None for v in results.values()):
        return EXIT_INDETERMINATE
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramseylab", description=__doc__)
    parser.add_argument("--seed", type=int, default=None, help="RNG seed (env RAMSEYLAB_SEED overrides)")
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build a named graph or gadget")
    csub = con.add_subparsers(dest="kind", required=True)
    for kind in ("star", "path", "clique", "cycle"):
        p = csub.add_parser(kind)
        p.add_argument("param", type=int)
        _add_output_args(p)
    p = csub.add_parser("clique-pendants")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_output_args(p)
    p = csub.add_parser("caterpillar")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--mid", type=int, default=None)
    _add_output_args(p)
    p = csub.add_parser("uniform-tree")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    _add_output_args(p)
    p = csub.add_parser("lambda")
    p.add_argument("--T", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--i", type=int, required=True)
    _add_output_args(p)
    p = csub.add_parser("c-gadget")
    p.add_argument("--gamma-prime", dest="gamma_prime", required=True)
    _add_output_args(p)
    p = csub.add_parser("distinguisher")
    p.add_argument("--T", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--gamma", default=None)
    p.add_argument("--gamma-prime", dest="gamma_prime", default=None)
    p.add_argument("--J", default=None)
    _add_output_args(p)
    p = csub.add_parser("factor-extremal")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_output_args(p)
    p = csub.add_parser("hypergraph-blowup")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--min-degree", dest="min_degree", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20_000)
    _add_output_args(p)
    p = csub.add_parser("determiner-chain")
    p.add_argument("--T", required=True)
    p.add_argument("--determiner", required=True)
    p.add_argument("--beta", required=True, help="edge of the determiner as 'u,v'")
    _add_output_args(p)

    p = sub.add_parser("arrows", help="decide F -> (G, H)")
    p.add_argument("positional", nargs="*", metavar="g.g6 h.g6 f.g6")
    p.add_argument("--g")
    p.add_argument("--h")
    p.add_argument("--f")
    p.add_argument("--budget", type=int, default=arrowing.DEFAULT_BUDGET)
    p.add_argument("--sampled", type=int, default=None, help="try K random colorings instead")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness-out", dest="witness_out", default=None)

    p = sub.add_parser("ramsey-number")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--budget", type=int, default=arrowing.DEFAULT_BUDGET)

    p = sub.add_parser("minimal")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--budget", type=int, default=arrowing.DEFAULT_BUDGET)

    p = sub.add_parser("equiv-scan")
    p.add_argument("--g1", required=True)
    p.add_argument("--h1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--max-vertices", dest="max_vertices", type=int, required=True)
    p.add_argument("--budget", type=int, default=arrowing.DEFAULT_BUDGET)

    p = sub.add_parser("factor")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("belck")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", default="", help="comma-separated vertex set D")

    p = sub.add_parser("recolor")
    p.add_argument("mode", choices=("walk", "woven"))
    p.add_argument("f")
    p.add_argument("coloring")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--g", default=None, help="woven mode: the graph G (graph6 file)")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify-determiner")
    p.add_argument("--d", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--T", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000_000)

    return parser


def _add_output_args(p):
    p.add_argument("--out", default=None, help="also write the graph6 line to this file")
    p.add_argument("--coloring-out", dest="coloring_out", default=None)


_HANDLERS = {
    "construct": _cmd_construct,
    "arrows": _cmd_arrows,
    "ramsey-number": _cmd_ramsey_number,
    "minimal": _cmd_minimal,
    "equiv-scan": _cmd_equiv_scan,
    "factor": _cmd_factor,
    "belck": _cmd_belck,
    "recolor": _cmd_recolor,
    "verify-determiner": _cmd_verify_determiner,
}


def main(argv=None) -> int:
    t0 = time.monotonic()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "arrows":
            pos = list(args.positional)
            if pos and (args.g or args.h or args.f):
                raise _UsageError("give g/h/f either positionally or as flags, not both")
            if pos:
                if len(pos) != 3:
                    raise _UsageError("positional form needs exactly: g.g6 h.g6 f.g6")
                args.g, args.h, args.f = pos
            if not (args.g and args.h and args.f):
                raise _UsageError("arrows needs --g, --h and --f")
        if args.command == "recolor":
            if args.mode == "walk" and args.s is None:
                raise _UsageError("recolor walk needs --s")
            if args.mode == "woven" and None in (args.g, args.k, args.a, args.b):
                raise _UsageError("recolor woven needs --g, --k, --a and --b")
        seed = args.seed
        env_seed = os.environ.get("RAMSEYLAB_SEED")
        if env_seed is not None:
            seed = int(env_seed)
        return _HANDLERS[args.command](args, seed, t0)
    except _MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExhaustedError, SearchExhaustedError, CapExceededError) as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
