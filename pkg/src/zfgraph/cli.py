"""Command-line entry point: ``zfgraph {zf,classify,enumerate,verify,closure-check}``.

Exit codes: 0 success, 1 a counterexample or mismatch was found, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import forcing, verify
from ._backend import BACKEND
from .enumeration import CLASSES, labeled_graphs, stream
from .fixtures import FIXTURES, fixture
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    complement,
    emit_graph6,
    graph_metrics,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .pathcover import BRUTE_FORCE_CAP
from .structure import classify, is_unicyclic, major_vertex_report, sorted_tags, unique_cycle


class UsageError(Exception):
    pass


def _read_graph(args: argparse.Namespace) -> Graph:
    given = [x for x in (args.graph6, args.edgelist, args.fixture) if x is not None]
    if len(given) > 1:
        raise UsageError("give at most one of --graph6, --edgelist, --fixture")
    if args.fixture is not None:
        return fixture(args.fixture, args.order)
    if args.edgelist is not None:
        if args.edgelist == "-":
            return parse_edge_list(sys.stdin.read())
        with open(args.edgelist, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    text = args.graph6
    if text is None:
        lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError("expected exactly one graph6 line on standard input")
        text = lines[0]
    return parse_graph6(text)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", metavar="CODE", help="graph in graph6 format")
    p.add_argument("--edgelist", metavar="FILE", help="edge-list file ('-' for stdin)")
    p.add_argument("--fixture", metavar="NAME", help=f"built-in graph: {', '.join(FIXTURES)}")
    p.add_argument("--order", type=int, help="order for --fixture")
    p.add_argument("--json", action="store_true", help="emit JSON")


def zf_report(g: Graph) -> dict:
    res = forcing.zero_forcing_number(g, with_path_cover=g.n <= BRUTE_FORCE_CAP)
    gbar = complement(g)
    zbar = forcing.zero_forcing_number(gbar)
    trace = forcing.closure(g, res.witness)
    degs = g.degrees()
    delta, delta_bar = min(degs), g.n - 1 - max(degs)
    co_connected = is_connected(g) and is_connected(gbar)
    total = res.z + zbar.z
    upper = 2 * (g.n - 3)
    applies = co_connected and g.n >= 4
    return {
        "graph6": emit_graph6(g),
        "n": g.n,
        "Z": res.z,
        "witness": res.witness.to_list(),
        "bounds": res.bounds.as_dict(),
        "binding_bounds": res.binding_bounds(),
        "subsets_tested": res.subsets_tested,
        "trace": trace.as_dict(),
        "propagation_rounds": trace.round_count,
        "Z_complement": zbar.z,
        "witness_complement": zbar.witness.to_list(),
        "ng_sum": total,
        "ng_bounds": {
            "co_connected": co_connected,
            "lower": delta + delta_bar,
            "upper": upper,
            "lower_holds": total >= delta + delta_bar,
            "upper_holds": (total <= upper) if applies else None,
            "lower_equality": total == delta + delta_bar,
            "upper_equality": applies and total == upper,
        },
    }


def _print_zf(rep: dict) -> None:
    b = rep["ng_bounds"]
    print(f"graph6            {rep['graph6']}  (n={rep['n']})")
    print(f"Z                 {rep['Z']}  witness {rep['witness']}")
    bounds = ", ".join(f"{k}={v}" for k, v in rep["bounds"].items() if v is not None)
    print(f"lower bounds      {bounds}  (binding: {', '.join(rep['binding_bounds']) or 'none'})")
    print(f"subsets tested    {rep['subsets_tested']}")
    print(f"propagation       {rep['propagation_rounds']} rounds")
    for i, rnd in enumerate(rep["trace"]["rounds"], start=1):
        print(f"  round {i}: " + ", ".join(f"{u}->{v}" for u, v in rnd))
    print(f"Z(complement)     {rep['Z_complement']}  witness {rep['witness_complement']}")
    print(f"Z + Z(complement) {rep['ng_sum']}")
    print(f"complement-pair   [{b['lower']}, {b['upper']}]  co-connected={b['co_connected']}")
    upper = "n/a" if b["upper_holds"] is None else b["upper_holds"]
    print(f"  lower holds={b['lower_holds']} upper holds={upper} "
          f"lower equality={b['lower_equality']} upper equality={b['upper_equality']}")


def classify_report(g: Graph) -> dict:
    metrics = graph_metrics(g)
    out = {
        "graph6": emit_graph6(g),
        "tags": sorted_tags(classify(g)),
        "metrics": metrics.as_dict(),
        "major_vertices": major_vertex_report(g).as_dict() if metrics.is_connected else None,
        "cycle": unique_cycle(g) if is_unicyclic(g) else None,
    }
    return out


def cmd_zf(args: argparse.Namespace) -> int:
    rep = zf_report(_read_graph(args))
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        _print_zf(rep)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    rep = classify_report(_read_graph(args))
    if args.json:
        print(json.dumps(rep, indent=2))
        return 0
    print(f"graph6   {rep['graph6']}")
    print(f"tags     {', '.join(rep['tags'])}")
    m = rep["metrics"]
    print(f"degrees  {m['degrees']}  min={m['min_degree']} max={m['max_degree']}")
    print(f"edges    {m['edge_count']}  connected={m['is_connected']}  diameter={m['diameter']}")
    if rep["major_vertices"] is not None:
        mv = rep["major_vertices"]
        print(f"major    {mv['major']}  terminal degree {mv['terminal_degree']}  "
              f"exterior {mv['exterior_major']}")
    if rep["cycle"] is not None:
        print(f"cycle    {rep['cycle']}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    for g in stream(args.graph_class, args.order, args.dedupe):
        print(emit_graph6(g))
    return 0


def _parse_caps(args: argparse.Namespace) -> dict[str, int]:
    caps: dict[str, int] = {}
    if args.extended:
        caps["graphs"] = 7
    for item in args.cap or []:
        cls, _, value = item.partition("=")
        if cls not in verify.DEFAULT_CAPS or not value.isdigit():
            raise UsageError(f"bad --cap {item!r}; use CLASS=N with CLASS in "
                             f"{', '.join(verify.DEFAULT_CAPS)}")
        caps[cls] = int(value)
    return caps


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.all and not args.id:
        raise UsageError("give --all or at least one --id")
    ids = list(verify.REGISTRY) if args.all else args.id
    for i in ids:
        if i not in verify.REGISTRY:
            raise UsageError(f"unknown check id {i!r}")
    caps = _parse_caps(args)
    sweep = verify.Sweep(args.jobs)
    reports = []
    for i in ids:
        cls = verify.REGISTRY[i].graph_class
        cap = args.max_order if args.max_order is not None else caps.get(cls)
        reports.append(verify.run_check(i, cap, sweep=sweep))
    if args.json:
        print(json.dumps({"backend": BACKEND, "reports": [r.as_dict() for r in reports]}, indent=2))
    else:
        print(verify.format_table(reports))
    return 0 if verify.all_passed(reports) else 1


def closure_order_check(max_order: int, trials: int, seed: int) -> dict:
    """Compare synchronous closure with random one-force-at-a-time orders."""
    rng = random.Random(seed)
    checked = 0
    mismatches = []
    for n in range(1, max_order + 1):
        for g in labeled_graphs(n):
            sync_of: dict[int, int] = {}
            for _ in range(trials):
                s = VertexSet(rng.getrandbits(n), n)
                sync = sync_of.get(s.bits)
                if sync is None:
                    sync = sync_of[s.bits] = forcing.closure(g, s).final_black.bits
                if random_order_closure(g, s.bits, rng) != sync:
                    mismatches.append({"graph6": emit_graph6(g), "initial": s.to_list()})
                checked += 1
    return {"seed": seed, "max_order": max_order, "trials": trials,
            "checked": checked, "mismatches": mismatches}


def random_order_closure(g: Graph, black: int, rng: random.Random) -> int:
    """Derived set when one randomly chosen valid force is applied at a time."""
    threshold = forcing.rule_threshold()
    while True:
        moves = []
        for v in range(g.n):
            if black >> v & 1:
                white = g.adj[v] & ~black
                if white and white.bit_count() <= threshold:
                    moves.append(white)
        if not moves:
            return black
        white = rng.choice(moves)
        # under the standard rule ``white`` is one vertex; a weakened rule forces all of them
        black |= white


def cmd_closure_check(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2**32)
    rep = closure_order_check(args.max_order, args.trials, seed)
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        print(f"seed {rep['seed']}: {rep['checked']} (graph, initial set, order) cases up to "
              f"n={rep['max_order']}, {len(rep['mismatches'])} mismatches")
    return 1 if rep["mismatches"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zfgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zf", help="zero forcing number and complement-pair summary")
    _add_graph_input(p)
    p.set_defaults(func=cmd_zf)

    p = sub.add_parser("classify", help="class tags and structural report")
    _add_graph_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="print graph6 lines for a graph class")
    p.add_argument("--class", dest="graph_class", required=True, choices=CLASSES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dedupe", action="store_true", help="one graph per isomorphism class")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run theorem checks over exhaustive sweeps")
    p.add_argument("--id", action="append", help="check id such as T4 (repeatable)")
    p.add_argument("--all", action="store_true", help="run every registered check")
    p.add_argument("--max-order", type=int, help="largest order swept for the chosen checks")
    p.add_argument("--cap", action="append", metavar="CLASS=N",
                   help="per-class order cap, e.g. graphs=6 trees=10 unicyclic=9 family=10")
    p.add_argument("--extended", action="store_true", help="sweep labeled graphs up to order 7")
    p.add_argument("--jobs", type=int, default=os.cpu_count(), help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("closure-check", help="closure order-independence on all small graphs")
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, help="RNG seed (printed; random if omitted)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closure_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"zfgraph {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
