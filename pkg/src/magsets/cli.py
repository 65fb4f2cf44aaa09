"""Command-line surface: reproducible, machine-readable output.

Commands emitting graphs (``family``, ``reduce``) print edge-list text so
they compose with the analysis commands over pipes; analysis commands emit
a single JSON run report.  Exit codes: 0 done exactly, 2 parse error,
3 budget or cap exceeded, 1 other input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import NoReturn, Optional

from . import __version__
from .digraph import OrientedGraph, UndirectedGraph
from .errors import (
    BudgetExceededError,
    GraphError,
    ParseError,
    TooLargeError,
    TooManyEdgesError,
)
from .families import (
    bipartite_extremal_orientation,
    construction_gj,
    cycle_orientation,
    directed_path,
    flipped_tournament,
    girth_alternating_orientation,
    rooted_tree_orientation,
    transitive_tournament,
)
from .formats import parse_edge_list, to_dot, write_edge_list
from .monitoring import forced_vertices, is_extremal, min_meg_set
from .reductions import (
    Nae3SatInstance,
    VertexCoverInstance,
    nae3sat_to_graph,
    parse_nae3sat,
    vc_to_mag_instance,
    verify_nae_reduction,
    verify_vc_reduction,
)
from .solver import SolverConfig, Strategy, min_mag_set
from .spectrum import DEFAULT_EDGE_CAP, mag_plus_at_least_n, spectrum

SCHEMA = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _report(args: argparse.Namespace, text: str, result: dict, stats: Optional[dict] = None) -> dict:
    return {
        "schema": SCHEMA,
        "command": args.command,
        "input_digest": _digest(text),
        "result": result,
        "stats": stats or {},
        "wall_time": None,  # filled by _emit
    }


def _emit(report: dict, started: float) -> None:
    report["wall_time"] = round(time.perf_counter() - started, 6)
    json.dump(report, sys.stdout)
    sys.stdout.write("\n")


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(max_nodes=args.budget, strategy=Strategy(args.strategy))


def _need_directed(graph) -> OrientedGraph:
    if not isinstance(graph, OrientedGraph):
        raise ParseError("a directed edge list is required")
    return graph


def _need_undirected(graph) -> UndirectedGraph:
    if not isinstance(graph, UndirectedGraph):
        raise ParseError("an undirected edge list is required")
    return graph


def cmd_mag(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = _read_input(args.input)
    g = _need_directed(parse_edge_list(text))
    res = min_mag_set(g, _solver_config(args))
    report = _report(
        args,
        text,
        {
            "size": res.size,
            "witness": list(res.witness),
            "forced": sorted(res.forced),
            "coverage": {str(a): list(pair) for a, pair in sorted(res.coverage.items())},
            "optimal": res.optimal,
        },
        {"nodes": res.nodes},
    )
    _emit(report, started)
    return 0 if res.optimal else EXIT_BUDGET


def cmd_meg(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = _read_input(args.input)
    G = _need_undirected(parse_edge_list(text))
    size, witness = min_meg_set(G, max_nodes=args.budget)
    _emit(_report(args, text, {"size": size, "witness": sorted(witness)}), started)
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = _read_input(args.input)
    G = _need_undirected(parse_edge_list(text))
    sp = spectrum(
        G,
        _solver_config(args),
        max_edges=args.max_edges,
        threads=args.threads,
        stop_at_two=args.stop_at_two,
        stop_at_n=args.stop_at_n,
    )
    _emit(
        _report(
            args,
            text,
            {
                "mag_minus": sp.mag_minus,
                "mag_plus": sp.mag_plus,
                "spectrum": sorted(sp.spectrum),
                "gap": sp.gap,
                "witness_min": sp.witness_min_bits(G.m),
                "witness_max": sp.witness_max_bits(G.m),
            },
        ),
        started,
    )
    return 0


def cmd_extremal(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = _read_input(args.input)
    graph = parse_edge_list(text)
    if isinstance(graph, OrientedGraph):
        ok, counterexample = is_extremal(graph)
        result = {"extremal": ok, "counterexample": counterexample}
    else:
        result = {"mag_plus_is_n": mag_plus_at_least_n(graph, max_edges=args.max_edges)}
    _emit(_report(args, text, result), started)
    return 0


def cmd_forced(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    text = _read_input(args.input)
    g = _need_directed(parse_edge_list(text))
    report = forced_vertices(g)
    _emit(
        _report(
            args,
            text,
            {
                "forced": sorted(report.vertices),
                "reasons": {
                    str(v): {"rule": rule.value, "witness": wit}
                    for v, (rule, wit) in sorted(report.reasons.items())
                },
            },
        ),
        started,
    )
    return 0


def _build_family(args: argparse.Namespace):
    kind = args.kind
    if kind == "path":
        return directed_path(args.n)
    if kind == "cycle":
        sources = [int(t) for t in args.pattern.split(",")] if args.pattern else None
        sinks = [int(t) for t in args.sinks.split(",")] if args.sinks else None
        return cycle_orientation(args.n, args.cycle_class, d=args.d, sources=sources, sinks=sinks)
    if kind == "tournament":
        return transitive_tournament(args.n)
    if kind == "flipped-tournament":
        return flipped_tournament(args.n)
    if kind == "gj":
        return construction_gj(args.j)
    if kind == "rooted-tree":
        T = _need_undirected(parse_edge_list(_read_input(args.input)))
        return rooted_tree_orientation(T, args.root)
    if kind == "bipartite":
        G = _need_undirected(parse_edge_list(_read_input(args.input)))
        return bipartite_extremal_orientation(G)
    if kind == "girth":
        G = _need_undirected(parse_edge_list(_read_input(args.input)))
        return girth_alternating_orientation(G)
    raise ParseError(f"unknown family kind {kind!r}")


def cmd_family(args: argparse.Namespace) -> int:
    graph = _build_family(args)
    if args.format == "dot":
        sys.stdout.write(to_dot(graph))
    else:
        sys.stdout.write(write_edge_list(graph))
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    if args.problem == "nae3sat":
        art = nae3sat_to_graph(parse_nae3sat(text))
    else:
        G = _need_undirected(parse_edge_list(text))
        art = vc_to_mag_instance(VertexCoverInstance(G, args.k))
    comments = [f"role {v} {label}" for v, label in sorted(art.roles.items())]
    if art.target is not None:
        comments.append(f"target {art.target}")
    if args.format == "dot":
        sys.stdout.write(to_dot(art.graph))
    else:
        sys.stdout.write(write_edge_list(art.graph, trailing_comments=comments))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.check == "nae":
        text = _read_input(args.input)
        ok = verify_nae_reduction(parse_nae3sat(text), max_edges=args.max_edges)
        _emit(_report(args, text, {"verified": ok}), started)
        return 0 if ok else 1
    if args.check == "vc":
        text = _read_input(args.input)
        G = _need_undirected(parse_edge_list(text))
        ok = verify_vc_reduction(VertexCoverInstance(G, args.k), _solver_config(args))
        _emit(_report(args, text, {"verified": ok}), started)
        return 0 if ok else 1
    if args.check == "family":
        failures = _verify_family_forms(args)
        _emit(_report(args, "", {"verified": not failures, "failures": failures}), started)
        return 0 if not failures else 1
    if args.check == "thm32":
        failures = _verify_extremal_random(args)
        _emit(_report(args, "", {"verified": not failures, "failures": failures}), started)
        return 0 if not failures else 1
    raise ParseError(f"unknown verification {args.check!r}")


def _verify_family_forms(args: argparse.Namespace) -> list[str]:
    """Closed-form spot checks for every generated family at small sizes."""
    from .families import cycle_c0, cycle_c1, cycle_c2, cycle_c3

    cfg = _solver_config(args)
    failures = []

    def check(label: str, got: int, want: int) -> None:
        if got != want:
            failures.append(f"{label}: got {got}, want {want}")

    for n in range(3, args.max_n + 1):
        check(f"C_{n}^0", min_mag_set(cycle_c0(n), cfg).size, 2)
        if n % 2 == 0:
            check(f"C_{n}^1", min_mag_set(cycle_c1(n), cfg).size, 4)
        for d in range(1, n):
            if 2 * d != n:
                check(f"C_{n}^2(d={d})", min_mag_set(cycle_c2(n, d), cfg).size, 3)
        if n >= 5:
            g = cycle_c3(n, [0, 2])
            src, snk = g.sources_and_sinks()
            check(f"C_{n}^3", min_mag_set(g, cfg).size, len(src) + len(snk))
    for n in range(3, args.max_n + 1):
        check(f"transitive K_{n}", min_mag_set(transitive_tournament(n), cfg).size, n)
        check(f"flipped K_{n}", min_mag_set(flipped_tournament(n), cfg).size, n - 1)
        check(f"directed P_{n}", min_mag_set(directed_path(n), cfg).size, 2)
    return failures


def _verify_extremal_random(args: argparse.Namespace) -> list[str]:
    """Random weakly connected digraphs: extremal test vs exact size."""
    import random

    rng = random.Random(args.seed)
    cfg = _solver_config(args)
    failures = []
    done = 0
    while done < args.samples:
        n = rng.randint(2, args.max_n)
        arcs = []
        for i in range(n):
            for j in range(i + 1, n):
                r = rng.random()
                if r < 1 / 3:
                    arcs.append((i, j))
                elif r < 2 / 3:
                    arcs.append((j, i))
        g = OrientedGraph(n, tuple(arcs))
        if g.m == 0 or not g.is_weakly_connected():
            continue
        done += 1
        if is_extremal(g)[0] != (min_mag_set(g, cfg).size == g.n):
            failures.append(f"mismatch on arcs={g.arcs}")
    return failures


def cmd_export_dot(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    sys.stdout.write(to_dot(parse_edge_list(text)))
    return 0


def _add_common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        p.add_argument("input", nargs="?", default="-", help="edge-list file or '-' for stdin")
    p.add_argument("--json", action="store_true", help="JSON output (the default for analysis commands)")
    p.add_argument("--budget", type=int, default=10_000_000, help="search-node budget")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP, help="orientation-enumeration cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magsets", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mag", help="exact minimum MAG-set of an oriented graph")
    _add_common(p)
    p.set_defaults(func=cmd_mag)

    p = sub.add_parser("meg", help="exact minimum MEG-set of an undirected graph")
    _add_common(p)
    p.set_defaults(func=cmd_meg)

    p = sub.add_parser("spectrum", help="mag over all orientations of an undirected graph")
    _add_common(p)
    p.add_argument("--stop-at-two", action="store_true", help="early exit once mag 2 is found")
    p.add_argument("--stop-at-n", action="store_true", help="early exit once mag n is found")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("extremal", help="extremal test (directed) or orientability to mag=n (undirected)")
    _add_common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("forced", help="vertices provably in every MAG-set")
    _add_common(p)
    p.set_defaults(func=cmd_forced)

    p = sub.add_parser("family", help="emit a generated family member as an edge list")
    p.add_argument("kind", choices=[
        "path", "cycle", "tournament", "flipped-tournament", "gj",
        "rooted-tree", "bipartite", "girth",
    ])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--kind", dest="cycle_class", default="C0",
                   choices=["C0", "C1", "C2", "C3"], help="cycle orientation class")
    p.add_argument("--pattern", default=None, help="comma-separated source positions (class C3)")
    p.add_argument("--sinks", default=None, help="comma-separated sink positions (class C3)")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--input", default="-", help="undirected edge list for tree/bipartite/girth kinds")
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("reduce", help="emit a hardness gadget as an edge list with role comments")
    p.add_argument("problem", choices=["nae3sat", "vertexcover"])
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--k", type=int, default=0, help="vertex-cover budget")
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="cross-check a reduction or closed form against oracles")
    p.add_argument("check", choices=["nae", "vc", "family", "thm32"])
    _add_common(p)
    p.add_argument("--k", type=int, default=0, help="vertex-cover budget (vc)")
    p.add_argument("--max-n", type=int, default=7, help="size cap for family/thm32 sweeps")
    p.add_argument("--samples", type=int, default=100, help="random samples for thm32")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="re-emit any edge list as DOT")
    _add_common(p)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceededError, TooManyEdgesError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> NoReturn:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
