"""Command-line front end.

Subcommands: ``gen`` (family generators), ``analyze`` (structural report),
``capt`` (pursuit capture times), ``zerovis`` (blind-cop clearing),
``limit`` (the capt_k(G, m) sequence probe), ``verify`` (the claim battery).

Graphs are given as file paths (edge-list text or graph6, sniffed) or as
inline family specs: p5, c4, k6, k2,3, w6, h10, t3, star4, cat3:1,0,2.
All JSON output is canonical (sorted keys); exit codes are 0 on success,
1 on verification failure, 2 on usage errors, 3 when a solve would exceed
the state-space cap.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import families, pursuit, strategies, verify, zerovis
from .errors import GraphError, StateSpaceCapError
from .graphs import (Graph, from_edgelist_text, from_graph6, to_edgelist_text,
                     to_graph6)
from .values import is_finite, value_to_json

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_FAMILY_BUILDERS = {
    "path": lambda args: families.path(int(args[0])),
    "cycle": lambda args: families.cycle(int(args[0])),
    "complete": lambda args: families.complete(int(args[0])),
    "star": lambda args: families.star(int(args[0])),
    "wheel": lambda args: families.wheel(int(args[0])),
    "complete-bipartite": lambda args: families.complete_bipartite(
        int(args[0]), int(args[1])),
    "caterpillar": lambda args: families.caterpillar(
        int(args[0]), [int(x) for x in args[1].split(",")]),
    "subdivided-star": lambda args: families.subdivided_star(int(args[0])),
    "h-graph": lambda args: families.h_graph(int(args[0])),
}

_INLINE_PATTERNS = [
    (re.compile(r"^p(\d+)$"), lambda m: families.path(int(m.group(1)))),
    (re.compile(r"^c(\d+)$"), lambda m: families.cycle(int(m.group(1)))),
    (re.compile(r"^k(\d+),(\d+)$"),
     lambda m: families.complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^k(\d+)$"), lambda m: families.complete(int(m.group(1)))),
    (re.compile(r"^w(\d+)$"), lambda m: families.wheel(int(m.group(1)))),
    (re.compile(r"^h(\d+)$"), lambda m: families.h_graph(int(m.group(1)))),
    (re.compile(r"^t(\d+)$"),
     lambda m: families.subdivided_star(int(m.group(1)))),
    (re.compile(r"^star(\d+)$"), lambda m: families.star(int(m.group(1)))),
    (re.compile(r"^cat(\d+):([\d,]+)$"),
     lambda m: families.caterpillar(
         int(m.group(1)), [int(x) for x in m.group(2).split(",")])),
]


def load_graph(spec: str) -> Graph:
    """Resolve a graph argument: existing file first, inline spec second."""
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        stripped = text.strip()
        if "\n" not in stripped and " " not in stripped:
            return from_graph6(stripped, name=os.path.basename(spec))
        return from_edgelist_text(text, name=os.path.basename(spec))
    low = spec.lower()
    for pattern, build in _INLINE_PATTERNS:
        match = pattern.match(low)
        if match:
            return build(match)
    raise GraphError(f"no such file and not an inline family spec: {spec!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj: dict, out: str | None) -> None:
    _emit(json.dumps(obj, sort_keys=True, indent=2) + "\n", out)


def cmd_gen(args) -> int:
    builder = _FAMILY_BUILDERS[args.family]
    graph = builder(args.params)
    if args.format == "graph6":
        _emit(to_graph6(graph) + "\n", args.out)
    else:
        _emit(to_edgelist_text(graph), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    graph = load_graph(args.graph)
    report = {
        "name": graph.name,
        "n": graph.n,
        "edges": graph.edge_count(),
        "diameter": graph.diameter(),
        "traps": sorted(graph.traps()),
        "dismantlable": graph.is_dismantlable(),
        "two_dismantlable": graph.is_2_dismantlable(),
        "cop_number": pursuit.cop_number(graph),
        "zero_vis_cop_number": zerovis.zero_vis_cop_number(graph),
    }
    _dump(report, args.out)
    return EXIT_OK


def _transcript_json(graph, game) -> list[dict]:
    cop = strategies.solver_optimal_cop(game)
    robber = strategies.solver_optimal_robbers(game)
    horizon = int(game.capture_time()) + 1
    tr = strategies.arena(graph, cop, robber, game.m, max(horizon, 1))
    return [r.to_json() for r in tr.rounds]


def cmd_capt(args) -> int:
    graph = load_graph(args.graph)
    if args.from_vertices:
        start = tuple(int(x) for x in args.from_vertices.split(","))
        value = pursuit.capture_time_from(graph, start, args.robbers)
        report = {
            "graph": graph.name, "k": len(start), "m": args.robbers,
            "from": sorted(start), "value": value_to_json(value),
        }
        _dump(report, args.out)
        return EXIT_OK
    game = pursuit.solve(graph, args.cops, args.robbers)
    value = game.capture_time()
    report = {
        "graph": graph.name, "k": args.cops, "m": args.robbers,
        "value": value_to_json(value),
        "optimal_starts": [list(c) for c in game.optimal_starts()],
    }
    if args.transcript and is_finite(value):
        report["transcript"] = _transcript_json(graph, game)
    _dump(report, args.out)
    return EXIT_OK


def cmd_zerovis(args) -> int:
    graph = load_graph(args.graph)
    value = zerovis.zero_vis_capture_time(graph, args.cops)
    report = {
        "graph": graph.name, "k": args.cops,
        "zero_vis_capture_time": value_to_json(value),
        "zero_vis_cop_number": zerovis.zero_vis_cop_number(graph),
    }
    if args.schedule and is_finite(value):
        report["schedule"] = [list(c) for c in
                              zerovis.extract_schedule(graph, args.cops)]
    _dump(report, args.out)
    return EXIT_OK


def cmd_limit(args) -> int:
    graph = load_graph(args.graph)
    report = zerovis.limit_probe(graph, args.cops, args.max_m)
    payload = {"graph": graph.name, **report.to_json()}
    if args.csv:
        _emit(zerovis.probe_csv(report), args.csv)
    _dump(payload, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = [args.suite] if args.suite else None
    results = verify.run(suites)
    if args.json:
        _dump({"claims": [r.to_json() for r in results],
               "passed": all(r.passed for r in results)}, args.out)
    else:
        lines = [r.line() for r in results]
        passed = sum(r.passed for r in results)
        lines.append(f"{passed}/{len(results)} claims hold")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manyrobbers",
        description="exact analysis of pursuit with many robbers and "
                    "consecutive capture")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named family graph")
    p.add_argument("family", choices=sorted(_FAMILY_BUILDERS))
    p.add_argument("params", nargs="+")
    p.add_argument("--format", choices=["edgelist", "graph6"],
                   default="edgelist")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("analyze", help="structural and game report")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("capt", help="capture time for k cops, m robbers")
    p.add_argument("graph")
    p.add_argument("--cops", type=int, default=1)
    p.add_argument("--robbers", type=int, default=1)
    p.add_argument("--from", dest="from_vertices",
                   help="fixed cop placement, comma-separated vertices")
    p.add_argument("--transcript", action="store_true",
                   help="include one optimal line of play")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_capt)

    p = sub.add_parser("zerovis", help="blind-cop capture time and schedule")
    p.add_argument("graph")
    p.add_argument("--cops", type=int, default=1)
    p.add_argument("--schedule", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_zerovis)

    p = sub.add_parser("limit", help="capt_k(G, m) sequence for m = 1..max_m")
    p.add_argument("graph")
    p.add_argument("--cops", type=int, default=1)
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--csv", help="also write (m, capt) rows to this file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("verify", help="run the claim battery")
    p.add_argument("--suite", choices=sorted(verify.SUITES))
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except StateSpaceCapError as exc:
        print(f"error: {exc} (required {exc.required}, cap {exc.cap})",
              file=sys.stderr)
        return EXIT_CAP
    except (GraphError, ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
