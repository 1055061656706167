"""Command-line driver.

Exit codes: 0 success or connected, 1 not connected, 2 usage or input error,
3 a state cap was exceeded.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import presets
from .circles import social_circles
from .counting import count_components
from .decomposition import block_cut_tree, classify, hallways, kappa, kappa_star
from .dot import to_dot
from .graph import Graph, canonical_configuration, configuration_from_json, graph_from_json, load_json
from .oracle import DEFAULT_CAP, CapExceeded, enumerate_components, min_k_connected
from .reachability import decide
from .solver import FallbackExceeded, Moves, NotConnected, solve
from .solver.search import DEFAULT_SEARCH_CAP

EXIT_OK, EXIT_NOT_CONNECTED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _number(x):
    return "inf" if x == math.inf else x


def load_graph(spec: str) -> Graph:
    """A JSON file, or ``preset:name[:p1[:p2]]``."""
    if spec.startswith("preset:"):
        name, *params = spec.split(":")[1:]
        return presets.preset(name, *(int(p) for p in params))
    return graph_from_json(load_json(spec))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.command}")


def _k(args) -> int:
    if args.k < 1:
        raise UsageError("k must be at least 1")
    return args.k


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    bct = block_cut_tree(g)
    hs = hallways(g, bct)
    _emit({
        "n": g.n,
        "m": g.m,
        "kappa": kappa(g),
        "kappa_star_literal": _number(kappa_star(g, "literal")),
        "kappa_star_corrected": _number(kappa_star(g, "corrected")),
        "hallways": [{"vertices": list(h.vertices), "order": h.order} for h in hs],
        "blocks": [list(b) for b in bct.blocks],
        "libraries": [list(bct.blocks[i]) for i in bct.libraries],
        "cut_vertices": sorted(bct.cut_vertices),
        "class": classify(g).to_json(),
    })
    return EXIT_OK


def cmd_circles(args) -> int:
    _need(args, "k")
    g = load_graph(args.graph)
    circles = social_circles(g, _k(args))
    if args.format == "dot":
        sys.stdout.write(to_dot(g, circles))
    else:
        _emit([c.to_json() for c in circles])
    return EXIT_OK


def _pair(args, g):
    _need(args, "from_", "to")
    sigma = configuration_from_json(load_json(args.from_))
    tau = configuration_from_json(load_json(args.to))
    if args.k is not None and _k(args) != sigma.k:
        raise UsageError(f"--k {args.k} but the configuration places {sigma.k} butterflies")
    if sigma.n != g.n:
        raise UsageError(f"configuration covers {sigma.n} vertices, board has {g.n}")
    return sigma, tau


def cmd_decide(args) -> int:
    g = load_graph(args.graph)
    sigma, tau = _pair(args, g)
    verdict = decide(sigma, tau, g)
    if args.format == "text":
        print("CONNECTED" if verdict.connected else f"NOT CONNECTED ({verdict.reason.value})")
    else:
        _emit(verdict.to_json())
    return EXIT_OK if verdict.connected else EXIT_NOT_CONNECTED


def cmd_count(args) -> int:
    _need(args, "k")
    g = load_graph(args.graph)
    print(count_components(g, _k(args), args.mode).value)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    sigma, tau = _pair(args, g)
    out = solve(sigma, tau, g, cap=args.cap or DEFAULT_SEARCH_CAP)
    _emit(out.to_json())
    if isinstance(out, Moves):
        return EXIT_OK
    if isinstance(out, NotConnected):
        return EXIT_NOT_CONNECTED
    assert isinstance(out, FallbackExceeded)
    return EXIT_CAP


def cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    cap = args.cap or DEFAULT_CAP
    if args.min_k:
        _emit({"min_k": _number(min_k_connected(g, cap))})
        return EXIT_OK
    _need(args, "k")
    table = enumerate_components(g, _k(args), cap)
    _emit({"components": table.components, "sizes": list(table.sizes)})
    return EXIT_OK


def cmd_preset(args) -> int:
    if args.list:
        _emit(presets.preset_names())
        return EXIT_OK
    _need(args, "name")
    g = presets.preset(args.name, *args.params)
    text = json.dumps(g.to_json(), sort_keys=True) + "\n"
    if args.format == "dot":
        text = to_dot(g, name=args.name)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.config_out:
        if args.k is None:
            raise UsageError("--config-out needs --k")
        with open(args.config_out, "w") as fh:
            fh.write(json.dumps(canonical_configuration(g.n, _k(args)).to_json(), sort_keys=True) + "\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "circles": cmd_circles,
    "decide": cmd_decide,
    "count": cmd_count,
    "solve": cmd_solve,
    "oracle": cmd_oracle,
    "preset": cmd_preset,
}


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--graph", help="graph JSON file or preset:name[:sizes]")
    shared.add_argument("--k", type=int, help="number of butterflies (empty cells)")
    shared.add_argument("--mode", choices=["literal", "corrected"], default="corrected")
    shared.add_argument("--cap", type=int, help="state cap for exhaustive work")
    shared.add_argument("--format", choices=["json", "text", "dot"], default="json")

    p = argparse.ArgumentParser(prog="slidingblocks", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("analyze", "circles", "count"):
        sub.add_parser(name, parents=[shared])
    for name in ("decide", "solve"):
        sp = sub.add_parser(name, parents=[shared])
        sp.add_argument("--from", dest="from_", help="source configuration JSON")
        sp.add_argument("--to", help="target configuration JSON")
    sp = sub.add_parser("oracle", parents=[shared])
    sp.add_argument("--min-k", action="store_true", help="report the least k giving one component")
    sp = sub.add_parser("preset", parents=[shared])
    sp.add_argument("--name")
    sp.add_argument("--params", type=int, nargs="*", default=[])
    sp.add_argument("--out")
    sp.add_argument("--config-out", help="also write the canonical start configuration (needs --k)")
    sp.add_argument("--list", action="store_true")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command not in ("preset",) and args.graph is None:
        parser.error(f"--graph is required for {args.command}")
    try:
        return COMMANDS[args.command](args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        _emit({"result": "refused", "reason": "cap_exceeded", "states": e.states, "bound": e.cap})
        return EXIT_CAP
    except (UsageError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
