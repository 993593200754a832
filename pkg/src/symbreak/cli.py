"""Command-line interface: ``symbreak {gen,aut,verify,distnum,reproduce,export}``.

Exit codes: 0 success, 1 mathematical failure (coloring not distinguishing,
report disagrees with a claim), 2 usage error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import graphs
from .coloring import is_color_preserving, load_coloring, violating_automorphism
from .graphs import GraphFormatError, read_graph, write_graph
from .perm import BudgetExceeded, automorphism_group, is_automorphism
from .reproduce import TABLES, reproduce_tables
from .solver import STRATEGIES, distinguishing_number

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
FAMILIES = ("hypercube", "hypercube-power", "augmented-cube", "complete", "matching-complement")

log = logging.getLogger("symbreak")


class UsageError(Exception):
    pass


def _build(family: str, n: int, p: int | None) -> graphs.Graph:
    if (p is not None) != (family == "hypercube-power"):
        raise UsageError("--p is required for hypercube-power and not accepted otherwise")
    if family == "hypercube":
        return graphs.hypercube(n)
    if family == "hypercube-power":
        return graphs.hypercube_power(n, p)
    if family == "augmented-cube":
        return graphs.augmented_cube(n)
    if family == "complete":
        return graphs.complete_graph(n)
    return graphs.complement_perfect_matching(n)


def _print_json(data: dict) -> None:
    print(json.dumps(data, indent=1))


def cmd_gen(args: argparse.Namespace) -> int:
    g = _build(args.family, args.n, args.p)
    write_graph(g, args.out, args.format)
    print(f"{g.n_vertices} vertices, {g.n_edges} edges")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    write_graph(g, args.out, args.format)
    print(f"{g.n_vertices} vertices, {g.n_edges} edges")
    return EXIT_OK


def cmd_aut(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    colors = load_coloring(args.coloring, g).colors if args.coloring else None
    group = automorphism_group(g, colors, args.budget)
    out = {
        "order": str(group.order()),
        "n_generators": len(group.generators),
        "n_orbits": len(group.orbits()),
        "colored": colors is not None,
    }
    if not args.order_only:
        out["generators"] = [s.to_json() for s in group.generators]
        out["orbits"] = [[g.label(v) for v in orb] for orb in group.orbits()]
    _print_json(out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    c = load_coloring(args.coloring, g)
    witness = violating_automorphism(g, c, args.budget)
    if witness is None:
        print(f"distinguishing: no non-identity automorphism preserves this {c.r}-coloring")
        return EXIT_OK
    # re-check before reporting
    assert is_automorphism(g, witness) and is_color_preserving(witness, c)
    names = list(g.labels) if g.labels is not None else None
    print(f"not distinguishing: {witness.cycle_string(names)} preserves the coloring")
    return EXIT_FALSE


def cmd_distnum(args: argparse.Namespace) -> int:
    if args.strategy == "random" and args.seed is None:
        raise UsageError("--seed is required with --strategy random")
    g = read_graph(args.graph)
    res = distinguishing_number(g, args.max_colors, args.strategy, args.seed, args.budget)
    out = res.to_json_dict(g)
    out["strategy"] = args.strategy
    out["seed"] = args.seed
    _print_json(out)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    try:
        report = reproduce_tables(args.max_n, args.table, args.out, args.seed, args.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(report.to_markdown(), end="")
    if report.aborted:
        return EXIT_BUDGET
    return EXIT_OK if report.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symbreak", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True,
                   help="dimension; vertex count for complete and matching-complement")
    p.add_argument("--p", type=int, help="power (hypercube-power only)")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "dimacs"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export", help="convert a graph file between formats")
    p.add_argument("graph")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "dimacs"))
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("aut", help="automorphism group order, generators and orbits")
    p.add_argument("graph")
    p.add_argument("--coloring")
    p.add_argument("--order-only", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("verify", help="exit 0 iff the coloring is distinguishing")
    p.add_argument("graph")
    p.add_argument("--coloring", required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distnum", help="distinguishing number or bounds on it")
    p.add_argument("graph")
    p.add_argument("--max-colors", type=int)
    p.add_argument("--strategy", choices=STRATEGIES, default="exhaustive")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_distnum)

    p = sub.add_parser("reproduce", help="recompute the published tables")
    p.add_argument("--table", choices=TABLES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
