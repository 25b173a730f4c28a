"""Command-line front end: compute invariants, run verification suites,
and generate named instances.

Exit codes: 0 success, 2 parse/usage error, 3 class mismatch (domain
error), 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import __version__
from .atfree import chordal_monophonic_number, cm_reduction, figure1_graph
from .decomposition import (decompose_p4_sparse, decompose_tree_cograph,
                            p4_sparse_number, tree_cograph_number)
from .errors import BudgetError, DomainError, GraphParseError
from .generators import random_permutation, random_tree, spider_graph
from .graph import Graph, complement, is_chordal, is_connected, is_tree, \
    load_graph, serialize_graph
from .oracle import DEFAULT_CAP, WitnessedNumber, min_convexity_number, \
    max_proper_monophonically_convex
from .permutation import PermutationDiagram, _m_components, \
    permutation_monophonic_number, permutation_to_graph
from .suites import SUITES
from .trees import (cotree_2geodetic_number, cotree_geodetic_number,
                    tree_2geodetic_number, tree_geodetic_number)

SCHEMA = "convexia/1"

_KIND_NAMES = {
    "g": "geodetic",
    "g2": "2-geodetic",
    "s": "steiner",
    "m": "monophonic",
    "cm": "cm",
}


def _read_input(args) -> str:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "perm":
        raise DomainError("permutation input parses to a diagram, not a graph")
    return load_graph(text, "graph6" if fmt == "graph6" else "edge-list")


def _parse_perm(text: str) -> PermutationDiagram:
    tokens = text.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphParseError(f"non-integer permutation entry: {exc}")
    return PermutationDiagram(tuple(values))


def _compute_auto(g: Graph, kind: str, cap: int) -> tuple[WitnessedNumber, str, str]:
    """(result, algorithm_used, class_detected) by probing classes."""
    if kind == "cm":
        return max_proper_monophonically_convex(g, cap), "oracle", "generic"
    if kind in ("geodetic", "2-geodetic"):
        if is_tree(g):
            solver = tree_geodetic_number if kind == "geodetic" \
                else tree_2geodetic_number
            return solver(g), "tree", "tree"
        cg = complement(g)
        if is_tree(cg):
            solver = cotree_geodetic_number if kind == "geodetic" \
                else cotree_2geodetic_number
            return solver(cg), "cotree", "cotree"
        if decompose_tree_cograph(g) is not None:
            return tree_cograph_number(g, kind), "tree-cograph", "tree-cograph"
        if decompose_p4_sparse(g) is not None:
            return p4_sparse_number(g, kind), "p4-sparse", "p4-sparse"
    if kind == "monophonic" and is_connected(g) and is_chordal(g):
        return chordal_monophonic_number(g), "chordal", "chordal"
    return min_convexity_number(g, kind, cap), "oracle", "generic"


def _compute_named(g, kind, algorithm, cap):
    if algorithm == "oracle":
        if kind == "cm":
            return max_proper_monophonically_convex(g, cap), "generic"
        return min_convexity_number(g, kind, cap), "generic"
    if kind == "cm":
        raise DomainError("kind cm is only available through the oracle")
    if algorithm == "tree":
        solver = tree_geodetic_number if kind == "geodetic" \
            else tree_2geodetic_number
        if kind not in ("geodetic", "2-geodetic"):
            raise DomainError(f"tree algorithm does not compute {kind}")
        return solver(g), "tree"
    if algorithm == "cotree":
        if kind not in ("geodetic", "2-geodetic"):
            raise DomainError(f"cotree algorithm does not compute {kind}")
        t = complement(g)
        solver = cotree_geodetic_number if kind == "geodetic" \
            else cotree_2geodetic_number
        return solver(t), "cotree"
    if algorithm == "tree-cograph":
        if kind not in ("geodetic", "2-geodetic"):
            raise DomainError(f"tree-cograph algorithm does not compute {kind}")
        return tree_cograph_number(g, kind), "tree-cograph"
    if algorithm == "p4-sparse":
        if kind not in ("geodetic", "2-geodetic"):
            raise DomainError(f"p4-sparse algorithm does not compute {kind}")
        return p4_sparse_number(g, kind), "p4-sparse"
    if algorithm == "chordal":
        if kind != "monophonic":
            raise DomainError("chordal shortcut only computes m")
        return chordal_monophonic_number(g), "chordal"
    raise DomainError(f"unknown algorithm {algorithm}")


def cmd_compute(args) -> int:
    t0 = time.monotonic()
    kind = _KIND_NAMES[args.kind]
    text = _read_input(args)
    if args.format == "perm":
        d = _parse_perm(text)
        g = permutation_to_graph(d)
        if args.complement:
            g = complement(g)
        if args.algorithm in ("auto", "permutation") and kind == "monophonic" \
                and not args.complement:
            if is_connected(g):
                wn = permutation_monophonic_number(d)
            else:
                value, witness = _m_components(d, g)
                wn = WitnessedNumber(value, witness)
            algorithm_used, cls = "permutation", "permutation"
        elif args.algorithm == "permutation":
            raise DomainError(
                "permutation algorithm only computes m on a diagram")
        else:
            wn, algorithm_used, cls = _route(g, kind, args)
    else:
        if args.algorithm == "permutation":
            raise DomainError("permutation algorithm needs --format perm")
        g = _parse_graph(text, args.format)
        if args.complement:
            g = complement(g)
        wn, algorithm_used, cls = _route(g, kind, args)
    report = {
        "schema": SCHEMA,
        "n": g.n,
        "m_edges": g.m,
        "class_detected": cls,
        "kind": args.kind,
        "value": wn.value,
        "witness": list(wn.witness),
        "algorithm_used": algorithm_used,
        "wall_ms": round((time.monotonic() - t0) * 1000, 3),
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _route(g, kind, args):
    if args.algorithm == "auto":
        return _compute_auto(g, kind, args.cap)
    wn, cls = _compute_named(g, kind, args.algorithm, args.cap)
    return wn, args.algorithm, cls


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise GraphParseError(
            f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    fn = SUITES[args.suite]
    kwargs = {"seed": args.seed}
    if args.cases is not None:
        kwargs["cases"] = args.cases
    report = fn(**kwargs)
    report["schema"] = SCHEMA
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if not report["failures"] else 1


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    what = args.what
    if what == "figure1":
        g, _ = figure1_graph(1)
    elif what == "figure1-k":
        if args.copies < 1:
            raise GraphParseError("--copies must be positive")
        g, _ = figure1_graph(args.copies)
    elif what == "random-tree":
        if args.size < 1:
            raise GraphParseError("--size must be positive")
        g = random_tree(args.size, rng)
    elif what == "random-perm":
        if args.size < 1:
            raise GraphParseError("--size must be positive")
        d = random_permutation(args.size, rng)
        sys.stdout.write(" ".join(str(v) for v in d.pi) + "\n")
        return 0
    elif what == "spider":
        if args.feet < 2:
            raise GraphParseError("--feet must be at least 2")
        head = None
        if args.head > 0:
            head = random_tree(args.head, rng)
        g = spider_graph(args.feet, not args.thick, head)
    elif what == "cm-reduction":
        base = _parse_graph(_read_input(args), args.format)
        g = cm_reduction(base)
    else:  # pragma: no cover - argparse limits choices
        raise GraphParseError(f"unknown generator {what!r}")
    fmt = "graph6" if args.format == "graph6" else "edge-list"
    sys.stdout.write(serialize_graph(g, fmt))
    if fmt == "graph6":
        sys.stdout.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexia",
        description="Convexity invariants of graphs: geodetic, 2-geodetic, "
                    "monophonic and Steiner numbers.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute an invariant")
    p_compute.add_argument("input", nargs="?", default="-",
                           help="input file (default: stdin)")
    p_compute.add_argument("-k", "--kind", choices=sorted(_KIND_NAMES),
                           default="g")
    p_compute.add_argument("-a", "--algorithm", default="auto",
                           choices=["auto", "oracle", "tree", "cotree",
                                    "tree-cograph", "p4-sparse",
                                    "permutation", "chordal"])
    p_compute.add_argument("--format", default="graph6",
                           choices=["graph6", "edges", "perm"])
    p_compute.add_argument("--cap", type=int, default=DEFAULT_CAP,
                           help="oracle budget (vertices)")
    p_compute.add_argument("--complement", action="store_true",
                           help="compute on the complement of the input")
    p_compute.add_argument("--seed", type=int, default=0)
    p_compute.add_argument("--jobs", type=int, default=1,
                           help="accepted for interface compatibility; "
                                "computation is single-process")
    p_compute.set_defaults(fn=cmd_compute)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=None,
                          help="number of random cases (suite default "
                               "otherwise)")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="accepted for interface compatibility")
    p_verify.set_defaults(fn=cmd_verify)

    p_gen = sub.add_parser("generate", help="generate a named instance")
    p_gen.add_argument("what", choices=["figure1", "figure1-k", "random-tree",
                                        "random-perm", "spider",
                                        "cm-reduction"])
    p_gen.add_argument("input", nargs="?", default="-",
                       help="input graph for cm-reduction (default: stdin)")
    p_gen.add_argument("--format", default="graph6",
                       choices=["graph6", "edges"])
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--size", type=int, default=8)
    p_gen.add_argument("--copies", type=int, default=2)
    p_gen.add_argument("--feet", type=int, default=3)
    p_gen.add_argument("--thin", action="store_true", default=True)
    p_gen.add_argument("--thick", action="store_true")
    p_gen.add_argument("--head", type=int, default=0,
                       help="head size (random tree head), 0 for none")
    p_gen.set_defaults(fn=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
