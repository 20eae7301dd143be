"""Command-line entry point.

Exit statuses: 0 pass, 1 semantic failure, 2 input error, 3 oracle refusal.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import coloring, construction, oracle
from .errors import InputError, OracleRefusal, PreconditionError
from .ordered import (
    OrderedGraph,
    emit_ograph,
    is_double_magical,
    is_magical,
    is_semi_comparability,
    magical_closure,
    parse_ograph,
)
from .realization import (
    disjointness_graph,
    emit_curves,
    parse_curves,
    realize_double_magical,
    realize_magical,
)
from .svg import emit_svg

OK, FAIL, BAD_INPUT, REFUSED = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _graph(path: str) -> OrderedGraph:
    return parse_ograph(_read(path))


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def cmd_check(args: argparse.Namespace) -> int:
    g = _graph(args.file)
    test = {"semi": is_semi_comparability, "magical": is_magical, "double": is_double_magical}[args.kind]
    verdict = test(g)
    if verdict:
        print(f"{args.kind}: pass")
        return OK
    print(f"{args.kind}: FAIL ({len(verdict.violations)} violations)")
    for item in verdict.violations:
        print("violation", *item)
    return FAIL


def cmd_close(args: argparse.Namespace) -> int:
    g = _graph(args.file)
    closed = magical_closure(g, args.second)
    _write(args.out, emit_ograph(closed))
    print(f"added {len(closed.edges) - len(g.edges)} edges", file=sys.stderr)
    return OK


def cmd_color(args: argparse.Namespace) -> int:
    if args.algo == "xmono":
        result = coloring.color_xmonotone(parse_curves(_read(args.file)))
    elif args.algo == "semi":
        result = coloring.color_semi_comparability(_graph(args.file))
    else:
        result = coloring.color_double_magical(_graph(args.file))
    _write(args.out, coloring.emit_coloring(result))
    summary = sys.stderr if args.out in (None, "-") else sys.stdout
    print(f"colors: {result.palette_size}", file=summary)
    print(f"bound: {result.bound}", file=summary)
    return OK


def cmd_realize(args: argparse.Namespace) -> int:
    g = _graph(args.file)
    if g.num_orders == 1:
        found = oracle.witness_search(g)
        if found.order is None:
            print(f"no second order makes this graph magical ({found.orders_covered} orders ruled out)")
            return FAIL
        g = g.with_orders(g.orders[0], found.order)
        print("witness o2:", *found.order)
    if g.num_orders == 2:
        verdict, realize = is_magical(g), realize_magical
    else:
        verdict, realize = is_double_magical(g), realize_double_magical
    if not verdict:
        print(f"not realizable: first violation {verdict.violations[0]}")
        return FAIL
    fam = realize(g)
    round_trip = disjointness_graph(fam)
    same = round_trip.edges == g.edges and round_trip.orders == g.orders
    _write(args.out, emit_curves(fam))
    if args.svg:
        Path(args.svg).write_text(emit_svg(fam), encoding="utf-8")
    print("round trip:", "OK" if same else "MISMATCH")
    return OK if same else FAIL


def cmd_disjointness(args: argparse.Namespace) -> int:
    fam = parse_curves(_read(args.file))
    _write(args.out, emit_ograph(disjointness_graph(fam)))
    if args.svg:
        Path(args.svg).write_text(emit_svg(fam), encoding="utf-8")
    return OK


def cmd_construct(args: argparse.Namespace) -> int:
    g, report = construction.construct(args.k, args.n, args.p, args.seed, args.variant)
    if args.out:
        _write(args.out, emit_ograph(g))
    sys.stdout.write(report.to_text())
    return OK if report.passed else FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _graph(args.file)
    if args.stat == "omega":
        print(oracle.clique_number(g))
    elif args.stat == "alpha":
        print(oracle.independence_number(g))
    elif args.stat == "chi":
        print(oracle.chromatic_number(g))
    else:
        found = oracle.witness_search(g)
        print("none" if found.order is None else " ".join(map(str, found.order)))
        print(f"orders_covered: {found.orders_covered}")
    return OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = construction.verify_claim(args.claim, args.k, args.spot_checks, args.seed)
    sys.stdout.write(report.to_text())
    return OK if report.passed else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xmono",
        description="Ordered graphs, colourings and curve realizations for disjointness graphs of x-monotone curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="recognise semi-comparability / magical / double-magical graphs")
    p.add_argument("file")
    p.add_argument("--kind", choices=("semi", "magical", "double"), required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("close", help="magical closure of a double-ordered graph")
    p.add_argument("file")
    p.add_argument("--second", type=int, choices=(2, 3), default=2, help="closure over (o1,o2) or (o1,o3)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("color", help="colour a graph or curve family with a certified bound")
    p.add_argument("file")
    p.add_argument("--algo", choices=("semi", "double", "xmono"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("realize", help="realize a (double-)magical graph as curves")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("disjointness", help="disjointness graph of a curve file")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_disjointness)

    p = sub.add_parser("construct", help="run a randomized construction and verify it")
    p.add_argument("--variant", choices=construction.VARIANTS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="points per group")
    p.add_argument("--p", type=_rational, required=True, help="edge probability, e.g. 3/10")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", help="exact omega / chi / alpha / magical witness")
    p.add_argument("file")
    p.add_argument("--stat", choices=("omega", "chi", "alpha", "witness"), required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="exhaustively verify a combinatorial claim")
    p.add_argument("claim", choices=tuple(construction.CLAIM_LIMITS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--spot-checks", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return FAIL
    except OracleRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUSED


if __name__ == "__main__":
    sys.exit(main())
