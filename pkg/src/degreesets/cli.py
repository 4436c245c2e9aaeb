"""Command-line front end.  Every command prints one JSON document.

Exit status: 0 on success, 1 when ``verify`` rejects a certificate, 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .blocks import ADAMS, CIRCLE3, RATIONAL, VARIANTS, AdamsBlock, CircleBlock, RationalGraphBlock, graph_family
from .calculus import adams_pair_degrees, circle_pair_degrees, rational_pair_degrees
from .decompose import decompose_integer_set, decompose_rational_set
from .realize import realize
from .setalg import DegreeSet, parse_rat
from .verify import exhaustive_smallset_sweep, verify_certificate


class UsageError(Exception):
    pass


def parse_set(text: str) -> DegreeSet:
    try:
        values = [parse_rat(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if len(set(values)) != len(values):
        raise argparse.ArgumentTypeError("set elements must be distinct")
    return DegreeSet(values)


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degreesets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="write A as an intersection of subset-sum sets")
    p.add_argument("--set", dest="set_", type=parse_set, required=True, help="comma-separated, e.g. 0,2,-1/3")
    p.add_argument("--m", type=int, default=1, help="power exponent (integer sets only)")

    p = sub.add_parser("realize", help="emit a realization certificate")
    p.add_argument("--set", dest="set_", type=parse_set, required=True)
    p.add_argument("--variant", choices=VARIANTS, default=CIRCLE3)
    p.add_argument("--m", type=int, default=None, help="exponent (circle3 default 1, adams default 2)")
    p.add_argument("--k", type=int, default=1, help="graph-algebra parameter (rational)")
    p.add_argument("--base-label", default="Sigma", help="base manifold label (adams)")
    p.add_argument("--base-connectivity", type=int, default=1, help="base manifold connectivity (adams)")
    p.add_argument("--out", default=None, help="write to a file instead of standard output")

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("--in", dest="in_", default="-", help="certificate path, '-' for standard input")

    p = sub.add_parser("degrees", help="degree set between two blocks")
    p.add_argument("--variant", choices=VARIANTS, default=CIRCLE3)
    p.add_argument("--left", type=_rat, required=True, help="Euler number, q, or signed r")
    p.add_argument("--right", type=_rat, required=True)
    p.add_argument("--m", type=int, default=2, help="exponent (adams)")
    p.add_argument("--k", type=int, default=1, help="graph-algebra parameter (rational)")
    p.add_argument(
        "--non-isomorphic", action="store_true", help="rational: put the blocks on non-isomorphic graphs"
    )

    p = sub.add_parser("sweep", help="realize and verify all small sets")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default=CIRCLE3)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-cases", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _variant_params(args: argparse.Namespace) -> dict[str, Any]:
    if args.variant == CIRCLE3:
        return {"m": 1 if args.m is None else args.m}
    if args.variant == RATIONAL:
        return {"k": args.k}
    params: dict[str, Any] = {"m": 2 if args.m is None else args.m}
    if getattr(args, "base_label", None) is not None:
        params["base_label"] = args.base_label
        params["base_connectivity"] = args.base_connectivity
    return params


def _integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise UsageError(f"{what} must be an integer")
    return int(x)


def _degrees(args: argparse.Namespace) -> DegreeSet:
    if args.variant == CIRCLE3:
        return circle_pair_degrees(
            CircleBlock(_integer(args.left, "--left")), CircleBlock(_integer(args.right, "--right"))
        )
    if args.variant == RATIONAL:
        family = graph_family(2)
        right_graph = 1 if args.non_isomorphic else 0
        return rational_pair_degrees(
            RationalGraphBlock(0, args.k, args.left), RationalGraphBlock(right_graph, args.k, args.right), family
        )
    left, right = _integer(args.left, "--left"), _integer(args.right, "--right")
    if left == 0 or right == 0:
        raise UsageError("Adams degrees must be nonzero")
    return adams_pair_degrees(
        AdamsBlock(abs(left), args.m, 1 if left > 0 else -1), AdamsBlock(abs(right), args.m, 1 if right > 0 else -1)
    )


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "decompose":
            if args.set_.is_integral():
                result = decompose_integer_set(args.set_, args.m)
            else:
                result = decompose_rational_set(args.set_)
            _emit(result.to_json())
        elif args.command == "realize":
            cert = realize(args.variant, args.set_, **_variant_params(args))
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(cert.dumps())
            else:
                sys.stdout.write(cert.dumps())
        elif args.command == "verify":
            if args.in_ == "-":
                text = sys.stdin.read()
            else:
                with open(args.in_, encoding="utf-8") as fh:
                    text = fh.read()
            report = verify_certificate(text)
            sys.stdout.write(report.dumps())
            return 0 if report.passed else 1
        elif args.command == "degrees":
            sys.stdout.write(json.dumps({"degrees": _degrees(args).to_json()}, separators=(",", ":")) + "\n")
        elif args.command == "sweep":
            args.base_label = None
            _emit(
                exhaustive_smallset_sweep(
                    args.bound,
                    args.size,
                    args.variant,
                    max_cases=args.max_cases,
                    seed=args.seed,
                    **_variant_params(args),
                )
            )
    except (UsageError, ValueError, OSError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
