"""Command line interface.

Exit status: 0 verified / found, 1 mathematical negative (not pythagorean,
UNKNOWN, check failure), 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from contextlib import nullcontext

from . import reproduce
from .curve import INFINITY, Point, classify_order, contains, make_curve, torsion_points
from .derivation import cubic_pair, cubic_point, degree1_conditions, degree2_conditions, derive_pair
from .exact import PythaError, format_rational, parse_rational
from .pythagorean import make_pair
from .search import SearchBound, describe_point, multi_witness, pythapotent_verdict, scan


class Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-46022656/9" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def positive_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def fmt_point(P) -> str:
    return "O" if P is INFINITY else describe_point(P)


def fmt_order(order) -> str:
    return "non-torsion" if order is None else str(order)


def print_witness(w, out) -> None:
    print(f"k={w.k} l={w.l} inner={w.inner_hyp} outer={w.outer_hyp}", file=out)


def cmd_check(args, out) -> int:
    try:
        pair = make_pair(args.a, args.b)
    except PythaError as exc:
        print(exc, file=out)
        return 1
    print(f"c={pair.c}", file=out)
    return 0


def cmd_curve(args, out) -> int:
    c = make_curve(args.a, args.b, args.h)
    print(c, file=out)
    print(f"A={c.A}", file=out)
    print(f"B={c.B}", file=out)
    for P, order in torsion_points(c):
        print(f"torsion {fmt_point(P)} order={order}", file=out)
    if args.h == 2:
        print("note: for h=2 these points generate a proper subgroup of the torsion", file=out)
    return 0


def cmd_derive(args, out) -> int:
    c = make_curve(args.a, args.b, args.h)
    P = Point(*args.point)
    if not contains(c, P):
        print("point not on curve", file=out)
        return 1
    w = derive_pair(c, P)
    t = w.trace
    print(f"x2={format_rational(t.x2)}", file=out)
    print(f"g/f={t.g}/{t.f}", file=out)
    print(f"t=r/s={t.r}/{t.s} (branch {t.branch})", file=out)
    print_witness(w, out)
    return 0


def cmd_search(args, out) -> int:
    bound = SearchBound(args.max_w, args.max_u)
    v = pythapotent_verdict(args.a, args.b, args.h, bound, workers=args.workers)
    print(f"verdict={v.tag} max_w={bound.max_w} max_u={bound.max_u}", file=out)
    if not v.potent:
        print("no non-torsion point within bound (this does not prove rank 0)", file=out)
        return 1
    print(f"generator={fmt_point(v.generator)}", file=out)
    print_witness(v.witness, out)
    if args.count > 1:
        c = make_curve(args.a, args.b, args.h)
        for w in multi_witness(c, v.generator, args.count):
            print(f"{w.source}: ", end="", file=out)
            print_witness(w, out)
    return 0


def cmd_cubic(args, out) -> int:
    P = cubic_point(args.m, args.n)
    w = cubic_pair(args.m, args.n)
    a, b = args.m**2 - args.n**2, 2 * args.m * args.n
    print(f"pair=({a},{b})", file=out)
    print(f"point={fmt_point(P)} order={fmt_order(classify_order(make_curve(a, b, 3), P))}", file=out)
    print_witness(w, out)
    return 0


def cmd_conditions(args, out) -> int:
    for degree, fn, labels in ((1, degree1_conditions, ("a", "b")), (2, degree2_conditions, ("i", "ii", "iii", "iv"))):
        report = fn(args.m, args.n)
        flags = " ".join(f"{lab}={'yes' if v else 'no'}" for lab, v in zip(labels, report.conditions))
        print(f"degree {degree}: {flags}", file=out)
        for cand in report.candidates:
            print(f"  {cand.label}: point={fmt_point(cand.point)} order={fmt_order(cand.order)}", file=out)
            if cand.witness is not None:
                print("    ", end="", file=out)
                print_witness(cand.witness, out)
    return 0


def cmd_reproduce(args, out) -> int:
    results = reproduce.run(args.only, corrupt=args.corrupt)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}", file=out)
    return 0 if all(r.ok for r in results) else 1


def cmd_scan(args, out) -> int:
    bound = SearchBound(args.max_w, args.max_u)
    ctx = open(args.output, "w", encoding="utf-8", newline="\n") if args.output else nullcontext(out)
    with ctx as sink:
        for _ in scan(args.m_max, args.h, bound, sink, workers=args.workers):
            pass
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="pythapotent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is (a, b) a pythagorean pair")
    p.add_argument("a", type=positive_int)
    p.add_argument("b", type=positive_int)
    p.set_defaults(func=cmd_check)

    def curve_args(p):
        p.add_argument("a", type=positive_int)
        p.add_argument("b", type=positive_int)
        p.add_argument("h", type=positive_int)

    def bound_args(p, max_w=4, max_u=10**5):
        p.add_argument("--max-w", type=positive_int, default=max_w)
        p.add_argument("--max-u", type=positive_int, default=max_u)
        p.add_argument("--workers", type=positive_int, default=1)

    p = sub.add_parser("curve", help="curve coefficients and torsion catalogue")
    curve_args(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("derive", help="witness pair from a curve point")
    curve_args(p)
    p.add_argument("--point", nargs=2, type=rational, required=True, metavar=("X", "Y"))
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("search", help="bounded point search and verdict")
    curve_args(p)
    bound_args(p)
    p.add_argument("--count", type=positive_int, default=1, help="witnesses from [2]P .. [2 count]P")
    p.set_defaults(func=cmd_search)

    for name, fn, help_ in (
        ("cubic", cmd_cubic, "closed-form cubic point and witness"),
        ("conditions", cmd_conditions, "degree 1 and 2 square conditions"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("m", type=positive_int)
        p.add_argument("n", type=positive_int)
        p.set_defaults(func=fn)

    p = sub.add_parser("reproduce", help="recompute the worked examples and checks")
    p.add_argument("--only", nargs="+", choices=list(reproduce.CHECKS), metavar="CHECK")
    p.add_argument("--corrupt", choices=reproduce.CORRUPTIBLE, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("scan", help="verdicts over primitive pairs, one record per line")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--h", type=positive_int, nargs="+", required=True)
    bound_args(p, max_w=1, max_u=10**4)
    p.add_argument("--output", help="record file (default: standard output)")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("cubic", "conditions") and args.m <= args.n:
        parser.error("need m > n")
    if args.command == "scan" and args.m_max < 2:
        parser.error("--m-max must be at least 2")
    try:
        return args.func(args, out)
    except PythaError as exc:
        print(exc, file=out)
        return 1


if __name__ == "__main__":
    sys.exit(main())
