"""Command-line front end.

Exit codes: 0 success, 1 a verification suite found a mismatch, 2 parse
error, 3 configuration error.
"""

import argparse
import os
import sys
from fractions import Fraction

from .expr import ParseError, parse_expression, parse_generator, render
from .hopf import (closed_form_antipode, closed_form_coproduct, twisted_antipode,
                   twisted_coproduct)
from .lie import TwistContext, lie_bracket
from .poly import UPoly
from .report import summary
from .suites import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_CONFIG = 0, 1, 2, 3

ORDER_ENV = "SVTWIST_ORDER"
DEFAULT_P2 = 1
DEFAULT_ORDER = 3
DEFAULT_INDEX_RANGE = 4


class ConfigError(Exception):
    pass


def parse_p(text):
    """``"1/2"`` -> 1, ``"-3/2"`` -> -3; anything but an odd numerator over 2 is rejected."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError("--p must look like k/2 with k odd, got %r" % text) from None
    if value.denominator != 2:
        raise ConfigError("--p must be a half-integer, got %s" % text)
    return value.numerator


def default_order():
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        raise ConfigError("%s must be an integer, got %r" % (ORDER_ENV, raw)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", default=None, help="half-integer p selecting e = Y_p (default 1/2); "
                                                  "write negative values as --p=-1/2")
    common.add_argument("--order", type=int, default=None,
                        help="truncation order N (default 3, or $%s)" % ORDER_ENV)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")

    parser = argparse.ArgumentParser(prog="svtwist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("normalize", parents=[common], help="PBW normal form of an expression")
    p.add_argument("expr")

    p = sub.add_parser("bracket", parents=[common], help="Lie bracket of two generators")
    p.add_argument("a")
    p.add_argument("b")

    for verb in ("coproduct", "antipode"):
        p = sub.add_parser(verb, parents=[common], help="quantized %s" % verb)
        p.add_argument("expr")
        p.add_argument("--method", choices=("twist", "closed"), default="twist")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--index-range", type=int, default=DEFAULT_INDEX_RANGE,
                   help="bound on |index2| for generator grids (default 4)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def make_context(args):
    p2 = DEFAULT_P2 if args.p is None else parse_p(args.p)
    order = default_order() if args.order is None else args.order
    try:
        return TwistContext(p2, order)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _single_generator(x):
    if len(x.terms) == 1:
        ((d, m), c), = x.terms.items()
        if d == 0 and c == 1 and len(m) == 1:
            return m[0]
    raise ConfigError("--method closed needs a single generator, got %s" % render(x))


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK

    try:
        ctx = make_context(args)
        if args.verb == "verify":
            return _verify(args, ctx, out)
        result = _compute(args, ctx)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, OverflowError, ValueError) as exc:
        print("configuration error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    print(render(result, args.format), file=out)
    return EXIT_OK


def _compute(args, ctx):
    if args.verb == "bracket":
        a, b = parse_generator(args.a), parse_generator(args.b)
        res = lie_bracket(a, b)
        if res is None:
            return UPoly(ctx.order)
        return UPoly.gen(res[1], ctx.order, coeff=res[0])
    x = parse_expression(args.expr, ctx.order)
    if args.verb == "normalize":
        return x
    if args.method == "closed":
        g = _single_generator(x)
        fn = closed_form_coproduct if args.verb == "coproduct" else closed_form_antipode
        return fn(g, ctx)
    fn = twisted_coproduct if args.verb == "coproduct" else twisted_antipode
    return fn(x, ctx)


def _verify(args, ctx, out):
    if args.index_range < 0:
        raise ConfigError("--index-range must be >= 0")
    print("# suite=%s p=%s order=%d index-range=%d seed=%d"
          % (args.suite, ctx.p, ctx.order, args.index_range, args.seed), file=out)
    if args.suite in ("cybe", "all"):
        print("# r-matrix used for the CYBE check: r = h(x)e - e(x)h (implementation choice)",
              file=out)
    checks = []
    for check in run_suite(args.suite, ctx, args.index_range, args.seed):
        checks.append(check)
        print(check.line(), file=out, flush=True)
    print(summary(checks), file=out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_MISMATCH


def main():
    sys.exit(run())
