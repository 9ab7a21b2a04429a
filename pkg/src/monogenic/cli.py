"""Command line interface.

Subcommands: count, table, classify, construct, normal-form, cayley,
verify. Data goes to stdout, errors to stderr; exit status 0 on success,
1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, freeinv, oracle, pperm, transform

_COUNT_FUNCS = {
    "s": (counting.distinct_orders, 0),
    "t": (counting.monoid_types, 0),
    "i": (counting.inverse_monoid_types, 0),
    "semi-t": (counting.semigroup_types, 1),
    "semi-i": (counting.inverse_semigroup_types, 1),
}


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monogenic",
        description="Classify and count monogenic transformation monoids "
        "and monogenic inverse monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate one counting function")
    p.add_argument("--func", choices=sorted(_COUNT_FUNCS), required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_nonneg, help="single argument")
    group.add_argument("--max", type=_nonneg, help="tabulate 0..max (1..max for semi-*)")

    p = sub.add_parser("table", help="print s, t, i for degrees 0..max")
    p.add_argument("--max", type=_nonneg, required=True)
    p.add_argument("--format", choices=["csv", "json", "md"], default="csv")

    p = sub.add_parser("classify", help="classify one generator")
    p.add_argument("--kind", choices=["transformation", "pperm"], required=True)
    p.add_argument("--input", required=True, help='images, e.g. "2 3 1 1" or "2 - 4 5 3"')

    p = sub.add_parser("construct", help="build a transformation with given threshold and period")
    p.add_argument("--threshold", type=_nonneg, required=True)
    p.add_argument("--period", type=_positive, required=True)
    p.add_argument("--degree", type=_positive, required=True)

    p = sub.add_parser("normal-form", help="reduce a word over x, X in the finite quotient")
    p.add_argument("--n", type=_nonneg, required=True, help="chain parameter")
    p.add_argument("--k", type=_positive, required=True, help="cycle parameter")
    p.add_argument("--word", required=True, help="word over x and X, may be empty")

    p = sub.add_parser("cayley", help="multiplication table of the finite quotient")
    p.add_argument("--n", type=_nonneg, required=True, help="chain parameter")
    p.add_argument("--k", type=_positive, required=True, help="cycle parameter")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("verify", help="run enumeration sweeps against the formulas")
    p.add_argument("--max-degree", type=_positive, required=True)
    return parser


def _cmd_count(args):
    func, lowest = _COUNT_FUNCS[args.func]
    if args.n is not None:
        if args.n < lowest:
            raise ValueError(f"--func {args.func} needs --n >= {lowest}")
        print(func(args.n))
    else:
        for n in range(lowest, args.max + 1):
            print(f"{n}\t{func(n)}")
    return 0


def _cmd_table(args):
    table = counting.count_table(args.max)
    if args.format == "csv":
        print(table.to_csv(), end="")
    elif args.format == "json":
        print(table.to_json())
    else:
        print(table.to_markdown(), end="")
    return 0


def _cmd_classify(args):
    if args.kind == "transformation":
        f = transform.parse_transformation(args.input)
        t, p = transform.threshold_period(f)
        index, period = transform.semigroup_index_period(f)
        print(f"threshold: {t}")
        print(f"period: {p}")
        print(f"monoid size: {transform.monogenic_monoid_size(f)}")
        print(f"semigroup index: {index}")
        print(f"semigroup period: {period}")
    else:
        f = pperm.parse_partial_perm(args.input)
        orbits = pperm.orbit_decomposition(f)
        ctype = pperm.classify(f)
        print(f"chains: {sorted(orbits.chain_lengths())}")
        print(f"cycles: {sorted(orbits.cycle_lengths())}")
        print(f"type: ({ctype.chain}, {ctype.cycle})")
        print(f"monoid size: {freeinv.ChainCycleMonoid(ctype.chain, ctype.cycle).size()}")
    return 0


def _minimal_permutation(period):
    """Permutation of minimal degree with the given order: one cycle per
    maximal prime-power divisor, on consecutive points."""
    parts = counting.prime_power_parts(period)
    if not parts:
        return transform.Transformation((1,))
    images = []
    start = 1
    for length in parts:
        images.extend(start + (j + 1) % length for j in range(length))
        start += length
    return transform.Transformation(images)


def _cmd_construct(args):
    minimal = counting.minimal_degree_for_order(args.period)
    if minimal + args.threshold > args.degree:
        raise ValueError(
            f"cannot realize threshold {args.threshold} and period {args.period} "
            f"in degree {args.degree}: minimal feasible degree is "
            f"{minimal + args.threshold}"
        )
    perm = _minimal_permutation(args.period)
    f = transform.construct_generator(args.degree, args.threshold, perm)
    assert transform.threshold_period(f) == (args.threshold, args.period)
    print(transform.format_transformation(f))
    return 0


def _cmd_normal_form(args):
    quotient = freeinv.ChainCycleMonoid(args.n, args.k)
    print(quotient.reduce(freeinv.free_eval(args.word)))
    return 0


def _cmd_cayley(args):
    quotient = freeinv.ChainCycleMonoid(args.n, args.k)
    if args.format == "csv":
        print(quotient.cayley_csv(), end="")
    else:
        print(quotient.cayley_json())
    return 0


def _cmd_verify(args):
    if args.max_degree > 7:
        raise ValueError("verification covers degrees 1..7")
    reports = oracle.run_verification(args.max_degree)
    ok = True
    for report in reports:
        print(report.to_json())
        ok = ok and report.match
    return 0 if ok else 1


_COMMANDS = {
    "count": _cmd_count,
    "table": _cmd_table,
    "classify": _cmd_classify,
    "construct": _cmd_construct,
    "normal-form": _cmd_normal_form,
    "cayley": _cmd_cayley,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
