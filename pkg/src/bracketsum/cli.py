"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .identities import registry
from .lucas import LucasParams, lucas_pair, lucas_pair_mod, lucas_quotient
from .numtheory import DomainError
from .poly import cyclotomic_poly
from .sums import BracketQuery, a_poly, bracket_direct, bracket_via_w
from .verify import format_record, format_table, verify_all

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_A_EXCLUDED = "a must not be 0, 1 or -1: every sum here assumes a fixed integer a != 0, +-1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _a_value(text: str) -> int:
    a = int(text)
    if a in (-1, 0, 1):
        raise argparse.ArgumentTypeError(_A_EXCLUDED)
    return a


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bracketsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sum", help="filtered binomial sum over k = r (mod m) of C(n,k) a^k")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=_a_value, required=True)
    p.add_argument("--method", choices=("direct", "via-w", "both"), default="direct")

    p = sub.add_parser("apoly", help="coefficients (ascending) of the W characteristic polynomial")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--a", type=_a_value, required=True)

    p = sub.add_parser("cyclotomic", help="coefficients (ascending) of the m-th cyclotomic polynomial")
    p.add_argument("--m", type=_positive, required=True)

    p = sub.add_parser("lucas", help="u_n(A,B), v_n(A,B), optionally reduced")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--modulus", type=int)

    p = sub.add_parser("quotient", help="Lucas quotient u_index(A,B)/p mod p")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--index", type=int, required=True)

    p = sub.add_parser("verify", help="sweep registry identities over primes")
    p.add_argument("--id", dest="ids", action="append", help="identity id (repeatable); default all")
    p.add_argument("--prime-min", type=int, default=3)
    p.add_argument("--prime-max", type=int, default=200)
    p.add_argument("--a-min", type=int, default=-6)
    p.add_argument("--a-max", type=int, default=6)
    p.add_argument("--format", choices=("table", "json-lines"), default="table")
    p.add_argument("--parallelism", type=_positive, default=1)
    p.add_argument("--w-method", choices=("recurrence", "closed"), default="recurrence")

    sub.add_parser("list", help="list registry identities")
    return parser


def _cmd_sum(args) -> int:
    q = BracketQuery(args.n, args.r, args.m, args.a)
    if args.method == "direct":
        print(bracket_direct(q))
    elif args.method == "via-w":
        print(bracket_via_w(q))
    else:
        direct, via_w = bracket_direct(q), bracket_via_w(q)
        print(f"direct={direct} via-w={via_w} match={'yes' if direct == via_w else 'no'}")
    return EXIT_OK


def _cmd_lucas(args) -> int:
    params = LucasParams(args.A, args.B)
    if args.modulus is None:
        pair = lucas_pair(params, args.index)
    else:
        pair = lucas_pair_mod(params, args.index, args.modulus)
    print(f"u={pair.u} v={pair.v}")
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    if args.prime_min > args.prime_max:
        parser.error("--prime-min must not exceed --prime-max")
    if args.a_min > args.a_max:
        parser.error("--a-min must not exceed --a-max")
    known = {ident.id for ident in registry()}
    for ident_id in args.ids or ():
        if ident_id not in known:
            parser.error(f"unknown identity {ident_id!r}; see 'bracketsum list'")
    a_values = [a for a in range(args.a_min, args.a_max + 1) if a not in (-1, 0, 1)]
    reports = verify_all(
        args.prime_max,
        a_values,
        prime_min=args.prime_min,
        parallelism=args.parallelism,
        w_method=args.w_method,
        ids=args.ids,
    )
    if args.format == "table":
        print(format_table(reports))
    else:
        for rep in reports:
            print(format_record(rep))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sum":
            return _cmd_sum(args)
        if args.command == "apoly":
            print(list(a_poly(args.m, args.a).coeffs))
        elif args.command == "cyclotomic":
            print(list(cyclotomic_poly(args.m).coeffs))
        elif args.command == "lucas":
            return _cmd_lucas(args)
        elif args.command == "quotient":
            print(lucas_quotient(LucasParams(args.A, args.B), args.p, args.index))
        elif args.command == "verify":
            return _cmd_verify(args, parser)
        elif args.command == "list":
            for ident in registry():
                print(f"{ident.id} | {ident.anchor} | {ident.params_kind.value}")
    except DomainError as exc:
        print(f"bracketsum: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
