"""Command line front end.

Exit codes: 0 success, 1 bad input (syntax or scope), 2 enumeration
capacity exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import Sequence

from . import commutators, compositions, homalg
from .compositions import CompositionId
from .errors import CapacityError, NilmultError, ParseError, ScopeError, VerificationError
from .expr import parse_group
from .fgab import FgAbGroup
from .multiplier import (
    free_product_coprime_cyclic,
    free_product_n2_many,
    nilpotent_multiplier,
)

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_VERIFY = 0, 1, 2, 3

FUNCTORS = {
    "tensor": homalg.tensor,
    "hom": homalg.hom,
    "ext1": homalg.ext1,
    "tor1": homalg.tor1,
}

WITNESS_D = "Z + Z4"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _emit_group(args, G: FgAbGroup) -> None:
    _emit(args, str(G), G.to_json())


def _cyclic_order(G: FgAbGroup) -> int | None:
    if G.free_rank == 0 and len(G.torsion) == 1 and G.torsion[0][1] == 1:
        return G.torsion[0][0]
    return None


def multiplier_of(text: str, c: int) -> FgAbGroup:
    expr = parse_group(text)
    if not expr.is_free_product:
        return nilpotent_multiplier(expr.to_group(), c)
    factors = expr.factor_groups()
    if c == 2:
        return free_product_n2_many(factors)
    orders = [_cyclic_order(G) for G in factors]
    nontrivial = [d for d, G in zip(orders, factors) if not G.is_trivial]
    if all(d is not None for d in nontrivial) and all(
        gcd(a, b) == 1 for i, a in enumerate(nontrivial) for b in nontrivial[i + 1 :]
    ):
        return free_product_coprime_cyclic(nontrivial, c)
    raise ScopeError(
        f"N_{c}M of a free product is only available for c = 2 or for pairwise "
        "coprime cyclic factors"
    )


def cmd_normalize(args) -> int:
    _emit_group(args, parse_group(args.expr).to_group())
    return EXIT_OK


def cmd_multiplier(args) -> int:
    _emit_group(args, multiplier_of(args.expr, args.c))
    return EXIT_OK


def cmd_functor(args) -> int:
    A = parse_group(args.a).to_group()
    B = parse_group(args.b).to_group()
    _emit_group(args, FUNCTORS[args.name](A, B))
    return EXIT_OK


def cmd_witt(args) -> int:
    count = commutators.witt_count(args.n, args.w)
    _emit(args, str(count), {"n": args.n, "w": args.w, "count": count})
    return EXIT_OK


def cmd_hall(args) -> int:
    basis = [str(bc) for bc in commutators.hall_basis(args.n, args.w)]
    _emit(args, "\n".join(basis), {"n": args.n, "w": args.w, "basis": basis})
    return EXIT_OK


def _ranges(args, default_m: int, default_c: int):
    if args.grid:
        ms = [args.m] if args.m is not None else list(range(2, 31))
        cs = [args.c] if args.c is not None else [1, 2, 3]
    else:
        ms = [args.m if args.m is not None else default_m]
        cs = [args.c if args.c is not None else default_c]
    return ms, cs


def _groups(args) -> list[FgAbGroup]:
    if args.grid and args.group is None:
        return compositions.grid_groups()
    return [parse_group(args.group or WITNESS_D).to_group()]


def _check_theorem(args, theorem: str) -> tuple[list[str], list]:
    ids = [i for i in CompositionId if i.theorem == theorem]
    ms, cs = _ranges(args, 4, 2)
    reports = compositions.sweep(ids, ms, cs, _groups(args))
    if args.grid:
        lines = [f"PASS {theorem}: {len(reports)} reports, closed form = chained = oracle"]
    else:
        lines = [str(r) for r in reports]
    return lines, [r.to_json() for r in reports]


def _check_corollary(args) -> tuple[list[str], list]:
    ms, cs = _ranges(args, 4, 2)
    groups = _groups(args)
    pairs = {
        "Ext1(Zm,-)": CompositionId.T34_I,
        "Tor1(Zm,-)": CompositionId.T34_V,
        "Ext1(-,Zm)": CompositionId.T34_III,
    }
    results = []
    witnessed = {name: False for name in ("Tor1(Zm,-)", "Ext1(-,Zm)")}
    for m in ms:
        for c in cs:
            for D in groups:
                for name, id in pairs.items():
                    r = compositions.report(id, m, c, D, oracle=False)
                    if id is CompositionId.T34_I or D.is_finite:
                        if not r.commutes_with_partner:
                            raise VerificationError(
                                f"{name} fails to commute at m={m}, c={c}, D={D}"
                            )
                    elif not r.commutes_with_partner:
                        witnessed[name] = True
                    results.append(r.to_json())
    lines = [
        f"PASS 3.5(i): Ext1(Zm,-) commutes on {len(groups)} group(s)",
        "PASS 3.5(ii): Tor1(Zm,-) and Ext1(-,Zm) commute on every finite group",
    ]
    if any(not D.is_finite for D in groups):
        missing = [k for k, v in witnessed.items() if not v]
        if missing and args.grid:
            raise VerificationError(f"no infinite witness of non-commutation for {missing}")
        for name, seen in witnessed.items():
            state = "witnessed" if seen else "not witnessed here"
            lines.append(f"INFO 3.5(iii): non-commutation of {name} {state}")
    return lines, results


def _check_examples(args) -> tuple[list[str], list]:
    ns = [args.m] if args.m is not None else (list(range(2, 13)) if args.grid else [2])
    cs = [args.c] if args.c is not None else ([1, 2, 3] if args.grid else [1])
    lines, payload = [], []
    for n in ns:
        for c in cs:
            for r in compositions.counterexample_suite(n, c):
                if not r.reproduced:
                    raise VerificationError(f"example ({r.label}) at n={n}, c={c}: {r}")
                lines.append(f"n={n} c={c} {r}")
                payload.append({"n": n, "c": c, **r.to_json()})
    return lines, payload


def cmd_check(args) -> int:
    if args.theorem in ("3.4", "3.6"):
        lines, payload = _check_theorem(args, args.theorem)
    elif args.theorem == "3.5":
        lines, payload = _check_corollary(args)
    else:
        lines, payload = _check_examples(args)
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output"
    )

    parser = _Parser(
        prog="nilmult",
        description="Nilpotent multipliers of finitely generated abelian groups.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", parents=[common], help="canonical invariant-factor form")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("multiplier", parents=[common], help="c-nilpotent multiplier")
    p.add_argument("-c", type=int, default=1, help="nilpotency class (default 1)")
    p.add_argument("expr")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("functor", parents=[common], help="tensor, hom, ext1 or tor1")
    p.add_argument("name", choices=sorted(FUNCTORS))
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_functor)

    for name, func, text in (
        ("witt", cmd_witt, "number of basic commutators"),
        ("hall", cmd_hall, "list the Hall basis"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("-n", type=int, required=True, help="number of letters")
        p.add_argument("-w", type=int, required=True, help="weight")
        p.set_defaults(func=func)

    p = sub.add_parser("check", parents=[common], help="verify commutation identities")
    p.add_argument("--theorem", required=True, choices=["3.4", "3.5", "3.6", "examples"])
    p.add_argument("-m", type=int, default=None, help="m of Z_m (n of Z_n for examples)")
    p.add_argument("-c", type=int, default=None, help="nilpotency class")
    p.add_argument("--grid", action="store_true", help="sweep the full verification grid")
    p.add_argument("--group", default=None, help=f"the group D (default {WITNESS_D!r})")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        return args.func(args)
    except ParseError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ScopeError as e:
        print(f"out of scope: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as e:
        print(f"capacity: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, NilmultError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
