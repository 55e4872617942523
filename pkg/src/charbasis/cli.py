"""The ``charbasis`` command.

Exit codes: 0 on success, 1 when a computation or validation fails, 2 for
usage errors (argparse reports those itself).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .expr import ExprError, coefficient, evaluate_text
from .multiset_tableaux import FillProfile, enumerate_mct
from .oracles import partition_algebra_dims
from .partitions import bell, format_partition, parse_composition, parse_partition
from .selftest import run_selftest
from .stable import gbar, product_st_multi_st
from .symfunc import Basis, SymExpr, to_json_obj


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _text_lines(f: SymExpr) -> list[str]:
    """One ``atom coeff`` line per term, largest size first."""
    terms = sorted(f.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-p for p in kv[0])))
    return [f"{f.basis.value}{format_partition(la)} {_fmt(c)}" for la, c in terms]


def _emit_expr(f: SymExpr, args) -> None:
    if args.json:
        print(json.dumps(to_json_obj(f), separators=(",", ":")))
    else:
        lines = _text_lines(f)
        print("\n".join(lines) if lines else "0")


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _composition_arg(text: str):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_expand(args) -> int:
    _emit_expr(evaluate_text(args.expr, Basis(args.basis)), args)
    return 0


def cmd_coeff(args) -> int:
    c = coefficient(args.expr, args.of)
    print(json.dumps({"coeff": _fmt(c)}) if args.json else _fmt(c))
    return 0


def cmd_tableaux(args) -> int:
    profile = FillProfile[args.profile.upper()]
    found = list(enumerate_mct(args.gamma, args.barred, args.alpha, profile, args.lattice))
    if args.json:
        out = {"count": len(found)}
        if args.print:
            out["tableaux"] = [t.render() for t in found]
        print(json.dumps(out))
        return 0
    print(len(found))
    if args.print:
        for t in found:
            print()
            print(t.render())
    return 0


def cmd_gbar(args) -> int:
    f = gbar(args.la, args.mu)
    if args.nu is not None:
        c = f.coeff(args.nu)
        print(json.dumps({"coeff": _fmt(c)}) if args.json else _fmt(c))
        return 0
    _emit_expr(f, args)
    return 0


def cmd_dims(args) -> int:
    if args.r < 0:
        raise ValueError("--r must be non-negative")
    if args.kind == "partition":
        dims = partition_algebra_dims(args.r)
    else:
        dims = {la: int(c) for la, c in product_st_multi_st((1,) * args.r, ()).terms.items()}
    order = sorted(dims, key=lambda la: (-sum(la), tuple(-p for p in la)))
    total = sum(d * d for d in dims.values())
    if args.json:
        out = {
            "kind": args.kind,
            "r": args.r,
            "dims": [{"partition": list(la), "dim": dims[la]} for la in order],
            "sum_of_squares": total,
        }
        if args.kind == "partition":
            out["bell_2r"] = bell(2 * args.r)
        print(json.dumps(out))
        return 0
    for la in order:
        print(f"{format_partition(la)} {dims[la]}")
    if not args.quiet:
        line = f"sum of squares {total}"
        if args.kind == "partition":
            line += f" (Bell({2 * args.r}) = {bell(2 * args.r)})"
        print(line)
    return 0


def cmd_selftest(args) -> int:
    results = run_selftest(args.max_degree)
    failed = [r for r in results if not r.ok]
    if args.json:
        print(
            json.dumps(
                [{"suite": r.name, "ok": r.ok, "failures": r.failures[:5]} for r in results]
            )
        )
    else:
        for r in results:
            if args.quiet and r.ok:
                continue
            print(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.seconds:.2f}s)")
            for msg in r.failures[:5]:
                print(f"    {msg}")
        print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    return 1 if failed else 0


def _max_degree(text: str) -> int:
    d = int(text)
    if d < 1:
        raise argparse.ArgumentTypeError("--max-degree must be at least 1")
    return d


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="less output")

    parser = argparse.ArgumentParser(
        prog="charbasis", description="Exact arithmetic in the character bases s-tilde and h-tilde."
    )
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--quiet", action="store_true", help="less output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand an expression in a basis")
    p.add_argument("expr")
    p.add_argument("--basis", choices=[b.value for b in Basis], default="st")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("coeff", parents=[common], help="one coefficient of an expression")
    p.add_argument("expr")
    p.add_argument("--of", required=True, help="a single basis element, e.g. st[4]")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("tableaux", parents=[common], help="count multiset tableaux")
    p.add_argument("--gamma", type=_partition_arg, default=None, help="shape above row 1 (all if omitted)")
    p.add_argument("--lambda", dest="barred", type=_partition_arg, required=True, help="barred content")
    p.add_argument("--alpha", type=_composition_arg, required=True, help="unbarred content")
    p.add_argument(
        "--profile", choices=[f.name.lower() for f in FillProfile], default="multiset"
    )
    p.add_argument("--lattice", action="store_true", help="keep lattice tableaux only")
    p.add_argument("--print", action="store_true", help="render the tableaux")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("gbar", parents=[common], help="stable Kronecker coefficients")
    p.add_argument("--lambda", dest="la", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, default=None)
    p.set_defaults(func=cmd_gbar)

    p = sub.add_parser("dims", parents=[common], help="partition algebra dimensions")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=["partition", "quasi"], default="partition")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("selftest", parents=[common], help="run the property suites")
    p.add_argument("--max-degree", type=_max_degree, default=3)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprError, ValueError, ArithmeticError) as exc:
        print(f"charbasis: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
