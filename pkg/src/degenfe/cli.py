"""Command-line interface: ``degenfe {family,numbers,represent,verify}``.

Exit codes: 0 success (all reports hold), 1 a verification failed, 2 usage
or parameter error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import identities, numbers
from .exact_poly import Poly, as_rational
from .families import Family, FamilyKind, family_poly, family_table, gf_oracle
from .numbers import DegenParams, ParameterError
from .render import csv_text, latex_expansion, latex_family_table
from .representation import (
    Variant,
    agreement_matrix,
    all_variants,
    represent,
    verify_expansion,
)

KINDS = [f.value for f in Family]
SEQUENCES = [
    "stirling2",
    "harmonic",
    "bernoulli",
    "euler",
    "fe",
    "degen-fe",
    "one-lambda",
    "delta-zero",
]
IDENTITIES = ["miki", "5a", "5b", "5c", "5d", "5e", "5f", "all"]


class UsageError(Exception):
    pass


# -- argument parsing helpers ------------------------------------------------------

def rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def int_range(text: str) -> list[int]:
    """``"5"``, ``"2..8"`` or ``"1,3,5"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty range")
    return out


_MEMBER = re.compile(r"^\s*([a-z-]+)\s*\(\s*(\d+)\s*\)\s*$")


def parse_poly(text: str, kind_params: dict | None = None) -> Poly:
    """Parse ``c0,c1,...``, a JSON array, ``@file.json``, ``-`` (stdin), or
    ``kind(n)`` naming a family member built with the command's parameters."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    m = _MEMBER.match(text)
    if m:
        kind = make_kind(m.group(1), **(kind_params or {}))
        return family_poly(kind, int(m.group(2)))
    try:
        if text.startswith("["):
            items = json.loads(text)
            if not isinstance(items, list):
                raise ValueError
            return Poly(as_rational(str(c)) for c in items)
        return Poly(as_rational(c) for c in text.split(",") if c.strip())
    except (ValueError, TypeError, json.JSONDecodeError):
        raise UsageError(f"cannot parse polynomial: {text!r}") from None


def make_kind(tag: str, lambda_=None, u=None, r=None) -> FamilyKind:
    try:
        family = Family(tag)
    except ValueError:
        raise UsageError(f"unknown family {tag!r}; expected one of {', '.join(KINDS)}") from None
    if family in (Family.FROBENIUS_EULER, Family.DEGENERATE_FROBENIUS_EULER) and u is None:
        raise UsageError(f"--u is required for {tag}")
    if family in (Family.DEGENERATE_EULER, Family.DEGENERATE_FROBENIUS_EULER, Family.DEGENERATE_FALLING_FACTORIAL):
        if lambda_ is None:
            raise UsageError(f"--lambda is required for {tag}")
    return FamilyKind(
        family,
        lambda_=lambda_ if lambda_ is not None else 0,
        u=u if u is not None else -1,
        r=r if r is not None else 1,
    )


def _kind_from_args(args, tag: str) -> FamilyKind:
    return make_kind(tag, args.lambda_, args.u, args.r)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


# -- subcommands -----------------------------------------------------------------

def cmd_family(args) -> int:
    kind = _kind_from_args(args, args.kind)
    table = family_table(kind, args.n, cap=args.cap)
    agrees = gf_oracle(kind, args.n) == table if args.oracle else None
    if args.format == "latex":
        print(latex_family_table(kind, table))
    elif args.format == "csv":
        rows = [["n"] + [f"c{i}" for i in range(args.n + 1)]]
        rows += [[n] + p.to_json() for n, p in enumerate(table)]
        print(csv_text(rows))
    else:
        out = {"kind": kind.tag.value, "params": kind.params, "table": [p.to_json() for p in table]}
        if agrees is not None:
            out["oracle_agrees"] = agrees
        _emit(out)
    if agrees is False:
        return 1
    return 0


def _number_rows(args):
    seq, n_max = args.seq, args.n
    lam = args.lambda_ if args.lambda_ is not None else Fraction(0)
    u = args.u
    r = args.r if args.r is not None else 1
    if seq in ("fe", "degen-fe") and u is None:
        raise UsageError(f"--u is required for {seq}")
    if seq in ("stirling2", "delta-zero") and args.k is None:
        raise UsageError(f"--k is required for {seq}")
    start = 1 if seq == "harmonic" else 0
    for n in range(start, n_max + 1):
        if seq == "stirling2":
            v = numbers.stirling2(n, args.k)
        elif seq == "harmonic":
            v = numbers.harmonic(n)
        elif seq == "bernoulli":
            v = numbers.bernoulli_number(n)
        elif seq == "euler":
            v = numbers.euler_number(n)
        elif seq == "fe":
            v = numbers.frobenius_euler_number(n, u, r)
        elif seq == "degen-fe":
            v = numbers.degen_fe_number(n, DegenParams(lam, u, r))
        elif seq == "one-lambda":
            v = numbers.one_nlambda(n, lam)
        else:
            v = numbers.delta_zero(n, args.k, lam)
        yield n, Fraction(v)


def cmd_numbers(args) -> int:
    rows = list(_number_rows(args))
    if args.format == "csv":
        print(csv_text([["n", "value"]] + [[n, v] for n, v in rows]))
    elif args.format == "latex":
        from .exact_poly import latex_rational

        print(", ".join(f"{latex_rational(v)}" for _, v in rows))
    else:
        for n, v in rows:
            _emit({"n": n, "value": str(v)})
    return 0


def cmd_represent(args) -> int:
    kind = _kind_from_args(args, args.basis)
    p = parse_poly(args.poly, {"lambda_": args.lambda_, "u": args.u, "r": args.r})
    if args.all_variants:
        exps = all_variants(p, kind)
        if not exps:
            exps = {Variant.OPERATOR: represent(p, kind)}
        matrix = agreement_matrix(exps)
        first = next(iter(exps.values()))
        verified = verify_expansion(p, first) and all(all(row.values()) for row in matrix.values())
        out = first.to_json()
        out["variants"] = {v.value: [str(c) for c in e.coeffs] for v, e in exps.items()}
        out["agreement"] = matrix
        out["verified"] = verified
        e = first
    else:
        e = represent(p, kind, args.variant)
        verified = verify_expansion(p, e)
        out = e.to_json()
        out["variant"] = args.variant
        out["verified"] = verified
    if args.format == "latex":
        print(latex_expansion(p, kind, e.coeffs))
    elif args.format == "csv":
        print(csv_text([["k", "coeff"]] + [[k, c] for k, c in enumerate(e.coeffs)]))
    else:
        _emit(out)
    return 0 if verified else 1


def _verify_cases(args):
    """Yield ``(identity, params, thunk)`` in a fixed order."""
    selected = IDENTITIES[:-1] if args.identity == "all" else [args.identity]
    lam = args.lambda_ if args.lambda_ is not None else Fraction(1)
    u = args.u if args.u is not None else Fraction(2)
    v = args.v if args.v is not None else Fraction(3)
    r = args.r if args.r is not None else 2
    for ident in selected:
        if ident == "miki":
            for n in args.n:
                yield ident, {"n": n}, lambda n=n: [
                    identities.check_miki_variant(n),
                    identities.check_miki_at(n, 0),
                    identities.check_miki_at(n, Fraction(1, 2)),
                    identities.check_miki_full(n),
                ]
        elif ident in ("5e", "5f"):
            for m in args.m:
                for n in args.n:
                    params = {"m": m, "n": n, "lambda": lam, "u": u}
                    params.update({"r": r} if ident == "5e" else {"v": v})
                    yield ident, params, lambda m=m, n=n, ident=ident: identities.check_sec5(
                        ident, m=m, n=n, lambda_=lam, u=u, v=v, r=r
                    )
        else:
            for n in args.n:
                params = {"n": n, "lambda": lam, "u": u} if ident == "5a" else {"n": n, "lambda": lam}
                yield ident, params, lambda n=n, ident=ident: identities.check_sec5(
                    ident, n=n, lambda_=lam, u=u
                )


def cmd_verify(args) -> int:
    all_hold = True
    csv_rows = [["name", "params", "holds"]]
    for ident, params, thunk in _verify_cases(args):
        try:
            reports = thunk()
        except ParameterError as exc:
            all_hold = False
            shown = {k: str(v) if isinstance(v, Fraction) else v for k, v in params.items()}
            if args.format == "csv":
                csv_rows.append([ident, json.dumps(shown), f"error: {exc}"])
            else:
                _emit({"identity": ident, "params": shown, "error": str(exc)})
            continue
        for rep in reports:
            all_hold &= rep.holds
            if args.format == "csv":
                csv_rows.append([rep.name, json.dumps(rep.to_json()["params"]), rep.holds])
            elif args.format == "latex":
                print(f"% {rep.name} {rep.to_json()['params']}: holds={rep.holds}")
                print(f"{rep.lhs.to_latex()} - \\left({rep.rhs.to_latex()}\\right) = {rep.discrepancy.to_latex()}")
            else:
                _emit({"identity": ident, **rep.to_json()})
    if args.format == "csv":
        print(csv_text(csv_rows))
    return 0 if all_hold else 1


# -- parser ----------------------------------------------------------------------

def _add_params(p: argparse.ArgumentParser, r_default=None) -> None:
    p.add_argument("--lambda", dest="lambda_", type=rational_arg, default=None, help="degeneration parameter")
    p.add_argument("--u", type=rational_arg, default=None, help="Frobenius parameter (u != 1)")
    p.add_argument("--r", type=int, default=r_default, help="order")
    p.add_argument("--format", choices=["json", "latex", "csv"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degenfe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="table of a polynomial family")
    fam.add_argument("--kind", required=True, choices=KINDS)
    fam.add_argument("--n", type=int, required=True, help="largest index")
    fam.add_argument("--oracle", action="store_true", help="cross-check with the generating function")
    fam.add_argument("--cap", type=int, default=64, help="largest n accepted")
    _add_params(fam)
    fam.set_defaults(func=cmd_family)

    num = sub.add_parser("numbers", help="special number sequence")
    num.add_argument("--seq", required=True, choices=SEQUENCES)
    num.add_argument("--n", type=int, required=True, help="largest index")
    num.add_argument("--k", type=int, default=None)
    _add_params(num)
    num.set_defaults(func=cmd_numbers)

    rep = sub.add_parser("represent", help="expand a polynomial in a basis")
    rep.add_argument("poly", help='"c0,c1,...", JSON array, @file.json, "-" for stdin, or kind(n)')
    rep.add_argument("--basis", required=True, choices=KINDS)
    rep.add_argument("--variant", choices=[v.value for v in Variant], default="operator")
    rep.add_argument("--all-variants", action="store_true", help="run every variant and report agreement")
    _add_params(rep)
    rep.set_defaults(func=cmd_represent)

    ver = sub.add_parser("verify", help="check identities exactly")
    ver.add_argument("--identity", choices=IDENTITIES, default="all")
    ver.add_argument("--n", type=int_range, default=int_range("2..8"))
    ver.add_argument("--m", type=int_range, default=int_range("1"))
    ver.add_argument("--v", type=rational_arg, default=None)
    _add_params(ver)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"degenfe {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
