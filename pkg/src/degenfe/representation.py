"""Expansion of arbitrary polynomials in (higher-order) degenerate
Frobenius-Euler and Euler bases.

Each ``represent_*`` function offers several closed-form coefficient
formulas (:class:`Variant`); they are algebraically equal, and the test suite
checks they agree exactly.  ``basis_convert_oracle`` is an independent route:
plain back-substitution against the generated basis.

Notation in comments: ``Delta`` is the forward difference with step lambda,
``tilde`` is ``p(x+1) + p(x)``, ``S2`` the Stirling numbers of the second kind.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_poly import ZERO, Poly, RationalLike, as_rational, binomial_rows
from .families import (
    Family,
    FamilyKind,
    degenerate_euler,
    degenerate_frobenius_euler,
    family_poly,
    family_table,
    frobenius_euler,
)
from .numbers import ParameterError, check_u, stirling2
from .operators import delta_combo, f_op, forward_diff, g_op, tilde_combo, tilde_diff


class Variant(str, enum.Enum):
    OPERATOR = "operator"
    DELTA = "delta"
    BINOMIAL = "binomial"
    STIRLING = "stirling"
    LADDER = "ladder"


#: variants that divide by lambda**k
LAMBDA_DIVIDING = frozenset({Variant.OPERATOR, Variant.DELTA, Variant.BINOMIAL, Variant.LADDER})
FIRST_ORDER_VARIANTS = (Variant.OPERATOR, Variant.DELTA, Variant.BINOMIAL, Variant.STIRLING)
ORDER_R_VARIANTS = (Variant.OPERATOR, Variant.DELTA, Variant.BINOMIAL, Variant.LADDER, Variant.STIRLING)


class RepresentationError(ParameterError):
    pass


@dataclass(frozen=True)
class Expansion:
    kind: FamilyKind
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    def to_json(self) -> dict:
        return {
            "basis": self.kind.tag.value,
            "params": self.kind.params,
            "coeffs": [str(c) for c in self.coeffs],
        }


def _prepare(p: Poly, lam: Fraction, variant: Variant, allowed) -> int:
    variant = Variant(variant)
    if variant not in allowed:
        raise RepresentationError(f"variant {variant.value!r} is not available for this basis")
    if lam == 0 and variant in LAMBDA_DIVIDING:
        raise RepresentationError(
            f"lambda must be nonzero for the {variant.value!r} variant (only 'stirling' admits lambda = 0)"
        )
    return 0 if p.is_zero() else p.degree


def _zero_expansion(kind: FamilyKind) -> Expansion:
    return Expansion(kind, (Fraction(0),))


def _alt_row(k: int) -> list:
    row = binomial_rows(k)[k]
    return [row[i] if (k - i) % 2 == 0 else -row[i] for i in range(k + 1)]


# -- first order, general u ----------------------------------------------------

def represent_dfe(p: Poly, lambda_: RationalLike, u: RationalLike, variant=Variant.OPERATOR) -> Expansion:
    """Coefficients of ``p`` in the basis ``h_{k,lambda}(x|u)``."""
    lam, u = as_rational(lambda_), as_rational(u)
    check_u(u)
    variant = Variant(variant)
    n = _prepare(p, lam, variant, FIRST_ORDER_VARIANTS)
    kind = degenerate_frobenius_euler(lam, u, 1)
    if p.is_zero():
        return _zero_expansion(kind)
    one_minus_u = 1 - u
    out = []
    if variant is Variant.OPERATOR:
        a = p.shift(1) - p.scale(u)
        for k in range(n + 1):
            out.append(f_op(a, lam, k).evaluate(0) / (one_minus_u * math.factorial(k)))
    elif variant is Variant.DELTA:
        # a(x) = tilde p(x) - (1+u) p(x)
        for k in range(n + 1):
            dk = delta_combo(lam, k)
            val = (dk * tilde_combo(1)).pair(p) - (1 + u) * dk.pair(p)
            out.append(val / (one_minus_u * math.factorial(k) * lam**k))
    elif variant is Variant.BINOMIAL:
        for k in range(n + 1):
            row = _alt_row(k)
            s = sum(
                (row[j] * (p.evaluate(1 + j * lam) - u * p.evaluate(j * lam)) for j in range(k + 1)),
                Fraction(0),
            )
            out.append(s / (one_minus_u * math.factorial(k) * lam**k))
    else:
        diffs = [p.derivative(l) for l in range(n + 1)]
        vals = [(d.evaluate(1) - u * d.evaluate(0)) / math.factorial(l) for l, d in enumerate(diffs)]
        for k in range(n + 1):
            s = sum((stirling2(l, k) * lam ** (l - k) * vals[l] for l in range(k, n + 1)), Fraction(0))
            out.append(s / one_minus_u)
    return Expansion(kind, out)


def dfe_delta_form_as_printed(p: Poly, lambda_: RationalLike, u: RationalLike) -> Expansion:
    """Delta form with the ``+(1-u) Delta^k p(0)`` correction term.

    The algebraically consistent decomposition uses ``-(1+u)``; this
    function exists so the difference can be checked.
    """
    lam, u = as_rational(lambda_), as_rational(u)
    check_u(u)
    n = _prepare(p, lam, Variant.DELTA, FIRST_ORDER_VARIANTS)
    out = []
    for k in range(n + 1):
        dk = delta_combo(lam, k)
        val = (dk * tilde_combo(1)).pair(p) + (1 - u) * dk.pair(p)
        out.append(val / ((1 - u) * math.factorial(k) * lam**k))
    return Expansion(degenerate_frobenius_euler(lam, u, 1), out)


def represent_de(p: Poly, lambda_: RationalLike, variant=Variant.OPERATOR) -> Expansion:
    """Coefficients of ``p`` in the degenerate Euler basis."""
    lam = as_rational(lambda_)
    variant = Variant(variant)
    n = _prepare(p, lam, variant, FIRST_ORDER_VARIANTS)
    kind = degenerate_euler(lam, 1)
    if p.is_zero():
        return _zero_expansion(kind)
    out = []
    if variant is Variant.OPERATOR:
        a = p.shift(1) + p
        for k in range(n + 1):
            out.append(f_op(a, lam, k).evaluate(0) / (2 * math.factorial(k)))
    elif variant is Variant.DELTA:
        for k in range(n + 1):
            val = (delta_combo(lam, k) * tilde_combo(1)).pair(p)
            out.append(val / (2 * math.factorial(k) * lam**k))
    elif variant is Variant.BINOMIAL:
        for k in range(n + 1):
            row = _alt_row(k)
            s = sum(
                (row[j] * (p.evaluate(1 + j * lam) + p.evaluate(j * lam)) for j in range(k + 1)),
                Fraction(0),
            )
            out.append(s / (2 * math.factorial(k) * lam**k))
    else:
        vals = [
            (d.evaluate(1) + d.evaluate(0)) / math.factorial(l)
            for l, d in enumerate(p.derivative(l) for l in range(n + 1))
        ]
        for k in range(n + 1):
            s = sum((stirling2(l, k) * lam ** (l - k) * vals[l] for l in range(k, n + 1)), Fraction(0))
            out.append(s / 2)
    return Expansion(kind, out)


# -- order r -------------------------------------------------------------------

def _check_order(r: int, variant: Variant) -> None:
    if not isinstance(r, int) or r < 0:
        raise RepresentationError("r must be a nonnegative integer")
    if variant is Variant.LADDER and r == 0:
        raise RepresentationError("the ladder variant requires r >= 1")


def represent_dfe_r(
    p: Poly, lambda_: RationalLike, u: RationalLike, r: int, variant=Variant.OPERATOR
) -> Expansion:
    """Coefficients of ``p`` in ``h^{(r)}_{k,lambda}(x|u)``."""
    lam, u = as_rational(lambda_), as_rational(u)
    check_u(u)
    variant = Variant(variant)
    _check_order(r, variant)
    n = _prepare(p, lam, variant, ORDER_R_VARIANTS)
    kind = degenerate_frobenius_euler(lam, u, r)
    if p.is_zero():
        return _zero_expansion(kind)
    rrow = binomial_rows(r)[r]
    # weights C(r,j) (-u)^(r-j)
    gw = [rrow[j] * (-u) ** (r - j) for j in range(r + 1)]
    norm = (1 - u) ** r
    out = []
    if variant is Variant.OPERATOR:
        for k in range(n + 1):
            out.append(g_op(f_op(p, lam, k), u, r).evaluate(0) / math.factorial(k))
    elif variant is Variant.DELTA:
        for k in range(n + 1):
            q = forward_diff(p, lam, k)
            s = sum((gw[j] * q.evaluate(j) for j in range(r + 1)), Fraction(0))
            out.append(s / (norm * math.factorial(k) * lam**k))
    elif variant is Variant.BINOMIAL:
        for k in range(n + 1):
            krow = _alt_row(k)
            s = Fraction(0)
            for j in range(r + 1):
                for l in range(k + 1):
                    s += gw[j] * krow[l] * p.evaluate(l * lam + j)
            out.append(s / (norm * math.factorial(k) * lam**k))
    elif variant is Variant.LADDER:
        r1 = binomial_rows(r - 1)[r - 1]
        lw = [r1[j] * (-u) ** (r - 1 - j) for j in range(r)]
        a = p.shift(1) - p.scale(u)
        for k in range(n + 1):
            q = forward_diff(a, lam, k)
            s = sum((lw[j] * q.evaluate(j) for j in range(r)), Fraction(0))
            out.append(s / (norm * math.factorial(k) * lam**k))
    else:
        diffs = [p.derivative(l) for l in range(n + 1)]
        # vals[l] = sum_j C(r,j)(-u)^(r-j) p^(l)(j) / l!
        vals = [
            sum((gw[j] * d.evaluate(j) for j in range(r + 1)), Fraction(0)) / math.factorial(l)
            for l, d in enumerate(diffs)
        ]
        for k in range(n + 1):
            s = sum((stirling2(l, k) * lam ** (l - k) * vals[l] for l in range(k, n + 1)), Fraction(0))
            out.append(s / norm)
    return Expansion(kind, out)


def represent_de_r(p: Poly, lambda_: RationalLike, r: int, variant=Variant.OPERATOR) -> Expansion:
    """Coefficients of ``p`` in the order-``r`` degenerate Euler basis."""
    lam = as_rational(lambda_)
    variant = Variant(variant)
    _check_order(r, variant)
    n = _prepare(p, lam, variant, ORDER_R_VARIANTS)
    kind = degenerate_euler(lam, r)
    if p.is_zero():
        return _zero_expansion(kind)
    norm = Fraction(2) ** r
    rrow = binomial_rows(r)[r]
    out = []
    if variant is Variant.OPERATOR:
        for k in range(n + 1):
            out.append(tilde_diff(f_op(p, lam, k), r).evaluate(0) / (norm * math.factorial(k)))
    elif variant is Variant.DELTA:
        for k in range(n + 1):
            val = tilde_diff(forward_diff(p, lam, k), r).evaluate(0)
            out.append(val / (norm * math.factorial(k) * lam**k))
    elif variant is Variant.BINOMIAL:
        for k in range(n + 1):
            krow = _alt_row(k)
            s = Fraction(0)
            for j in range(r + 1):
                for l in range(k + 1):
                    s += rrow[j] * krow[l] * p.evaluate(j + l * lam)
            out.append(s / (norm * math.factorial(k) * lam**k))
    elif variant is Variant.LADDER:
        a = p.shift(1) + p
        for k in range(n + 1):
            val = (tilde_combo(r - 1) * delta_combo(lam, k)).pair(a)
            out.append(val / (norm * math.factorial(k) * lam**k))
    else:
        vals = [
            sum((rrow[j] * d.evaluate(j) for j in range(r + 1)), Fraction(0)) / math.factorial(l)
            for l, d in enumerate(p.derivative(l) for l in range(n + 1))
        ]
        for k in range(n + 1):
            s = sum((stirling2(l, k) * lam ** (l - k) * vals[l] for l in range(k, n + 1)), Fraction(0))
            out.append(s / norm)
    return Expansion(kind, out)


def represent_classical(p: Poly, u: RationalLike, r: int = 1, *, ladder: bool = False) -> Expansion:
    """Coefficients of ``p`` in ``H^{(r)}_k(x|u)`` (``u = -1``: Euler).

    ``ladder=True`` uses the equivalent sum over ``j < r`` of
    ``p^{(k)}(j+1) - u p^{(k)}(j)``.
    """
    u = as_rational(u)
    check_u(u)
    if not isinstance(r, int) or r < 0:
        raise RepresentationError("r must be a nonnegative integer")
    if ladder and r == 0:
        raise RepresentationError("the ladder form requires r >= 1")
    kind = frobenius_euler(u, r)
    if p.is_zero():
        return _zero_expansion(kind)
    n = p.degree
    norm = (1 - u) ** r
    out = []
    for k in range(n + 1):
        d = p.derivative(k)
        if ladder:
            row = binomial_rows(r - 1)[r - 1]
            s = sum(
                (row[j] * (-u) ** (r - 1 - j) * (d.evaluate(j + 1) - u * d.evaluate(j)) for j in range(r)),
                Fraction(0),
            )
        else:
            row = binomial_rows(r)[r]
            s = sum((row[j] * (-u) ** (r - j) * d.evaluate(j) for j in range(r + 1)), Fraction(0))
        out.append(s / (norm * math.factorial(k)))
    return Expansion(kind, out)


# -- reconstruction and oracle ---------------------------------------------------

def reconstruct(e: Expansion) -> Poly:
    """``sum_k a_k s_k(x)`` over the expansion's basis."""
    out = ZERO
    for k, a in enumerate(e.coeffs):
        if a:
            out = out + family_poly(e.kind, k).scale(a)
    return out


def basis_convert_oracle(p: Poly, kind: FamilyKind) -> Expansion:
    """Expand ``p`` in ``kind`` by back-substitution from the top degree."""
    if p.is_zero():
        return _zero_expansion(kind)
    n = p.degree
    basis = family_table(kind, n, cap=max(n, 64))
    residual = p
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        lead = basis[k].coeff(k)
        if basis[k].degree != k or lead == 0:
            raise RepresentationError(f"basis member {k} does not have degree {k}")
        a = residual.coeff(k) / lead
        coeffs[k] = a
        if a:
            residual = residual - basis[k].scale(a)
    if not residual.is_zero():
        raise AssertionError("back-substitution left a residual")
    return Expansion(kind, coeffs)


def represent(p: Poly, kind: FamilyKind, variant=Variant.OPERATOR) -> Expansion:
    """Dispatch to the closed-form expansion for ``kind``.

    Bernoulli has no closed form here and goes through the oracle; classical
    kinds ignore ``variant``.
    """
    variant = Variant(variant)
    tag = kind.tag
    if tag is Family.DEGENERATE_FROBENIUS_EULER:
        if kind.r == 1 and variant is not Variant.LADDER:
            return represent_dfe(p, kind.lambda_, kind.u, variant)
        return represent_dfe_r(p, kind.lambda_, kind.u, kind.r, variant)
    if tag is Family.DEGENERATE_EULER:
        if kind.r == 1 and variant is not Variant.LADDER:
            return represent_de(p, kind.lambda_, variant)
        return represent_de_r(p, kind.lambda_, kind.r, variant)
    if tag is Family.DEGENERATE_FALLING_FACTORIAL:
        e = represent_dfe_r(p, kind.lambda_, -1, 0, variant)
        return Expansion(kind, e.coeffs)
    if tag in (Family.FROBENIUS_EULER, Family.EULER):
        e = represent_classical(p, kind.u, kind.r)
        return Expansion(kind, e.coeffs)
    return basis_convert_oracle(p, kind)


def variants_for(kind: FamilyKind) -> tuple:
    if kind.tag in (Family.DEGENERATE_FROBENIUS_EULER, Family.DEGENERATE_EULER):
        variants = ORDER_R_VARIANTS if kind.r >= 1 else FIRST_ORDER_VARIANTS
        if kind.lambda_ == 0:
            variants = tuple(v for v in variants if v not in LAMBDA_DIVIDING)
        return variants
    if kind.tag is Family.DEGENERATE_FALLING_FACTORIAL:
        return FIRST_ORDER_VARIANTS if kind.lambda_ != 0 else (Variant.STIRLING,)
    return ()


def all_variants(p: Poly, kind: FamilyKind) -> dict:
    """Every admissible closed-form expansion of ``p`` in ``kind``, by variant."""
    return {v: represent(p, kind, v) for v in variants_for(kind)}


def agreement_matrix(expansions: dict) -> dict:
    keys = list(expansions)
    return {
        a.value: {b.value: expansions[a].coeffs == expansions[b].coeffs for b in keys} for a in keys
    }


def verify_expansion(p: Poly, e: Expansion) -> bool:
    """Reconstruction gives ``p`` back and the oracle yields the same coefficients."""
    return reconstruct(e) == p and basis_convert_oracle(p, e.kind).coeffs == e.coeffs
