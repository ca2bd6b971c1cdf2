"""Polynomial families by binomial convolution, plus a generating-function oracle.

``family_poly`` builds members as ``sum_j C(n,j) c_{n-j} q_j(x)`` where
``c`` is the number sequence and ``q_j`` is ``x**j`` (classical kinds) or the
degenerate falling factorial ``(x)_{j,lambda}``.  ``gf_oracle`` recomputes
the same table from truncated series arithmetic and shares nothing with it
beyond the falling-factorial definition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_poly import (
    ONE,
    Poly,
    PolySeries,
    RationalLike,
    as_rational,
    binomial_rows,
    series_inverse,
    series_mul,
    series_pow,
)
from .numbers import (
    ParameterError,
    _bernoulli_table,
    _fe_order_table,
    check_u,
    dfe_number_table,
    one_nlambda,
)

DEFAULT_N_MAX = 64


class Family(str, enum.Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    FROBENIUS_EULER = "fe"
    DEGENERATE_EULER = "degen-euler"
    DEGENERATE_FROBENIUS_EULER = "degen-fe"
    DEGENERATE_FALLING_FACTORIAL = "falling"


_USES_U = {Family.FROBENIUS_EULER, Family.DEGENERATE_FROBENIUS_EULER}
_USES_R = {
    Family.EULER,
    Family.FROBENIUS_EULER,
    Family.DEGENERATE_EULER,
    Family.DEGENERATE_FROBENIUS_EULER,
}
_USES_LAMBDA = {
    Family.DEGENERATE_EULER,
    Family.DEGENERATE_FROBENIUS_EULER,
    Family.DEGENERATE_FALLING_FACTORIAL,
}
_CLASSICAL = {
    Family.DEGENERATE_EULER: Family.EULER,
    Family.DEGENERATE_FROBENIUS_EULER: Family.FROBENIUS_EULER,
}


@dataclass(frozen=True)
class FamilyKind:
    """A family tag with its parameters.

    Parameters a family does not use are normalized (lambda 0, u -1 for the
    Euler kinds, r 1 or 0) so equal bases compare and hash equal.
    """

    tag: Family
    lambda_: Fraction = Fraction(0)
    u: Fraction = Fraction(-1)
    r: int = 1

    def __post_init__(self):
        tag = Family(self.tag)
        lam = as_rational(self.lambda_) if tag in _USES_LAMBDA else Fraction(0)
        u = as_rational(self.u) if tag in _USES_U else Fraction(-1)
        if tag in _USES_R:
            r = self.r
        elif tag is Family.DEGENERATE_FALLING_FACTORIAL:
            r = 0
        else:
            r = 1
        if not isinstance(r, int) or isinstance(r, bool) or r < 0:
            raise ParameterError("r must be a nonnegative integer")
        if tag in _USES_U:
            check_u(u)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "lambda_", lam)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "r", r)

    @property
    def params(self) -> dict:
        out = {}
        if self.tag in _USES_LAMBDA:
            out["lambda"] = str(self.lambda_)
        if self.tag in _USES_U:
            out["u"] = str(self.u)
        if self.tag in _USES_R:
            out["r"] = self.r
        return out

    def classical(self) -> "FamilyKind":
        """The lambda -> 0 counterpart (identity for classical kinds)."""
        tag = _CLASSICAL.get(self.tag, self.tag)
        if tag is Family.DEGENERATE_FALLING_FACTORIAL:
            return self
        return FamilyKind(tag, u=self.u, r=self.r)


def bernoulli() -> FamilyKind:
    return FamilyKind(Family.BERNOULLI)


def euler(r: int = 1) -> FamilyKind:
    return FamilyKind(Family.EULER, r=r)


def frobenius_euler(u: RationalLike, r: int = 1) -> FamilyKind:
    return FamilyKind(Family.FROBENIUS_EULER, u=u, r=r)


def degenerate_euler(lambda_: RationalLike, r: int = 1) -> FamilyKind:
    return FamilyKind(Family.DEGENERATE_EULER, lambda_=lambda_, r=r)


def degenerate_frobenius_euler(lambda_: RationalLike, u: RationalLike, r: int = 1) -> FamilyKind:
    return FamilyKind(Family.DEGENERATE_FROBENIUS_EULER, lambda_=lambda_, u=u, r=r)


def falling_factorial(lambda_: RationalLike) -> FamilyKind:
    return FamilyKind(Family.DEGENERATE_FALLING_FACTORIAL, lambda_=lambda_)


@lru_cache(maxsize=None)
def _falling_table(n: int, lam: Fraction) -> tuple:
    if n == 0:
        return (ONE,)
    prev = _falling_table(n - 1, lam)
    return prev + (prev[-1] * Poly([-(n - 1) * lam, 1]),)


def falling_factorial_poly(n: int, lambda_: RationalLike) -> Poly:
    """(x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _falling_table(n, as_rational(lambda_))[n]


def _numbers(kind: FamilyKind, n: int) -> tuple:
    tag = kind.tag
    if tag is Family.BERNOULLI:
        return _bernoulli_table(n)
    if tag in (Family.EULER, Family.FROBENIUS_EULER):
        return _fe_order_table(n, kind.u, kind.r)
    if tag in (Family.DEGENERATE_EULER, Family.DEGENERATE_FROBENIUS_EULER):
        return dfe_number_table(n, kind.lambda_, kind.u, kind.r)
    raise AssertionError(tag)


@lru_cache(maxsize=None)
def _member(kind: FamilyKind, n: int) -> Poly:
    if kind.tag is Family.DEGENERATE_FALLING_FACTORIAL:
        return falling_factorial_poly(n, kind.lambda_)
    c = _numbers(kind, n)
    row = binomial_rows(n)[n]
    if kind.tag in (Family.DEGENERATE_EULER, Family.DEGENERATE_FROBENIUS_EULER):
        out = Poly()
        ff = _falling_table(n, kind.lambda_)
        for j in range(n + 1):
            if c[n - j]:
                out = out + ff[j].scale(row[j] * c[n - j])
        return out
    return Poly([row[j] * c[n - j] for j in range(n + 1)])


def family_poly(kind: FamilyKind, n: int) -> Poly:
    """The ``n``-th member of the family ``kind``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _member(kind, n)


def family_table(kind: FamilyKind, n_max: int, *, cap: int = DEFAULT_N_MAX) -> list[Poly]:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > cap:
        raise ValueError(f"n_max={n_max} exceeds cap {cap}")
    return [_member(kind, n) for n in range(n_max + 1)]


# -- generating-function oracle ------------------------------------------------

def _exp_series(kind: FamilyKind, n: int) -> PolySeries:
    """e_lambda(t) (or e^t) with scalar EGF terms."""
    lam = kind.lambda_
    return PolySeries([Poly([one_nlambda(k, lam)]) for k in range(n + 1)], n)


def _exp_x_series(kind: FamilyKind, n: int) -> PolySeries:
    """e_lambda^x(t) (or e^{xt}) with EGF terms (x)_{k,lambda}."""
    lam = kind.lambda_
    terms = []
    p = ONE
    for k in range(n + 1):
        terms.append(p)
        p = p * Poly([-k * lam, 1])
    return PolySeries(terms, n)


def gf_oracle(kind: FamilyKind, n_max: int) -> list[Poly]:
    """Members 0..n_max read off a truncated generating function."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    n = n_max
    ex = _exp_x_series(kind, n)
    if kind.tag is Family.DEGENERATE_FALLING_FACTORIAL:
        return list(ex.terms)
    if kind.tag is Family.BERNOULLI:
        # (e^t - 1)/t has EGF terms 1/(k+1); take its inverse
        denom = PolySeries([Poly([Fraction(1, k + 1)]) for k in range(n + 1)], n)
        return list(series_mul(series_inverse(denom), ex).terms)
    u = kind.u
    check_u(u)
    e = _exp_series(kind, n)
    shifted = PolySeries([e.terms[0] - u] + list(e.terms[1:]), n)
    prefactor = series_inverse(shifted).scale(1 - u)
    return list(series_mul(series_pow(prefactor, kind.r), ex).terms)
