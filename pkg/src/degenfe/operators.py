"""Difference operators and umbral functionals as finite shift combinations.

Every operator used here is a polynomial in shift operators ``e^{yt}``:
``(e^{lambda t} - 1)^k`` expands to ``sum_i C(k,i) (-1)^{k-i} e^{i lambda t}``,
``g(t)^r = ((e^t - u)/(1 - u))^r`` to ``(1-u)^{-r} sum_j C(r,j) (-u)^{r-j} e^{jt}``,
and so on.  On polynomials ``e^{yt} p(x) = p(x + y)``, so no infinite series
is ever applied: an operator is a finite table ``{offset: weight}``, applying
it is a weighted sum of shifts, and pairing it with ``p`` as a functional is
``sum weight * p(offset)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .exact_poly import Poly, RationalLike, as_rational, binomial_rows, eval_sum, shift_sum
from .numbers import check_u


class ShiftCombo:
    """Immutable finite combination ``sum_i w_i e^{a_i t}``.

    Offsets are merged on construction and zero weights dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[RationalLike, RationalLike]] | Mapping = ()):
        if isinstance(terms, Mapping):
            terms = [(w, a) for a, w in terms.items()]
        merged: dict[Fraction, Fraction] = {}
        for w, a in terms:
            a = as_rational(a)
            merged[a] = merged.get(a, Fraction(0)) + as_rational(w)
        self._terms = tuple(sorted((a, w) for a, w in merged.items() if w != 0))

    @property
    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """``(weight, offset)`` pairs sorted by offset."""
        return tuple((w, a) for a, w in self._terms)

    @classmethod
    def identity(cls) -> "ShiftCombo":
        return cls([(1, 0)])

    @classmethod
    def shift(cls, y: RationalLike) -> "ShiftCombo":
        return cls([(1, y)])

    def __eq__(self, other):
        if not isinstance(other, ShiftCombo):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"ShiftCombo({list(self.terms)!r})"

    def __add__(self, other: "ShiftCombo") -> "ShiftCombo":
        return ShiftCombo(self.terms + other.terms)

    def __sub__(self, other: "ShiftCombo") -> "ShiftCombo":
        return self + other.scale(-1)

    def scale(self, c: RationalLike) -> "ShiftCombo":
        c = as_rational(c)
        return ShiftCombo([(c * w, a) for w, a in self.terms])

    def __mul__(self, other):
        # composition; shifts commute
        if isinstance(other, ShiftCombo):
            return ShiftCombo(
                [(w1 * w2, a1 + a2) for w1, a1 in self.terms for w2, a2 in other.terms]
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ShiftCombo":
        if k < 0:
            raise ValueError("negative power")
        out, base = ShiftCombo.identity(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply(self, p: Poly) -> Poly:
        return shift_sum(p, self.terms)

    def pair(self, p: Poly) -> Fraction:
        """``<combo | p>`` = ``sum_i w_i p(a_i)``."""
        return eval_sum(p, self.terms)


def delta_combo(a: RationalLike, k: int = 1) -> ShiftCombo:
    """``(e^{at} - 1)^k``, i.e. the k-th forward difference with step ``a``."""
    a = as_rational(a)
    row = binomial_rows(k)[k]
    return ShiftCombo([(row[i] if (k - i) % 2 == 0 else -row[i], i * a) for i in range(k + 1)])


def tilde_combo(k: int = 1) -> ShiftCombo:
    """``(e^t + 1)^k``."""
    row = binomial_rows(k)[k]
    return ShiftCombo([(row[i], i) for i in range(k + 1)])


def g_combo(u: RationalLike, r: int = 1) -> ShiftCombo:
    """``((e^t - u) / (1 - u))^r``."""
    u = as_rational(u)
    check_u(u)
    row = binomial_rows(r)[r]
    scale = 1 / (1 - u) ** r
    return ShiftCombo([(scale * row[j] * (-u) ** (r - j), j) for j in range(r + 1)])


def f_combo(lambda_: RationalLike, k: int = 1) -> ShiftCombo:
    """``((e^{lambda t} - 1) / lambda)^k``; requires nonzero lambda."""
    lam = as_rational(lambda_)
    if lam == 0:
        raise ValueError("f_combo needs lambda != 0; use f_op for the lambda = 0 limit")
    return delta_combo(lam, k).scale(1 / lam**k)


def forward_diff(p: Poly, a: RationalLike, k: int = 1) -> Poly:
    if k == 0:
        return p
    return delta_combo(a, k).apply(p)


def tilde_diff(p: Poly, k: int = 1) -> Poly:
    if k == 0:
        return p
    return tilde_combo(k).apply(p)


def f_op(p: Poly, lambda_: RationalLike, k: int = 1) -> Poly:
    """Apply ``f(t)^k``; at lambda = 0 this is the k-th derivative."""
    lam = as_rational(lambda_)
    if lam == 0:
        return p.derivative(k)
    return forward_diff(p, lam, k).scale(1 / lam**k)


def g_op(p: Poly, u: RationalLike, r: int = 1) -> Poly:
    check_u(as_rational(u))
    if r == 0:
        return p
    return g_combo(u, r).apply(p)


def functional(c: ShiftCombo, p: Poly) -> Fraction:
    """``<c | p>``: apply ``c`` to ``p`` and evaluate at 0."""
    return c.pair(p)
