"""Exact rational scalars, dense polynomials and truncated EGF series.

``Rational`` is :class:`fractions.Fraction`.  ``Poly`` stores ascending
coefficients, canonicalized (trailing zeros trimmed) at construction.
``PolySeries`` stores ``Poly`` coefficients of ``t**k / k!``.

The coefficient loops go through an integer kernel module: the compiled
``_kernels`` extension when it is importable, otherwise ``_kernels_py``.
Set ``DEGENFE_PURE=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

if os.environ.get("DEGENFE_PURE"):
    from . import _kernels_py as _k
else:
    try:
        from . import _kernels as _k
    except ImportError:
        from . import _kernels_py as _k

BACKEND: str = _k.BACKEND

Rational = Fraction
RationalLike = Union[Fraction, int, str]

#: degree of the zero polynomial
NEG_INF = float("-inf")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    return str(q)


@lru_cache(maxsize=None)
def binomial_rows(n: int) -> tuple:
    """Pascal rows 0..n as a tuple of lists."""
    rows = [[1]]
    for m in range(1, n + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(m - 1)] + [1])
    return tuple(rows)


def _to_ints(coeffs: Sequence[Fraction]) -> tuple[list, int]:
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class Poly:
    """Immutable dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs", "_ints")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def _int_form(self) -> tuple[list, int]:
        # cached (numerators, common denominator); the value never changes
        try:
            return self._ints
        except AttributeError:
            ints = _to_ints(self.coeffs)
            object.__setattr__(self, "_ints", ints)
            return ints

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        # coeffs must already be Fractions
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        return p

    @classmethod
    def _from_ints(cls, nums: list, den: int) -> "Poly":
        return cls._raw([Fraction(c, den) for c in nums])

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> "Poly":
        return cls([0] * n + [c])

    # -- structure ---------------------------------------------------------
    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                term = mono
            elif mono:
                term = f"{abs(c)}*{mono}"
            else:
                term = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    # -- ring arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly([other])
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly([other])
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return ZERO
            a, da = self._int_form()
            b, db = other._int_form()
            return Poly._from_ints(_k.int_poly_mul(a, b), da * db)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "Poly":
        c = as_rational(c)
        if c == 0:
            return ZERO
        return Poly._raw([c * a for a in self.coeffs])

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(1 / as_rational(c))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- calculus ----------------------------------------------------------
    def shift(self, a: RationalLike) -> "Poly":
        """Return ``p(x + a)``."""
        a = as_rational(a)
        if a == 0 or len(self.coeffs) < 2:
            return self
        return shift_sum(self, [(Fraction(1), a)])

    def derivative(self, l: int = 1) -> "Poly":
        """The ``l``-fold derivative."""
        if l < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        if l == 0:
            return self
        if l >= len(cs):
            return ZERO
        return Poly._raw([cs[i] * math.perm(i, l) for i in range(l, len(cs))])

    def __call__(self, x0: RationalLike) -> Fraction:
        return self.evaluate(x0)

    def evaluate(self, x0: RationalLike) -> Fraction:
        """Exact evaluation at ``x0``."""
        x0 = as_rational(x0)
        cs = self.coeffs
        if not cs:
            return Fraction(0)
        if x0 == 0:
            return cs[0]
        nums, den = self._int_form()
        n = len(cs) - 1
        return Fraction(_k.int_horner(nums, x0.numerator, x0.denominator), den * x0.denominator**n)

    # -- serialization -----------------------------------------------------
    def to_json(self) -> list:
        """JSON array of ``"p/q"`` strings, index = power; zero is ``["0"]``."""
        return [format_rational(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, items: Iterable[RationalLike]) -> "Poly":
        return cls(as_rational(c) for c in items)

    def to_latex(self, var: str = "x") -> str:
        """Descending powers, rationals rendered as ``\\frac{p}{q}``."""
        if not self.coeffs:
            return "0"
        out = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{{{i}}}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            else:
                body = latex_rational(mag) + mono
            sign = "-" if c < 0 else "+"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


def latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


ZERO = Poly()
ONE = Poly([1])


def shift_sum(p: Poly, terms: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """``sum_i w_i p(x + a_i)`` for ``(w_i, a_i)`` in ``terms``.

    With ``a_i = s_i / d`` over a common ``d``, ``d**n p((z + s_i)/d)`` is an
    integer Taylor shift, so the whole sum stays in integers until the end.
    """
    if not p.coeffs or not terms:
        return ZERO
    nums, den = p._int_form()
    n = len(nums) - 1
    d = math.lcm(*(a.denominator for _, a in terms))
    e = math.lcm(*(w.denominator for w, _ in terms))
    if d != 1:
        nums = [c * d ** (n - i) for i, c in enumerate(nums)]
    acc = [0] * (n + 1)
    for w, a in terms:
        cw = w.numerator * (e // w.denominator)
        if cw == 0:
            continue
        q = _k.int_taylor_shift(nums, a.numerator * (d // a.denominator))
        for j in range(n + 1):
            acc[j] += cw * q[j]
    base = den * e
    return Poly._raw([Fraction(acc[j], base * d ** (n - j)) for j in range(n + 1)])


def eval_sum(p: Poly, terms: Sequence[tuple[Fraction, Fraction]]) -> Fraction:
    """``sum_i w_i p(a_i)`` with one final division."""
    if not p.coeffs or not terms:
        return Fraction(0)
    nums, den = p._int_form()
    n = len(nums) - 1
    d = math.lcm(*(a.denominator for _, a in terms))
    e = math.lcm(*(w.denominator for w, _ in terms))
    total = 0
    for w, a in terms:
        cw = w.numerator * (e // w.denominator)
        if cw:
            total += cw * _k.int_horner(nums, a.numerator * (d // a.denominator), d)
    return Fraction(total, den * e * d**n)


def poly_arith(p: Poly, q: Poly | None, op: str, c: RationalLike | None = None) -> Poly:
    """Functional front end: ``op`` is one of add, sub, mul, scale."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(c)
    raise ValueError(f"unknown op {op!r}")


def shift(p: Poly, a: RationalLike) -> Poly:
    return p.shift(a)


def derivative(p: Poly, l: int = 1) -> Poly:
    return p.derivative(l)


def evaluate(p: Poly, x0: RationalLike) -> Fraction:
    return p.evaluate(x0)


class SeriesError(ValueError):
    pass


class PolySeries:
    """Truncated power series in ``t`` with ``Poly`` coefficients.

    ``terms[k]`` is the coefficient of ``t**k / k!``; length is ``order + 1``.
    """

    __slots__ = ("order", "terms")

    def __init__(self, terms: Iterable, order: int | None = None):
        ts = [t if isinstance(t, Poly) else Poly([t]) for t in terms]
        if order is None:
            order = len(ts) - 1
        if order < 0:
            raise SeriesError("order must be nonnegative")
        ts = ts[: order + 1] + [ZERO] * (order + 1 - len(ts))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", tuple(ts))

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    @classmethod
    def unit(cls, order: int) -> "PolySeries":
        return cls([ONE], order)

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, self.terms))

    def __repr__(self):
        return f"PolySeries(order={self.order}, terms={list(self.terms)!r})"

    def scale(self, c: RationalLike) -> "PolySeries":
        return PolySeries([t.scale(c) for t in self.terms], self.order)

    def __add__(self, other: "PolySeries") -> "PolySeries":
        _check_orders(self, other)
        return PolySeries([a + b for a, b in zip(self.terms, other.terms)], self.order)

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        return series_mul(self, other)

    def is_scalar(self) -> bool:
        return all(t.degree <= 0 for t in self.terms)


def _check_orders(a: PolySeries, b: PolySeries) -> None:
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} != {b.order}")


def series_mul(a: PolySeries, b: PolySeries) -> PolySeries:
    """EGF Cauchy product: ``out[n] = sum_k C(n,k) a[k] b[n-k]``."""
    _check_orders(a, b)
    n = a.order
    rows = binomial_rows(n)
    if a.is_scalar() and b.is_scalar():
        # both sides constant: one integer convolution over a common denominator
        av, da = _to_ints([t.coeff(0) for t in a.terms])
        bv, db = _to_ints([t.coeff(0) for t in b.terms])
        out = _k.int_binomial_convolve(av, bv, list(rows))
        return PolySeries([Poly._raw([Fraction(c, da * db)]) for c in out], n)
    terms = []
    for m in range(n + 1):
        row = rows[m]
        acc = ZERO
        for k in range(m + 1):
            if a.terms[k].coeffs and b.terms[m - k].coeffs:
                acc = acc + (a.terms[k] * b.terms[m - k]).scale(row[k])
        terms.append(acc)
    return PolySeries(terms, n)


def series_inverse(a: PolySeries) -> PolySeries:
    """Multiplicative inverse up to ``a.order`` by triangular recursion."""
    a0 = a.terms[0]
    if a0.degree != 0:
        raise SeriesError("series is not invertible: constant term must be a nonzero constant")
    inv0 = 1 / a0.coeffs[0]
    rows = binomial_rows(a.order)
    out = [Poly._raw([inv0])]
    for m in range(1, a.order + 1):
        row = rows[m]
        acc = ZERO
        for k in range(1, m + 1):
            if a.terms[k].coeffs:
                acc = acc + (a.terms[k] * out[m - k]).scale(row[k])
        out.append(acc.scale(-inv0))
    return PolySeries(out, a.order)


def series_pow(a: PolySeries, r: int) -> PolySeries:
    if r < 0:
        raise SeriesError("negative power")
    out = PolySeries.unit(a.order)
    for _ in range(r):
        out = series_mul(out, a)
    return out
