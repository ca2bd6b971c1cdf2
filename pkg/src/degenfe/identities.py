"""Exact checks of Bernoulli/Euler/Frobenius-Euler product identities and
their re-expansions in degenerate bases.

Every check is a polynomial equality: both sides are built as ``Poly`` and
subtracted.  Re-expansions follow one pattern.  A classical identity
writes the left side as ``sum_m c_m s_m(x)`` with ``s_m`` an Euler or
Frobenius-Euler polynomial.  Since ``s_m = sum_k Delta^k 0^m / (k! lambda^k)
* t_k`` for the matching degenerate family ``t_k``, the degenerate
coefficients are ``a_k = sum_m c_m Delta^k 0^m / (k! lambda^k)``.  The check
rebuilds ``sum_k a_k t_k`` and compares it with the left side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact_poly import ZERO, Poly, RationalLike, as_rational
from .families import (
    FamilyKind,
    bernoulli,
    degenerate_euler,
    degenerate_frobenius_euler,
    euler,
    family_poly,
    frobenius_euler,
)
from .numbers import (
    ParameterError,
    bernoulli_number,
    check_u,
    delta_zero,
    euler_number,
    frobenius_euler_number,
    harmonic,
)
from .representation import Expansion, Variant, reconstruct, represent, represent_dfe, represent_dfe_r

SEC5_NAMES = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: dict
    lhs: Poly
    rhs: Poly
    holds: bool = field(init=False)
    discrepancy: Poly = field(init=False)

    def __post_init__(self):
        d = self.lhs - self.rhs
        object.__setattr__(self, "discrepancy", d)
        object.__setattr__(self, "holds", d.is_zero())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.params.items()},
            "holds": self.holds,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "discrepancy": self.discrepancy.to_json(),
        }


def _B(n: int) -> Poly:
    return family_poly(bernoulli(), n)


def _E(n: int) -> Poly:
    return family_poly(euler(1), n)


def _H(n: int, u: Fraction) -> Poly:
    return family_poly(frobenius_euler(u, 1), n)


def _combine(coeffs: dict, basis) -> Poly:
    out = ZERO
    for m, c in sorted(coeffs.items()):
        if c:
            out = out + basis(m).scale(c)
    return out


def degenerate_coefficients(coeffs: dict, lambda_: Fraction, top: int) -> list[Fraction]:
    """``a_k = sum_m c_m Delta^k 0^m / (k! lambda^k)`` for k = 0..top."""
    lam = as_rational(lambda_)
    if lam == 0:
        raise ParameterError("lambda must be nonzero for a degenerate re-expansion")
    out = []
    for k in range(top + 1):
        s = sum((c * delta_zero(m, k, lam) for m, c in coeffs.items()), Fraction(0))
        out.append(s / (math.factorial(k) * lam**k))
    return out


def _reexpansion_report(name, params, lhs, coeffs, lam, kind: FamilyKind, top: int) -> IdentityReport:
    a = degenerate_coefficients(coeffs, lam, top)
    return IdentityReport(name, params, lhs, reconstruct(Expansion(kind, a)))


# -- Miki / FPZ variant -----------------------------------------------------------

def _miki_sides(n: int) -> tuple[Poly, Poly]:
    if n < 2:
        raise ParameterError("the Miki-variant identity needs n >= 2")
    lhs = ZERO
    for k in range(1, n):
        lhs = lhs + (_B(2 * k) * _B(2 * n - 2 * k)).scale(Fraction(1, 2 * k * (2 * n - 2 * k)))
    lhs = lhs + (_B(1) * _B(2 * n - 1)).scale(Fraction(2, 2 * n - 1))
    rhs = ZERO
    for k in range(1, n + 1):
        c = Fraction(math.comb(2 * n, 2 * k), 2 * k * n) * bernoulli_number(2 * k)
        rhs = rhs + _B(2 * n - 2 * k).scale(c)
    rhs = rhs + _B(2 * n).scale(harmonic(2 * n - 1) / n)
    rhs = rhs + _B(1).scale(Fraction(2, 2 * n - 1) * bernoulli_number(2 * n - 1))
    return lhs, rhs


def check_miki_variant(n: int) -> IdentityReport:
    """The quadratic Bernoulli identity with even-index products, as a
    polynomial identity in ``x``.

    Only the odd products ``B_1(x) B_{2n-1}(x)`` are kept on the left, so
    the polynomial identity closes for ``n = 2`` alone; for ``n >= 3`` the
    report carries the nonzero discrepancy.  See :func:`check_miki_at` and
    :func:`check_miki_full`.
    """
    lhs, rhs = _miki_sides(n)
    return IdentityReport("miki", {"n": n}, lhs, rhs)


def check_miki_at(n: int, x0: RationalLike) -> IdentityReport:
    """The same identity evaluated at ``x = x0`` (Miki: 0, FPZ: 1/2)."""
    x0 = as_rational(x0)
    lhs, rhs = _miki_sides(n)
    return IdentityReport("miki@x", {"n": n, "x": x0}, Poly([lhs(x0)]), Poly([rhs(x0)]))


def check_miki_full(n: int) -> IdentityReport:
    """Polynomial form keeping every product ``B_k(x) B_{2n-k}(x)``:

    ``sum_{k=1}^{2n-1} B_k(x) B_{2n-k}(x) / (k (2n-k))
      = (1/n) sum_{k=1}^{n} C(2n,2k) B_{2k} B_{2n-2k}(x) / (2k) + H_{2n-1} B_{2n}(x) / n``
    """
    if n < 2:
        raise ParameterError("the Miki-variant identity needs n >= 2")
    m = 2 * n
    lhs = ZERO
    for k in range(1, m):
        lhs = lhs + (_B(k) * _B(m - k)).scale(Fraction(1, k * (m - k)))
    rhs = ZERO
    for k in range(1, n + 1):
        rhs = rhs + _B(m - 2 * k).scale(Fraction(math.comb(m, 2 * k), 2 * k * n) * bernoulli_number(2 * k))
    rhs = rhs + _B(m).scale(harmonic(m - 1) / n)
    return IdentityReport("miki-full", {"n": n}, lhs, rhs)


# -- worked examples ----------------------------------------------------------------

def _sec5a(n: int, lam: Fraction, u: Fraction) -> list[IdentityReport]:
    check_u(u)
    params = {"n": n, "lambda": lam, "u": u}
    lhs = _H(n, u)
    kind = degenerate_frobenius_euler(lam, u, 1)
    shown = degenerate_coefficients({n: Fraction(1)}, lam, n)
    via_theorem = represent_dfe(lhs, lam, u, Variant.BINOMIAL)
    return [
        IdentityReport("5a.coefficients", params, Poly(via_theorem.coeffs), Poly(shown)),
        IdentityReport("5a.degenerate", params, lhs, reconstruct(Expansion(kind, shown))),
    ]


def _need_n2(n: int) -> None:
    if n < 2:
        raise ParameterError("n must be >= 2")


def _sec5b_coeffs(n: int) -> dict:
    Bn, H = bernoulli_number, harmonic
    c: dict[int, Fraction] = {}
    for k in range(n - 1):
        inner = sum(
            (Bn(l - k) * Bn(n - l) / ((l - k) * (n - l)) for l in range(k + 1, n)),
            Fraction(0),
        )
        c[k] = (
            Fraction(2 * math.comb(n, k), n) * (H(n - 1) - H(n - k - 1)) * Bn(n - k)
            + math.comb(n - 1, k) * inner
            + Fraction(math.comb(n - 1, k), n - 1 - k) * Bn(n - 1 - k)
        )
    c[n - 2] = c.get(n - 2, Fraction(0)) + Fraction(n - 1, 2)
    c[n] = c.get(n, Fraction(0)) + Fraction(2, n) * H(n - 1)
    return c


def _sec5b(n: int, lam: Fraction) -> list[IdentityReport]:
    _need_n2(n)
    params = {"n": n, "lambda": lam}
    lhs = ZERO
    for k in range(1, n):
        lhs = lhs + (_B(k) * _B(n - k)).scale(Fraction(1, k * (n - k)))
    c = _sec5b_coeffs(n)
    return [
        IdentityReport("5b.classical", params, lhs, _combine(c, _E)),
        _reexpansion_report("5b.degenerate", params, lhs, c, lam, degenerate_euler(lam, 1), n),
    ]


def _sec5c(n: int, lam: Fraction) -> list[IdentityReport]:
    _need_n2(n)
    params = {"n": n, "lambda": lam}
    En = euler_number
    lhs = ZERO
    for k in range(1, n):
        lhs = lhs + (_E(k) * _E(n - k)).scale(Fraction(1, k * (n - k)))
    c: dict[int, Fraction] = {}
    for k in range(n - 1):
        c[k] = sum(
            (Fraction(math.comb(n - 1, k), (l - k) * (n - l)) * En(l - k) * En(n - l) for l in range(k + 1, n)),
            Fraction(0),
        )
    c[n] = Fraction(2, n) * harmonic(n - 1)
    return [
        IdentityReport("5c.classical", params, lhs, _combine(c, _E)),
        _reexpansion_report("5c.degenerate", params, lhs, c, lam, degenerate_euler(lam, 1), n),
    ]


def _sec5d(n: int, lam: Fraction) -> list[IdentityReport]:
    _need_n2(n)
    params = {"n": n, "lambda": lam}
    Bn, En, H = bernoulli_number, euler_number, harmonic
    lhs = ZERO
    for k in range(1, n):
        lhs = lhs + (_B(k) * _E(n - k)).scale(Fraction(1, k * (n - k)))
    c: dict[int, Fraction] = {}
    for k in range(n - 1):
        c[k] = Fraction(math.comb(n, k), n) * (H(n - 1) - H(n - k - 1)) * Bn(n - k) - Fraction(
            math.comb(n - 1, k), 2 * (n - k - 1)
        ) * En(n - k - 1)
    c[n] = Fraction(2, n) * H(n - 1)
    return [
        IdentityReport("5d.classical", params, lhs, _combine(c, _E)),
        _reexpansion_report("5d.degenerate", params, lhs, c, lam, degenerate_euler(lam, 1), n),
    ]


def nielsen_coefficients(m: int, n: int, u: Fraction) -> dict:
    """``B_m(x) H_n(x|u) = sum_j c_j H_j(x|u)``, as ``{j: c_j}``."""
    check_u(u)
    c: dict[int, Fraction] = {}

    def add(j, v):
        c[j] = c.get(j, Fraction(0)) + v

    if m > 0:
        add(m + n - 1, Fraction(m))
    for i in range(m + 1):
        add(m + n - i, math.comb(m, i) * bernoulli_number(i))
    if m > 0:
        w = m * u / (1 - u)
        for s in range(n + 1):
            add(m + n - s - 1, w * math.comb(n, s) * frobenius_euler_number(s, u, 1))
    return c


@lru_cache(maxsize=None)
def _delta_at(m: int, k: int, lam: Fraction, x0: int) -> Fraction:
    """k-th lambda-difference of x**m evaluated at x0."""
    row = [math.comb(k, i) for i in range(k + 1)]
    return sum(
        ((row[i] if (k - i) % 2 == 0 else -row[i]) * (x0 + i * lam) ** m for i in range(k + 1)),
        Fraction(0),
    )


def sec5e_ladder_coefficients(
    m: int, n: int, lam: Fraction, u: Fraction, r: int, *, as_printed: bool = False
) -> list[Fraction]:
    """Order-``r`` coefficients of ``B_m(x) H_n(x|u)`` by the ladder route.

    The ladder applies ``Delta^k`` to ``sum_i c_i x**i`` shifted by ``j``,
    so each braces term is ``Delta^k x^i`` at ``x = j``.  With
    ``as_printed=True`` it is taken at ``x = 0`` for every ``j`` instead,
    which matches only for ``r = 1``.
    """
    if r < 1:
        raise ParameterError("the ladder route requires r >= 1")
    c = nielsen_coefficients(m, n, u)
    top = m + n
    out = []
    for k in range(top + 1):
        s = Fraction(0)
        for j in range(r):
            w = math.comb(r - 1, j) * (-u) ** (r - 1 - j)
            x0 = 0 if as_printed else j
            s += w * sum((ci * _delta_at(i, k, lam, x0) for i, ci in c.items()), Fraction(0))
        out.append(s / ((1 - u) ** (r - 1) * math.factorial(k) * lam**k))
    return out


def sec5e_double_sum_coefficients(m: int, n: int, lam: Fraction, u: Fraction, r: int) -> list[Fraction]:
    """Order-``r`` coefficients from point values ``B_m(j + l lambda) H_n(j + l lambda|u)``."""
    Bm, Hn = _B(m), _H(n, u)
    out = []
    for k in range(m + n + 1):
        s = Fraction(0)
        for j in range(r + 1):
            for l in range(k + 1):
                pt = j + l * lam
                sign = 1 if (k - l) % 2 == 0 else -1
                s += math.comb(r, j) * math.comb(k, l) * (-u) ** (r - j) * sign * Bm(pt) * Hn(pt)
        out.append(s / ((1 - u) ** r * math.factorial(k) * lam**k))
    return out


def _sec5e(m: int, n: int, lam: Fraction, u: Fraction, r: int) -> list[IdentityReport]:
    check_u(u)
    if m < 0 or n < 0:
        raise ParameterError("m and n must be nonnegative")
    params = {"m": m, "n": n, "lambda": lam, "u": u, "r": r}
    lhs = _B(m) * _H(n, u)
    c = nielsen_coefficients(m, n, u)
    reports = [
        IdentityReport("5e.classical", params, lhs, _combine(c, lambda j: _H(j, u))),
        _reexpansion_report(
            "5e.degenerate", params, lhs, c, lam, degenerate_frobenius_euler(lam, u, 1), m + n
        ),
    ]
    if r >= 1:
        kind = degenerate_frobenius_euler(lam, u, r)
        double = sec5e_double_sum_coefficients(m, n, lam, u, r)
        ladder = sec5e_ladder_coefficients(m, n, lam, u, r)
        reports.append(IdentityReport("5e.order_r.double_sum", params, lhs, reconstruct(Expansion(kind, double))))
        reports.append(IdentityReport("5e.order_r.ladder", params, lhs, reconstruct(Expansion(kind, ladder))))
    return reports


def _check_uv(u: Fraction, v: Fraction) -> None:
    if u == 1:
        raise ParameterError("u must not equal 1")
    if v == 1:
        raise ParameterError("v must not equal 1")
    if u * v == 1:
        raise ParameterError("uv must not equal 1")


def carlitz_coefficients(m: int, n: int, u: Fraction, v: Fraction) -> dict:
    """``H_m(x|u) H_n(x|v) = sum_j c_j H_j(x|uv)``, as ``{j: c_j}``."""
    _check_uv(u, v)
    c = {m + n: Fraction(1)}
    wu = u * (1 - v) / (1 - u * v)
    wv = v * (1 - u) / (1 - u * v)
    for i in range(1, m + 1):
        c[m + n - i] = c.get(m + n - i, Fraction(0)) + wu * math.comb(m, i) * frobenius_euler_number(i, u, 1)
    for s in range(1, n + 1):
        c[m + n - s] = c.get(m + n - s, Fraction(0)) + wv * math.comb(n, s) * frobenius_euler_number(s, v, 1)
    return c


def _sec5f(m: int, n: int, lam: Fraction, u: Fraction, v: Fraction) -> list[IdentityReport]:
    _check_uv(u, v)
    params = {"m": m, "n": n, "lambda": lam, "u": u, "v": v}
    uv = u * v
    lhs = _H(m, u) * _H(n, v)
    c = carlitz_coefficients(m, n, u, v)
    return [
        IdentityReport("5f.classical", params, lhs, _combine(c, lambda j: _H(j, uv))),
        _reexpansion_report(
            "5f.degenerate", params, lhs, c, lam, degenerate_frobenius_euler(lam, uv, 1), m + n
        ),
    ]


def check_sec5(
    name: str,
    *,
    n: int = 4,
    m: int = 2,
    lambda_: RationalLike = 1,
    u: RationalLike = 2,
    v: RationalLike = 3,
    r: int = 2,
) -> list[IdentityReport]:
    """Run one worked example; returns its classical and degenerate reports."""
    lam, u, v = as_rational(lambda_), as_rational(u), as_rational(v)
    if lam == 0:
        raise ParameterError("lambda must be nonzero")
    name = name.lower().removeprefix("5")
    if name == "a":
        return _sec5a(n, lam, u)
    if name == "b":
        return _sec5b(n, lam)
    if name == "c":
        return _sec5c(n, lam)
    if name == "d":
        return _sec5d(n, lam)
    if name == "e":
        return _sec5e(m, n, lam, u, r)
    if name == "f":
        return _sec5f(m, n, lam, u, v)
    raise ValueError(f"unknown example {name!r}; expected one of {SEC5_NAMES}")


def expand_product_in_basis(p: Poly, q: Poly, kind: FamilyKind) -> Expansion:
    """Expand ``p * q`` in ``kind``.

    For degenerate Frobenius-Euler bases of order ``r >= 1`` the double-sum
    and ladder formulas are both evaluated and must agree.
    """
    prod = p * q
    if kind.tag.value == "degen-fe" and kind.r >= 1 and kind.lambda_ != 0:
        a = represent_dfe_r(prod, kind.lambda_, kind.u, kind.r, Variant.BINOMIAL)
        b = represent_dfe_r(prod, kind.lambda_, kind.u, kind.r, Variant.LADDER)
        if a.coeffs != b.coeffs:
            raise AssertionError("double-sum and ladder expansions disagree")
        return a
    return represent(prod, kind)
