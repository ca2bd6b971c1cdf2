"""Scalar special-number sequences, computed exactly by recurrence.

Every sequence here is memoized with :func:`functools.lru_cache`, which is
internally locked, so results are safe to share between threads.  ``lambda_``
may be zero throughout: the recurrences are polynomial in it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_poly import RationalLike, as_rational, binomial_rows


class ParameterError(ValueError):
    """A parameter lies outside the domain of the requested quantity."""


def check_u(u: Fraction) -> None:
    if u == 1:
        raise ParameterError("u must not equal 1")


@dataclass(frozen=True)
class DegenParams:
    lambda_: Fraction = Fraction(0)
    u: Fraction = Fraction(-1)
    r: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lambda_", as_rational(self.lambda_))
        object.__setattr__(self, "u", as_rational(self.u))
        if not isinstance(self.r, int) or self.r < 0:
            raise ParameterError("r must be a nonnegative integer")


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """S2(n, k) by the triangular recurrence."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def harmonic(n: int) -> Fraction:
    if n < 1:
        raise ValueError("harmonic(n) requires n >= 1")
    return _harmonic(n)


@lru_cache(maxsize=None)
def _harmonic(n: int) -> Fraction:
    if n == 1:
        return Fraction(1)
    return _harmonic(n - 1) + Fraction(1, n)


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    if n == 0:
        return (Fraction(1),)
    prev = _bernoulli_table(n - 1)
    row = binomial_rows(n + 1)[n + 1]
    s = sum(row[j] * prev[j] for j in range(n))
    return prev + (Fraction(-s, n + 1),)


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bernoulli_table(n)[n]


def one_nlambda(n: int, lambda_: RationalLike) -> Fraction:
    """(1)_{n,lambda} = 1 (1 - lambda) ... (1 - (n-1) lambda)."""
    lam = as_rational(lambda_)
    out = Fraction(1)
    for i in range(n):
        out *= 1 - i * lam
    return out


def delta_zero(n: int, k: int, lambda_: RationalLike) -> Fraction:
    """k-th forward difference with step lambda of x**n, at x = 0."""
    return _delta_zero(n, k, as_rational(lambda_))


@lru_cache(maxsize=None)
def _delta_zero(n: int, k: int, lam: Fraction) -> Fraction:
    row = binomial_rows(k)[k]
    total = Fraction(0)
    for j in range(k + 1):
        term = row[j] * (j * lam) ** n  # 0**0 == 1
        total += term if (k - j) % 2 == 0 else -term
    return total


def _convolve_power(base: tuple, r: int) -> tuple:
    n = len(base) - 1
    rows = binomial_rows(n)
    out = (Fraction(1),) + (Fraction(0),) * n
    for _ in range(r):
        out = tuple(
            sum((rows[m][k] * out[k] * base[m - k] for k in range(m + 1)), Fraction(0))
            for m in range(n + 1)
        )
    return out


@lru_cache(maxsize=None)
def _fe_table(n: int, u: Fraction) -> tuple:
    # (1-u) H_m(u) = -sum_{j<m} C(m,j) H_j(u)
    if n == 0:
        return (Fraction(1),)
    prev = _fe_table(n - 1, u)
    row = binomial_rows(n)[n]
    s = sum(row[j] * prev[j] for j in range(n))
    return prev + (-s / (1 - u),)


@lru_cache(maxsize=None)
def _fe_order_table(n: int, u: Fraction, r: int) -> tuple:
    return _convolve_power(_fe_table(n, u), r)


def frobenius_euler_number(n: int, u: RationalLike, r: int = 1) -> Fraction:
    """H_n^{(r)}(u), the constant term of H_n^{(r)}(x|u)."""
    u = as_rational(u)
    check_u(u)
    if r < 0 or n < 0:
        raise ValueError("n and r must be nonnegative")
    return _fe_order_table(n, u, r)[n]


def euler_number(n: int) -> Fraction:
    return frobenius_euler_number(n, -1, 1)


@lru_cache(maxsize=None)
def _dfe_table(n: int, lam: Fraction, u: Fraction) -> tuple:
    # (1-u) h_m = -sum_{j<m} C(m,j) (1)_{m-j,lam} h_j
    if n == 0:
        return (Fraction(1),)
    prev = _dfe_table(n - 1, lam, u)
    row = binomial_rows(n)[n]
    s = sum(row[j] * one_nlambda(n - j, lam) * prev[j] for j in range(n))
    return prev + (-s / (1 - u),)


@lru_cache(maxsize=None)
def dfe_number_table(n: int, lam: Fraction, u: Fraction, r: int) -> tuple:
    """h^{(r)}_{0..n,lambda}(u) as a tuple."""
    return _convolve_power(_dfe_table(n, lam, u), r)


def degen_fe_number(n: int, params: DegenParams) -> Fraction:
    """h^{(r)}_{n,lambda}(u); order 0 gives 0**n."""
    check_u(params.u)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return dfe_number_table(n, params.lambda_, params.u, params.r)[n]


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)
