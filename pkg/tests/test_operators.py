from fractions import Fraction as F

import pytest
from hypothesis import given

from degenfe.exact_poly import ONE, ZERO, Poly
from degenfe.families import degenerate_frobenius_euler, falling_factorial_poly, family_table
from degenfe.numbers import ParameterError
from degenfe.operators import (
    ShiftCombo,
    delta_combo,
    f_combo,
    f_op,
    forward_diff,
    functional,
    g_combo,
    g_op,
    tilde_diff,
)

from .conftest import polys, small_rationals

X = Poly.x()


def test_shift_combo_canonical():
    c = ShiftCombo([(1, 2), (3, 2), (-4, 2), (5, 0)])
    assert c.terms == ((F(5), F(0)),)
    assert ShiftCombo([(1, 1), (-1, 1)]) == ShiftCombo()


def test_forward_diff_examples():
    lam = F(3, 7)
    assert forward_diff(X, lam, 1) == Poly([lam])
    assert forward_diff(X**3, 1, 3) == Poly([6])
    p = Poly([1, 2, 3])
    assert forward_diff(p, 5, 0) is p


def test_tilde_diff_examples():
    assert tilde_diff(ONE, 1) == Poly([2])
    assert tilde_diff(X, 1) == Poly([1, 2])
    p = Poly([F(1, 3), 0, 4])
    assert tilde_diff(p, 0) is p


def test_f_op_examples():
    lam = F(1, 2)
    for n in range(1, 8):
        assert f_op(falling_factorial_poly(n, lam), lam, 1) == falling_factorial_poly(n - 1, lam).scale(n)
    assert f_op(X**2, 0, 1) == Poly([0, 2])
    assert f_op(X**2, 1, 1) == Poly([1, 2])


def test_g_op_examples():
    p = Poly([3, F(1, 2), 9])
    assert g_op(p, 5, 0) is p
    for u in (F(2), F(1, 2), F(-3)):
        for r in range(5):
            assert g_op(ONE, u, r) == ONE
    with pytest.raises(ParameterError, match="u must not equal 1"):
        g_op(p, 1, 0)
    with pytest.raises(ParameterError):
        g_combo(1, 2)


@pytest.mark.parametrize("u", [F(2), F(1, 2), F(-3)])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_g_collapse(u, r):
    lam = F(1, 3)
    h = family_table(degenerate_frobenius_euler(lam, u, r), 10)
    for n in range(11):
        assert g_op(h[n], u, r) == falling_factorial_poly(n, lam)


def test_functional_examples():
    p = Poly([F(1, 2), -3, 0, 7])
    for y in (F(0), F(2), F(-5, 3)):
        assert functional(ShiftCombo.shift(y), p) == p.evaluate(y)
        assert functional(ShiftCombo.shift(y) - ShiftCombo.identity(), p) == p.evaluate(y) - p.evaluate(0)
    assert functional(ShiftCombo(), p) == 0


def test_f_combo_rejects_zero_lambda():
    with pytest.raises(ValueError):
        f_combo(0)


@given(polys(), small_rationals)
def test_commutation(p, a):
    assert forward_diff(tilde_diff(p, 1), a, 1) == tilde_diff(forward_diff(p, a, 1), 1)


@given(polys(), small_rationals)
def test_iteration_law(p, a):
    for k in range(1, 5):
        assert forward_diff(p, a, k) == forward_diff(forward_diff(p, a, 1), a, k - 1)


@given(polys())
def test_f_op_difference_is_lambda_multiple(p):
    # (p(x+l) - p(x))/l - p'(x) = sum_{m>=2} l^{m-1} p^(m)(x)/m!, so every
    # term carries a factor of lambda and the lambda = 0 branch is its limit
    lam = F(1, 7)
    expected = ZERO
    fact = 1
    for m in range(2, max(p.degree, 0) + 1 if not p.is_zero() else 2):
        fact *= m
        expected = expected + p.derivative(m).scale(lam ** (m - 1) / fact)
    assert f_op(p, lam, 1) - p.derivative(1) == expected
    assert f_op(p, 0, 1) == p.derivative(1)


@given(polys(), small_rationals)
def test_functional_coherence(p, a):
    c = delta_combo(a, 2) * ShiftCombo.shift(1) + ShiftCombo.identity().scale(F(1, 3))
    assert functional(c, p) == c.apply(p).evaluate(0)


@given(polys(), small_rationals, small_rationals)
def test_combo_composition(p, a, b):
    c1, c2 = delta_combo(a, 2), ShiftCombo.shift(b)
    assert (c1 * c2).apply(p) == c1.apply(c2.apply(p))
    assert (c1**3).apply(p) == c1.apply(c1.apply(c1.apply(p)))
