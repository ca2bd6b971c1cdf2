import random
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings

from degenfe.exact_poly import ONE, ZERO, Poly
from degenfe.families import (
    bernoulli,
    degenerate_euler,
    degenerate_frobenius_euler,
    euler,
    falling_factorial,
    family_poly,
    family_table,
    frobenius_euler,
)
from degenfe.numbers import ParameterError, delta_zero, stirling2
from degenfe.representation import (
    FIRST_ORDER_VARIANTS,
    ORDER_R_VARIANTS,
    Expansion,
    RepresentationError,
    Variant,
    agreement_matrix,
    all_variants,
    basis_convert_oracle,
    dfe_delta_form_as_printed,
    reconstruct,
    represent,
    represent_classical,
    represent_de,
    represent_de_r,
    represent_dfe,
    represent_dfe_r,
    verify_expansion,
)

from .conftest import polys, random_poly, small_rationals

X = Poly.x()
LAMBDAS = [F(1), F(1, 2), F(-1, 3), F(2)]
US = [F(-1), F(2), F(1, 2), F(-3)]


def _coeffs(e):
    return list(e.coeffs)


# -- examples ----------------------------------------------------------------

def test_constant_one():
    assert _coeffs(represent_dfe(ONE, F(1, 2), 2, Variant.OPERATOR)) == [1]
    assert _coeffs(represent_de(ONE, 1)) == [1]
    for r in range(5):
        assert _coeffs(represent_de_r(ONE, F(1, 3), r)) == [1]


@pytest.mark.parametrize("variant", FIRST_ORDER_VARIANTS)
def test_basis_self_representation(variant):
    lam, u = F(1, 2), F(-3)
    h3 = family_poly(degenerate_frobenius_euler(lam, u, 1), 3)
    assert _coeffs(represent_dfe(h3, lam, u, variant)) == [0, 0, 0, 1]


@pytest.mark.parametrize("variant", ORDER_R_VARIANTS)
def test_order_r_basis_element(variant):
    lam, u, r = F(1, 3), F(2), 3
    h2 = family_poly(degenerate_frobenius_euler(lam, u, r), 2)
    assert _coeffs(represent_dfe_r(h2, lam, u, r, variant)) == [0, 0, 1]


@pytest.mark.parametrize("u", [F(2), F(1, 2), F(-3)])
@pytest.mark.parametrize("lam", [F(1), F(1, 2), F(-1, 3)])
def test_frobenius_euler_in_degenerate_basis(lam, u):
    for n in range(7):
        hn = family_poly(frobenius_euler(u, 1), n)
        coeffs = _coeffs(represent_dfe(hn, lam, u))
        assert coeffs == [lam ** (n - k) * stirling2(n, k) for k in range(n + 1)]
        assert coeffs == [delta_zero(n, k, lam) / (factorial(k) * lam**k) for k in range(n + 1)]


def test_degenerate_euler_of_x():
    for variant in FIRST_ORDER_VARIANTS:
        assert _coeffs(represent_de(X, F(2, 5), variant)) == [F(1, 2), 1]


def test_de_matches_dfe_at_minus_one():
    rng = random.Random(7)
    for _ in range(20):
        p = random_poly(rng, 6, 20)
        for lam in LAMBDAS:
            for v in FIRST_ORDER_VARIANTS:
                assert _coeffs(represent_de(p, lam, v)) == _coeffs(represent_dfe(p, lam, -1, v))
            for r in range(5):
                for v in ORDER_R_VARIANTS if r else FIRST_ORDER_VARIANTS:
                    assert _coeffs(represent_de_r(p, lam, r, v)) == _coeffs(represent_dfe_r(p, lam, -1, r, v))


def test_x_squared_degenerate_euler_reconstructs():
    e = represent_de_r(X**2, 1, 1)
    assert reconstruct(e) == X**2


def test_order_zero_is_falling_factorial_basis():
    lam = F(1, 2)
    p = Poly([3, -1, F(2, 3), 5])
    e = represent_dfe_r(p, lam, 2, 0)
    assert _coeffs(e) == _coeffs(basis_convert_oracle(p, falling_factorial(lam)))
    assert _coeffs(represent(p, falling_factorial(lam), Variant.DELTA)) == _coeffs(e)


def test_classical_examples():
    assert _coeffs(represent_classical(X, -1, 1)) == [F(1, 2), 1]
    p = Poly([F(1, 3), 2, 0, -1])
    for u in US:
        for r in range(4):
            e = represent_classical(p, u, r)
            assert reconstruct(e) == p
            assert _coeffs(e) == _coeffs(represent_dfe_r(p, 0, u, r, Variant.STIRLING))
            if r:
                assert _coeffs(represent_classical(p, u, r, ladder=True)) == _coeffs(e)


def test_reconstruct_constant():
    assert reconstruct(Expansion(euler(), (F(7, 3),))) == Poly([F(7, 3)])


def test_zero_polynomial():
    assert _coeffs(represent_dfe(ZERO, 1, 2)) == [0]
    assert _coeffs(represent_dfe_r(ZERO, 1, 2, 3, Variant.LADDER)) == [0]
    assert _coeffs(basis_convert_oracle(ZERO, bernoulli())) == [0]
    assert reconstruct(represent_de(ZERO, 1)) == ZERO


def test_errors():
    with pytest.raises(ParameterError, match="u must not equal 1"):
        represent_dfe(X, 1, 1)
    for v in (Variant.OPERATOR, Variant.DELTA, Variant.BINOMIAL):
        with pytest.raises(RepresentationError, match="lambda must be nonzero"):
            represent_dfe(X, 0, 2, v)
    with pytest.raises(RepresentationError, match="r >= 1"):
        represent_dfe_r(X, 1, 2, 0, Variant.LADDER)
    with pytest.raises(RepresentationError):
        represent_dfe(X, 1, 2, Variant.LADDER)
    # lambda = 0 is admissible for the Stirling form
    assert reconstruct(represent_dfe(X**2, 0, 2, Variant.STIRLING)) == X**2


# -- properties ----------------------------------------------------------------

def test_variant_agreement_and_oracle():
    rng = random.Random(11)
    for _ in range(15):
        p = random_poly(rng, 8, 30)
        for lam in LAMBDAS:
            for u in US:
                kind = degenerate_frobenius_euler(lam, u, 1)
                ref = _coeffs(basis_convert_oracle(p, kind))
                for v in FIRST_ORDER_VARIANTS:
                    assert _coeffs(represent_dfe(p, lam, u, v)) == ref
                for r in (1, 2, 3):
                    kind_r = degenerate_frobenius_euler(lam, u, r)
                    ref_r = _coeffs(basis_convert_oracle(p, kind_r))
                    for v in ORDER_R_VARIANTS:
                        assert _coeffs(represent_dfe_r(p, lam, u, r, v)) == ref_r


def test_r_one_equals_first_order():
    rng = random.Random(3)
    for _ in range(10):
        p = random_poly(rng, 8, 30)
        for lam in LAMBDAS:
            for u in US:
                for v in FIRST_ORDER_VARIANTS:
                    assert _coeffs(represent_dfe_r(p, lam, u, 1, v)) == _coeffs(represent_dfe(p, lam, u, v))


@settings(max_examples=40)
@given(polys(), polys(), small_rationals)
def test_linearity(p, q, c):
    lam, u = F(1, 2), F(-3)
    n = max(p.degree, q.degree, 0)

    def coeffs(poly):
        out = _coeffs(represent_dfe_r(poly, lam, u, 2))
        return out + [F(0)] * (n + 1 - len(out))

    assert coeffs(p + q) == [a + b for a, b in zip(coeffs(p), coeffs(q))]
    assert coeffs(p.scale(c)) == [c * a for a in coeffs(p)]


@given(polys())
def test_degree_triangular(p):
    e = represent_dfe(p, 1, 2)
    assert len(e.coeffs) == (p.degree + 1 if not p.is_zero() else 1)
    if not p.is_zero():
        assert e.coeffs[-1] == p.coeff(p.degree)


@settings(max_examples=30)
@given(polys())
def test_every_kind_reconstructs(p):
    kinds = [
        bernoulli(),
        euler(2),
        frobenius_euler(F(1, 2), 3),
        degenerate_euler(F(-1, 3), 2),
        degenerate_frobenius_euler(2, -3, 4),
        falling_factorial(F(1, 2)),
    ]
    for kind in kinds:
        assert verify_expansion(p, represent(p, kind))


def test_all_variants_matrix():
    p = Poly([1, 2, 3, 4])
    kind = degenerate_frobenius_euler(F(1, 2), 2, 2)
    ex = all_variants(p, kind)
    assert set(ex) == set(ORDER_R_VARIANTS)
    m = agreement_matrix(ex)
    assert all(all(row.values()) for row in m.values())


def test_delta_form_erratum():
    p = Poly([0, 0, 1])
    lam = F(1, 2)
    for u in (F(2), F(-3), F(1, 2)):
        good = represent_dfe(p, lam, u, Variant.DELTA)
        printed = dfe_delta_form_as_printed(p, lam, u)
        assert good.coeffs == represent_dfe(p, lam, u, Variant.OPERATOR).coeffs
        assert printed.coeffs != good.coeffs
        assert reconstruct(printed) != p
    # -(1+u) = (1-u) has no solution, so the printed sign is off even at u = 0
    assert dfe_delta_form_as_printed(p, lam, 0).coeffs != represent_dfe(p, lam, 0).coeffs
