"""Tests for cyclotomic polynomials and the quasi-unipotency verdict."""

import random
from fractions import Fraction

import pytest

from plovkit import (
    RatMatrix,
    UniPoly,
    char_poly,
    compound_matrix,
    cyclotomic_poly,
    euler_phi,
    is_unipotent,
    mat_pow,
    quasi_unipotency,
    unipotent_power,
)
from plovkit.errors import NotQuasiUnipotentError
from plovkit.randgen import random_mixed_matrix


def poly_t(*coeffs):
    return UniPoly.from_coeffs(coeffs, "t")


def x_to_the_n_minus_1(n):
    return UniPoly.from_coeffs([-1] + [0] * (n - 1) + [1], "t")


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def test_cyclotomic_1():
    assert cyclotomic_poly(1) == poly_t(-1, 1)


def test_cyclotomic_6_by_division_oracle():
    # oracle: divide t^6 - 1 by Phi_1 * Phi_2 * Phi_3 built by hand
    phi1 = poly_t(-1, 1)
    phi2 = poly_t(1, 1)
    phi3 = poly_t(1, 1, 1)
    expected = x_to_the_n_minus_1(6).exact_div(phi1 * phi2 * phi3)
    assert expected == poly_t(1, -1, 1)
    assert cyclotomic_poly(6) == expected


def test_cyclotomic_8_by_division_oracle():
    phi1 = poly_t(-1, 1)
    phi2 = poly_t(1, 1)
    phi4 = poly_t(1, 0, 1)
    expected = x_to_the_n_minus_1(8).exact_div(phi1 * phi2 * phi4)
    assert expected == poly_t(1, 0, 0, 0, 1)
    assert cyclotomic_poly(8) == expected


def test_cyclotomic_degree_and_integrality():
    for n in range(1, 30):
        p = cyclotomic_poly(n)
        assert p.degree() == euler_phi(n)
        assert p.is_integral()
        assert p.leading() == 1


def test_cyclotomic_product_identity_up_to_40():
    for n in range(1, 41):
        product = UniPoly.constant(1, "t")
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic_poly(d)
        assert product == x_to_the_n_minus_1(n)


# ---------------------------------------------------------------------------
# quasi-unipotency verdicts


def test_identity_verdict():
    v = quasi_unipotency(RatMatrix.identity(2))
    assert v.is_quasi_unipotent
    assert v.order == 1
    assert v.cyclotomic_factorization == ((1, 2),)
    assert v.residual is None


def test_order_six_companion_verdict_with_power_oracle():
    a = RatMatrix.from_rows([[0, -1], [1, 1]])
    # oracle: A^6 = I and no smaller power is I
    assert mat_pow(a, 6) == RatMatrix.identity(2)
    assert all(mat_pow(a, k) != RatMatrix.identity(2) for k in range(1, 6))
    v = quasi_unipotency(a)
    assert v.is_quasi_unipotent and v.order == 6
    assert v.cyclotomic_factorization == ((6, 1),)


def test_fibonacci_companion_verdict_with_trace_oracle():
    a = RatMatrix.from_rows([[0, 1], [1, 1]])
    # oracle: traces of powers grow without bound (322 at the 12th power),
    # impossible for a matrix whose eigenvalues are roots of unity
    assert mat_pow(a, 12).trace() == 322
    v = quasi_unipotency(a)
    assert not v.is_quasi_unipotent
    assert v.residual == poly_t(-1, -1, 1)
    assert v.order is None and v.cyclotomic_factorization is None


def test_partial_cyclotomic_factor_leaves_residual():
    # char poly = Phi_1 * (t^2 - t - 1): the cyclotomic part strips away
    fib = RatMatrix.from_rows([[0, 1], [1, 1]])
    m = RatMatrix.block_diag(RatMatrix.identity(1), fib)
    v = quasi_unipotency(m)
    assert not v.is_quasi_unipotent
    assert v.residual == poly_t(-1, -1, 1)


def test_non_integer_char_poly_is_rejected_with_residual():
    m = RatMatrix.from_rows([[Fraction(1, 2), 0], [0, 2]])
    v = quasi_unipotency(m)
    assert not v.is_quasi_unipotent
    assert v.residual == char_poly(m)
    assert v.residual.degree() >= 1


def test_verdict_factorization_reconstructs_char_poly():
    rng = random.Random(31)
    seen_yes = 0
    for _ in range(20):
        m = random_mixed_matrix(rng, rng.choice([4, 5, 6]))
        v = quasi_unipotency(m)
        if not v.is_quasi_unipotent:
            assert v.residual is not None and v.residual.degree() >= 1
            continue
        seen_yes += 1
        product = UniPoly.constant(1, "t")
        for n, mult in v.cyclotomic_factorization:
            product = product * cyclotomic_poly(n) ** mult
        assert product == char_poly(m)
        total = sum(mult * euler_phi(n) for n, mult in v.cyclotomic_factorization)
        assert total == m.dimension
    assert seen_yes >= 3


def test_unipotent_power_identity():
    n, u = unipotent_power(RatMatrix.identity(3))
    assert n == 1 and u == RatMatrix.identity(3)


def test_unipotent_power_order_six():
    a = RatMatrix.from_rows([[0, -1], [1, 1]])
    n, u = unipotent_power(a)
    assert n == 6 and u == RatMatrix.identity(2)


def test_unipotent_power_negative_eigenvalue_block():
    # size-2 block at eigenvalue -1; squaring oracle gives [[1,-2],[0,1]]
    m = RatMatrix.jordan_block(-1, 2)
    squared = RatMatrix.from_rows(
        [
            [
                sum(m.entries[i][t] * m.entries[t][j] for t in range(2))
                for j in range(2)
            ]
            for i in range(2)
        ]
    )
    assert squared == RatMatrix.from_rows([[1, -2], [0, 1]])
    n, u = unipotent_power(m)
    assert n == 2 and u == squared


def test_unipotent_power_rejects_non_quasi_unipotent():
    with pytest.raises(NotQuasiUnipotentError):
        unipotent_power(RatMatrix.from_rows([[0, 1], [1, 1]]))


def test_power_is_unipotent_property():
    rng = random.Random(77)
    for _ in range(12):
        m = random_mixed_matrix(rng, rng.choice([4, 6]))
        v = quasi_unipotency(m)
        if not v.is_quasi_unipotent:
            continue
        n, u = unipotent_power(m)
        assert is_unipotent(u)
        k = m.dimension
        nil = u - RatMatrix.identity(k)
        assert mat_pow(nil, k) == RatMatrix.zero(k)


def test_quasi_unipotency_transfers_to_second_compound():
    rng = random.Random(4242)
    for _ in range(16):
        dim = rng.choice([4, 6])
        m = random_mixed_matrix(rng, dim)
        a = quasi_unipotency(m).is_quasi_unipotent
        b = quasi_unipotency(compound_matrix(m, 2)).is_quasi_unipotent
        assert a == b
