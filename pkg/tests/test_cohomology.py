"""Tests for the exterior-algebra model: pullbacks, divisor polynomials,
intersection numbers, and the vanishing scan.

Oracles: literal substitution for pullbacks, summation over matrix powers
for the divisor polynomial, and hand sign bookkeeping for small wedges.
"""

import itertools
import random
from fractions import Fraction

import pytest

from plovkit import (
    RatMatrix,
    TwoForm,
    TwoFormPoly,
    UniPoly,
    delta_n,
    half_profile,
    intersection_poly,
    jordan_profile,
    mat_mul,
    mat_pow,
    plov_of,
    plov_via_model,
    power_sum_det,
    pullback2,
    vanishing_scan,
    wedge_coefficient,
)
from plovkit.errors import (
    DegenerateFormError,
    DimensionMismatchError,
    NotPseudoAnalyticError,
    NotUnipotentError,
)
from plovkit.randgen import random_paired_unipotent
from plovkit.selfcheck import randgen_two_form


def poly_n(*coeffs):
    return UniPoly.from_coeffs(coeffs, "n")


def quad_block():
    j12 = RatMatrix.jordan_block(1, 2)
    return RatMatrix.block_diag(j12, j12)


# ---------------------------------------------------------------------------
# pullbacks


def test_pullback_identity_fixes_everything():
    rng = random.Random(61)
    for _ in range(5):
        g = rng.randint(1, 3)
        w = randgen_two_form(rng, g)
        assert pullback2(RatMatrix.identity(2 * g), w) == w


def test_pullback_block_leader_fixed():
    m = quad_block()
    w = TwoForm.basis(2, 1, 3)
    assert pullback2(m, w) == w


def test_pullback_substitution_example():
    # M e2 = e1 + e2 and M e4 = e3 + e4, so e2^e4 expands to four terms
    m = quad_block()
    w = TwoForm.basis(2, 2, 4)
    expected = TwoForm(2, {(1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1})
    assert pullback2(m, w) == expected


def test_pullback_substitution_oracle_random():
    # oracle: expand (M e_i) ^ (M e_j) coordinate by coordinate
    rng = random.Random(62)
    for _ in range(8):
        g = rng.randint(1, 3)
        k = 2 * g
        m = RatMatrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)]
        )
        w = randgen_two_form(rng, g)
        expected: dict = {}
        for (i, j), c in w.items():
            for a in range(1, k + 1):
                for b in range(1, k + 1):
                    if a >= b:
                        continue
                    v = (
                        m.entries[a - 1][i - 1] * m.entries[b - 1][j - 1]
                        - m.entries[b - 1][i - 1] * m.entries[a - 1][j - 1]
                    )
                    expected[(a, b)] = expected.get((a, b), Fraction(0)) + c * v
        assert pullback2(m, w) == TwoForm(g, expected)


def test_pullback_power_functoriality():
    rng = random.Random(63)
    for _ in range(5):
        g = rng.randint(1, 3)
        m = RatMatrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(2 * g)] for _ in range(2 * g)]
        )
        w = randgen_two_form(rng, g)
        iterated = w
        for step in range(1, 7):
            iterated = pullback2(m, iterated)
            assert pullback2(mat_pow(m, step), w) == iterated


def test_pullback_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        pullback2(RatMatrix.identity(2), TwoForm.basis(2, 1, 2))


# ---------------------------------------------------------------------------
# divisor polynomials


def test_delta_identity_matrix():
    h = TwoForm.standard(2)
    d = delta_n(RatMatrix.identity(4), h)
    n = UniPoly.variable("n")
    assert d == TwoFormPoly(2, {pair: n * v for pair, v in h.items()})


def test_delta_quad_block_coefficients():
    m = quad_block()
    d = delta_n(m, TwoForm.standard(2))
    assert d.coefficient(1, 3) == poly_n(0, Fraction(7, 6), Fraction(-1, 2), Fraction(1, 3))
    assert d.coefficient(1, 4) == poly_n(0, Fraction(-1, 2), Fraction(1, 2))
    assert d.coefficient(2, 3) == poly_n(0, Fraction(-1, 2), Fraction(1, 2))
    assert d.coefficient(2, 4) == poly_n(0, 1)


def test_delta_evaluates_to_h_at_one():
    rng = random.Random(64)
    for _ in range(5):
        g = rng.randint(1, 3)
        m, _ = random_paired_unipotent(rng, g)
        h = randgen_two_form(rng, g)
        assert delta_n(m, h).eval_at(1) == h


def test_delta_telescoping_oracle():
    rng = random.Random(65)
    for _ in range(6):
        g = rng.randint(1, 3)
        m, _ = random_paired_unipotent(rng, g)
        h = randgen_two_form(rng, g)
        d = delta_n(m, h)
        for n0 in range(0, 9):
            acc = TwoForm(g)
            power = RatMatrix.identity(2 * g)
            for _ in range(n0):
                acc = acc + pullback2(power, h)
                power = mat_mul(power, m)
            assert d.eval_at(n0) == acc


def test_delta_rejects_non_unipotent():
    with pytest.raises(NotUnipotentError):
        delta_n(RatMatrix.jordan_block(-1, 2), TwoForm.basis(1, 1, 2))


# ---------------------------------------------------------------------------
# intersection numbers


def test_intersection_genus_one():
    c = poly_n(3, 1)
    form = TwoFormPoly(1, {(1, 2): c})
    assert intersection_poly([form]) == c


def test_intersection_sign_bookkeeping_oracle():
    # coefficient of e1^e2^e3^e4 in w^w for
    # w = a e1^e3 + b e1^e4 + c e2^e3 + d e2^e4 is 2(bc - ad)
    a, b, c, d = (poly_n(2), poly_n(0, 1), poly_n(5), poly_n(1, 1))
    w = TwoFormPoly(2, {(1, 3): a, (1, 4): b, (2, 3): c, (2, 4): d})
    two = UniPoly.constant(2, "n")
    assert intersection_poly([w, w]) == two * (b * c - a * d)
    # independent permutation-sign oracle on constant forms
    rng = random.Random(66)
    for _ in range(6):
        forms = [randgen_two_form(rng, 2) for _ in range(2)]
        def sign(perm):
            s = 1
            for x, y in itertools.combinations(range(4), 2):
                if perm[x] > perm[y]:
                    s = -s
            return s
        total = Fraction(0)
        for (p1, c1) in forms[0].items():
            for (p2, c2) in forms[1].items():
                seq = p1 + p2
                if len(set(seq)) != 4:
                    continue
                total += c1 * c2 * sign(seq)
        assert wedge_coefficient(forms) == total


def test_intersection_delta_self_wedge_closed_form():
    m = quad_block()
    d = delta_n(m, TwoForm.standard(2))
    result = intersection_poly([d, d])
    # -(1/6) n^2 (n^2 + 11), degree 4 with leading coefficient -1/6
    assert result == poly_n(0, 0, Fraction(-11, 6), 0, Fraction(-1, 6))
    assert result.degree() == 4
    assert result.leading() == Fraction(-1, 6)


def test_intersection_arity_checks():
    w = TwoFormPoly(2, {(1, 3): poly_n(1)})
    with pytest.raises(DimensionMismatchError):
        intersection_poly([w])
    with pytest.raises(DimensionMismatchError):
        intersection_poly([w, w, w])


# ---------------------------------------------------------------------------
# model volume growth


def test_model_identity_genus_two():
    # identity: half blocks all of size 1, profile value g = 2 = degree
    result = plov_via_model(RatMatrix.identity(4), TwoForm.standard(2))
    assert result.degree == 2
    assert result.profile_plov == 2
    assert result.matches_profile


def test_model_quad_block_standard_form():
    result = plov_via_model(quad_block(), TwoForm.standard(2))
    assert result.degree == 4
    assert result.profile_plov == 4
    assert result.matches_profile


def test_model_degenerate_form_raises():
    with pytest.raises(DegenerateFormError):
        plov_via_model(quad_block(), TwoForm.basis(2, 1, 3))


def test_model_undershooting_form_reports_flag():
    result = plov_via_model(quad_block(), TwoForm(2, {(1, 4): 1, (2, 3): 1}))
    assert result.degree == 2
    assert result.degree <= result.profile_plov == 4
    assert not result.matches_profile


def test_model_rejects_non_pseudo_analytic():
    with pytest.raises(NotPseudoAnalyticError):
        plov_via_model(RatMatrix.jordan_block(1, 2), TwoForm.basis(1, 1, 2))


def test_model_degree_ceiling_random_forms():
    rng = random.Random(67)
    for _ in range(10):
        g = rng.randint(1, 4)
        m, half_sizes = random_paired_unipotent(rng, g)
        expected = sum(k * k for k in half_sizes)
        try:
            result = plov_via_model(m, randgen_two_form(rng, g))
        except DegenerateFormError:
            continue
        assert result.degree <= expected


def test_model_standard_form_achieves_profile_value():
    rng = random.Random(68)
    for _ in range(10):
        g = rng.randint(1, 4)
        m, half_sizes = random_paired_unipotent(rng, g)
        result = plov_via_model(m, TwoForm.standard(g))
        assert result.matches_profile
        assert result.degree == sum(k * k for k in half_sizes)


def test_consistency_triangle():
    rng = random.Random(69)
    for _ in range(8):
        g = rng.randint(1, 4)
        m, _ = random_paired_unipotent(rng, g)
        model = plov_via_model(m, TwoForm.standard(g))
        if not model.matches_profile:
            continue
        half = half_profile(jordan_profile(m))
        ps = power_sum_det(m, RatMatrix.identity(2 * g))
        assert 2 * model.degree == ps.degree == 2 * plov_of(half)


# ---------------------------------------------------------------------------
# vanishing scan


def test_scan_identity_is_empty():
    report = vanishing_scan(RatMatrix.identity(4), TwoForm.standard(2))
    assert report.kf == 0
    assert report.scanned == ()
    assert report.violations == ()


def test_scan_quad_block_tuples_all_vanish():
    report = vanishing_scan(quad_block(), TwoForm.standard(2))
    assert report.kf == 2
    tuples = [t for t, _ in report.scanned]
    assert tuples == [(1, 2), (2, 1), (2, 2)]
    assert all(v == 0 for _, v in report.scanned)
    assert report.violations == ()


def test_scan_threshold_is_strict():
    # (1, 1) sits exactly at the threshold sum = g*kf/2 and is excluded,
    # and indeed its wedge value is nonzero
    m = quad_block()
    h = TwoForm.standard(2)
    report = vanishing_scan(m, h)
    assert (1, 1) not in [t for t, _ in report.scanned]
    nh = pullback2(m, h) - h
    assert wedge_coefficient([nh, nh]) != 0


def test_scan_clean_on_random_paired_profiles():
    rng = random.Random(70)
    for _ in range(8):
        g = rng.randint(1, 4)
        m, _ = random_paired_unipotent(rng, g)
        report = vanishing_scan(m, TwoForm.standard(g))
        assert report.violations == ()
        assert [t for t, _ in report.scanned] == sorted(t for t, _ in report.scanned)
