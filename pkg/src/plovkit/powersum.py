"""Determinants of power sums attached to unipotent matrices.

For a unipotent A and a symmetric positive definite H over Q, the matrix
S(n) = sum_{m=0}^{n-1} (A^m)^T H A^m has polynomial entries in n, and its
determinant P(n) is a polynomial whose degree equals sum k_i^2 over the
Jordan block sizes k_i of A -- independent of H and invariant under
similarity.  The leading coefficient for a single block of size k is
(prod_{i<k} i!)^2 / prod_{i<2k} i!, a Hilbert-matrix determinant in
disguise.

Hermitian forms are restricted to rational symmetric positive definite
matrices so that all arithmetic stays in Q; the degree law is insensitive
to this restriction.  `power_sum_brute` keeps a literal-summation oracle
alongside the symbolic route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    CrossCheckError,
    DimensionMismatchError,
    NotSymmetricPositiveDefiniteError,
    NotUnipotentError,
)
from .exact import (
    PolyMatrix,
    RatMatrix,
    UniPoly,
    binom_poly,
    det_exact,
    det_poly,
    discrete_sum,
    mat_mul,
    submatrix,
)
from .cyclotomic import is_unipotent
from .jordan import jordan_profile


def ensure_spd(h: RatMatrix) -> RatMatrix:
    """Validate symmetry and positive definiteness exactly (Sylvester:
    every leading principal minor is strictly positive)."""
    k = h.dimension
    if h != h.transpose():
        raise NotSymmetricPositiveDefiniteError("matrix is not symmetric")
    idx = list(range(k))
    for t in range(1, k + 1):
        if det_exact(submatrix(h, idx[:t], idx[:t])) <= 0:
            raise NotSymmetricPositiveDefiniteError(
                f"leading principal minor {t} is not positive"
            )
    return h


@dataclass(frozen=True)
class PowerSumResult:
    """det S(n) together with its verified degree data."""

    poly: UniPoly
    degree: int
    leading_coeff: Fraction
    profile_degree: int


def _nilpotent_powers(a: RatMatrix) -> list[RatMatrix]:
    """[I, N, N^2, ...] for N = A - I, up to the last nonzero power."""
    k = a.dimension
    nil = a - RatMatrix.identity(k)
    powers = [RatMatrix.identity(k)]
    current = nil
    while any(c for row in current.entries for c in row):
        powers.append(current)
        if len(powers) > k:
            raise NotUnipotentError("matrix is not unipotent")
        current = mat_mul(current, nil)
    return powers


def power_sum_matrix(a: RatMatrix, h: RatMatrix) -> PolyMatrix:
    """S(n) in the variable n with S(x) = sum_{m=0}^{x-1} (A^m)^T H A^m at
    every integer x >= 0.

    A^m is expanded in the binomial basis sum_i C(m,i) N^i, the product
    collected entrywise as a polynomial in m, and summed exactly with
    `discrete_sum`; entry (i, j) has degree at most 2K - 1.
    """
    if a.dimension != h.dimension:
        raise DimensionMismatchError("matrix and form dimensions differ")
    if not is_unipotent(a):
        raise NotUnipotentError("power sums require a unipotent matrix")
    ensure_spd(h)
    k = a.dimension
    powers = _nilpotent_powers(a)
    binoms = [binom_poly(i, "m") for i in range(len(powers))]
    zero_m = UniPoly.zero("m")
    entry_polys = [[zero_m for _ in range(k)] for _ in range(k)]
    for i, ni in enumerate(powers):
        left = mat_mul(ni.transpose(), h)
        for j, nj in enumerate(powers):
            term = mat_mul(left, nj)
            weight = binoms[i] * binoms[j]
            for row in range(k):
                for col in range(k):
                    c = term.entries[row][col]
                    if c:
                        entry_polys[row][col] = (
                            entry_polys[row][col] + weight * c
                        )
    rows = [
        [discrete_sum(entry_polys[row][col]) for col in range(k)]
        for row in range(k)
    ]
    return PolyMatrix.from_rows(rows, "n")


def power_sum_det(a: RatMatrix, h: RatMatrix) -> PowerSumResult:
    """det S(n) with the degree law re-verified at runtime.

    The degree must equal sum k_i^2 over the Jordan profile of A; a
    mismatch can only come from an arithmetic bug and raises
    CrossCheckError.
    """
    k = a.dimension
    s = power_sum_matrix(a, h)
    poly = det_poly(s, k * (2 * k - 1))
    profile = jordan_profile(a)
    profile_degree = sum(m * size * size for _, size, m in profile.entries)
    if poly.degree() != profile_degree:
        raise CrossCheckError(
            f"power-sum determinant degree {poly.degree()} "
            f"differs from profile degree {profile_degree}"
        )
    leading = poly.leading()
    if leading <= 0:
        raise CrossCheckError("power-sum determinant has nonpositive leading term")
    return PowerSumResult(
        poly=poly,
        degree=profile_degree,
        leading_coeff=leading,
        profile_degree=profile_degree,
    )


def power_sum_brute(a: RatMatrix, h: RatMatrix, n: int) -> Fraction:
    """Literal summation oracle: det of sum_{m=0}^{n-1} (A^m)^T H A^m with
    no symbolic shortcut."""
    if a.dimension != h.dimension:
        raise DimensionMismatchError("matrix and form dimensions differ")
    ensure_spd(h)
    if n < 1:
        raise ValueError("need at least one summand")
    k = a.dimension
    acc = RatMatrix.zero(k)
    power = RatMatrix.identity(k)
    for _ in range(n):
        acc = acc + mat_mul(mat_mul(power.transpose(), h), power)
        power = mat_mul(power, a)
    return det_exact(acc)


def single_block_leading_coeff(k: int) -> Fraction:
    """Leading coefficient of det S(n) for a single Jordan block of size k
    with the identity form: (prod_{i=1}^{k-1} i!)^2 / prod_{i=1}^{2k-1} i!."""
    if k < 1:
        raise ValueError("block size must be positive")
    num = 1
    for i in range(1, k):
        num *= factorial(i)
    den = 1
    for i in range(1, 2 * k):
        den *= factorial(i)
    return Fraction(num * num, den)


def hilbert_matrix(k: int) -> RatMatrix:
    """The k-by-k matrix with entries 1/(i + j - 1)."""
    if k < 1:
        raise ValueError("size must be positive")
    return RatMatrix.from_rows(
        [[Fraction(1, i + j + 1) for j in range(k)] for i in range(k)]
    )


def hilbert_det(k: int) -> Fraction:
    """Determinant of the k-by-k Hilbert matrix, cross-checked against the
    factorial closed form (prod_{i<k} i!)^4 / prod_{i<2k} i!."""
    value = det_exact(hilbert_matrix(k))
    num = 1
    for i in range(1, k):
        num *= factorial(i)
    den = 1
    for i in range(1, 2 * k):
        den *= factorial(i)
    closed = Fraction(num**4, den)
    if value != closed:
        raise CrossCheckError("Hilbert determinant disagrees with closed form")
    return value
