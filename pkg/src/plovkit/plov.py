"""Polynomial volume growth and cohomological growth exponents.

For a quasi-unipotent matrix acting on a 2g-dimensional space whose
Jordan profile splits into conjugate halves with block sizes k_i, the
polynomial volume growth is sum k_i^2.  The growth exponent in exterior
degree r is the degree in n of the fastest-growing r-by-r minor of the
n-th power of the unipotent iterate, written as the exact polynomial
matrix U(n) = sum_i C(n,i) (U-I)^i.

Minors of a block-diagonal unipotent matrix vanish unless the row and
column sets meet every block in equal numbers, so the maximal minor
degree decomposes over blocks.  Within a single block of size k the
entries of U(n) are the binomial coefficients C(n, j-i); an r'-by-r'
minor on rows I and columns J is a polynomial of degree sum(J) - sum(I)
whose leading coefficient is det(1/(j-i)!), nonzero exactly when the
sorted rows and columns interleave (i_b <= j_b).  The extreme choice
I = {1..r'}, J = {k-r'+1..k} therefore realizes the maximum degree
r'(k - r'); the nonvanishing of its leading coefficient is re-verified
at runtime.  A direct enumeration of all symbolic minors is kept as
`growth_exponent_by_minors` for cross-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence

from .cyclotomic import QuasiUnipotencyVerdict, quasi_unipotency, unipotent_power
from .errors import (
    CrossCheckError,
    NotQuasiUnipotentError,
    OddDimensionError,
)
from .exact import (
    NEG_INF,
    PolyMatrix,
    RatMatrix,
    UniPoly,
    binom_poly,
    compound_matrix,
    det_exact,
    det_poly,
    mat_mul,
)
from .jordan import (
    HalfProfile,
    JordanProfile,
    half_profile,
    jordan_profile,
    pseudo_analytic_check,
    unipotent_block_profile,
)


def plov_of(half: HalfProfile) -> int:
    """Polynomial volume growth from one conjugate half: sum count * k^2."""
    return sum(count * k * k for _, k, count in half.entries)


@lru_cache(maxsize=None)
def _single_block_minor_degree(k: int, r: int) -> int:
    """Max degree over r-by-r minors of the binomial power matrix of a
    single size-k block, with the leading coefficient of the extreme
    minor re-verified to be nonzero."""
    if r == 0:
        return 0
    if not 1 <= r <= k:
        raise ValueError("minor order out of range for block size")
    rows = range(1, r + 1)
    cols = range(k - r + 1, k + 1)
    lead = det_exact(
        RatMatrix.from_rows(
            [
                [
                    Fraction(1, factorial(j - i)) if j >= i else Fraction(0)
                    for j in cols
                ]
                for i in rows
            ]
        )
    )
    if lead == 0:
        raise CrossCheckError("extreme minor has vanishing leading coefficient")
    return r * (k - r)


def _max_minor_degree(block_sizes: Sequence[int], r: int) -> int:
    """Max total minor degree over distributions of r rows among blocks."""
    best = [None] * (r + 1)
    best[0] = 0
    for k in block_sizes:
        updated = list(best)
        for used in range(r + 1):
            if best[used] is None:
                continue
            for take in range(1, min(k, r - used) + 1):
                cand = best[used] + _single_block_minor_degree(k, take)
                if updated[used + take] is None or cand > updated[used + take]:
                    updated[used + take] = cand
        best = updated
    if best[r] is None:
        raise CrossCheckError("no admissible minor found (impossible for r <= K)")
    return best[r]


def growth_exponent(m: RatMatrix, r: int) -> int:
    """Growth exponent in exterior degree r: the maximum degree in n over
    all r-by-r minors of U(n), the symbolic n-th power of the unipotent
    iterate U = M^N.  Along that iterate the r-th compound of M^n grows
    like n to this exponent."""
    if not 1 <= r <= m.dimension:
        raise ValueError(f"degree {r} out of range 1..{m.dimension}")
    _, u = unipotent_power(m)
    profile = unipotent_block_profile(u)
    return _max_minor_degree(profile.unipotent_block_sizes(), r)


def symbolic_unipotent_power(u: RatMatrix) -> PolyMatrix:
    """The polynomial matrix U(n) = sum_i C(n,i) (U-I)^i, which equals
    U^x at every integer x >= 0."""
    k = u.dimension
    nil = u - RatMatrix.identity(k)
    terms = []
    power = RatMatrix.identity(k)
    i = 0
    while True:
        if all(c == 0 for row in power.entries for c in row):
            break
        terms.append((binom_poly(i, "n"), power))
        if i >= k - 1:
            break
        power = mat_mul(power, nil)
        i += 1
    zero = UniPoly.zero("n")
    rows = []
    for a in range(k):
        row = []
        for b in range(k):
            p = zero
            for coeff_poly, mat in terms:
                c = mat.entries[a][b]
                if c:
                    p = p + coeff_poly * c
            row.append(p)
        rows.append(row)
    return PolyMatrix.from_rows(rows, "n")


def growth_exponent_by_minors(m: RatMatrix, r: int) -> int:
    """Direct oracle for `growth_exponent`: enumerate every r-by-r minor
    of U(n) symbolically and take the maximum degree.  Exponential in the
    dimension; intended for cross-checks on small matrices."""
    if not 1 <= r <= m.dimension:
        raise ValueError(f"degree {r} out of range 1..{m.dimension}")
    _, u = unipotent_power(m)
    sym = symbolic_unipotent_power(u)
    k = u.dimension
    best = NEG_INF
    for rows in itertools.combinations(range(k), r):
        for cols in itertools.combinations(range(k), r):
            sub = PolyMatrix.from_rows(
                [[sym.entries[i][j] for j in cols] for i in rows], "n"
            )
            minor = det_poly(sub, sub.det_degree_bound())
            if minor.degree() > best:
                best = minor.degree()
    if best is NEG_INF:
        raise CrossCheckError("all minors vanished (impossible: U(0) = I)")
    return int(best)


def max_block_compound2(m: RatMatrix) -> int:
    """Maximum Jordan block size of the second compound of M, computed by
    rank sequences on the literal compound of the unipotent iterate.  For
    pseudo-analytic M this equals 2*kJ + 1 where kJ + 1 is the largest
    half-profile block."""
    if m.dimension < 2:
        raise ValueError("second compound requires dimension >= 2")
    _, u = unipotent_power(m)
    profile = unipotent_block_profile(compound_matrix(u, 2))
    return profile.max_block_size


@dataclass(frozen=True)
class BoundCheck:
    """One verified inequality or identity, with the law spelled out."""

    name: str
    law: str
    holds: bool


@dataclass(frozen=True)
class AnalysisReport:
    """Full verdict record for one matrix.

    The profile-derived fields (half, plov, kJ, kf, max_block_n1) are
    None when the profile is not pseudo-analytic; everything else is
    still computed.
    """

    dimension: int
    genus: int
    verdict: QuasiUnipotencyVerdict
    profile: JordanProfile
    pseudo_analytic: bool
    half: Optional[HalfProfile]
    plov: Optional[int]
    kJ: Optional[int]
    kf: Optional[int]
    max_block_n1: Optional[int]
    max_block_compound2: int
    exponents: dict[int, int]
    bound_checks: tuple[BoundCheck, ...]

    def all_bounds_hold(self) -> bool:
        return all(check.holds for check in self.bound_checks)


def analyze(m: RatMatrix, degrees: Optional[Sequence[int]] = None) -> AnalysisReport:
    """Run the full pipeline on an even-dimensional matrix.

    Raises NotQuasiUnipotentError or OddDimensionError; a quasi-unipotent
    but non-pseudo-analytic input still yields a report, with the
    half-profile invariants absent.
    """
    dim = m.dimension
    if dim % 2:
        raise OddDimensionError(f"dimension {dim} is odd; expected 2g")
    g = dim // 2
    verdict = quasi_unipotency(m)
    if not verdict.is_quasi_unipotent:
        raise NotQuasiUnipotentError(
            f"matrix is not quasi-unipotent; residual factor {verdict.residual}"
        )
    profile = jordan_profile(m)
    pseudo = pseudo_analytic_check(profile)
    half = half_profile(profile) if pseudo else None
    plov = plov_of(half) if pseudo else None
    kj = half.max_block_size - 1 if pseudo else None
    kf = 2 * kj if pseudo else None
    max_block_n1 = 2 * kj + 1 if pseudo else None

    if degrees is None:
        degrees = range(1, dim + 1)
    degrees = sorted(set(degrees))
    for r in degrees:
        if not 1 <= r <= dim:
            raise ValueError(f"degree {r} out of range 1..{dim}")
    exponents = {r: growth_exponent(m, r) for r in degrees}
    compound2_block = max_block_compound2(m)

    checks: list[BoundCheck] = []
    if pseudo:
        checks.append(
            BoundCheck(
                "volume_growth_upper_bound",
                "plov <= g + g*kf/2",
                plov <= g + g * kf // 2,
            )
        )
        if kf == 2:
            checks.append(
                BoundCheck(
                    "quadratic_case_bound",
                    "plov <= 2*floor(g/2) + g when kf = 2",
                    plov <= 2 * (g // 2) + g,
                )
            )
    for r in degrees:
        if r % 2 == 0:
            half_r = r // 2
            checks.append(
                BoundCheck(
                    f"even_degree_exponent_bound_r{r}",
                    f"exponent[{r}] <= 2*{half_r}*(g-{half_r})",
                    exponents[r] <= 2 * half_r * (g - half_r),
                )
            )
    if pseudo:
        checks.append(
            BoundCheck(
                "compound2_block_identity",
                "max Jordan block of the second compound = 2*kJ + 1",
                compound2_block == 2 * kj + 1,
            )
        )

    return AnalysisReport(
        dimension=dim,
        genus=g,
        verdict=verdict,
        profile=profile,
        pseudo_analytic=pseudo,
        half=half,
        plov=plov,
        kJ=kj,
        kf=kf,
        max_block_n1=max_block_n1,
        max_block_compound2=compound2_block,
        exponents=exponents,
        bound_checks=tuple(checks),
    )
