"""Cyclotomic polynomials and the root-of-unity test for matrices.

A square rational matrix is quasi-unipotent when some power of it is
unipotent, equivalently when every eigenvalue is a root of unity.  For a
matrix whose characteristic polynomial has integer coefficients this is
decidable exactly: an algebraic integer whose conjugates all lie on the
unit circle is a root of unity, so it suffices to strip cyclotomic
factors from the characteristic polynomial.  Since phi(n) >= sqrt(n/2),
every cyclotomic factor of a degree-d polynomial has index n <= 2*d^2,
which makes the search finite.

A matrix with a non-integer characteristic polynomial is reported as not
quasi-unipotent with the full characteristic polynomial as residual:
eigenvalues of a quasi-unipotent matrix are algebraic integers, and no
analogous circle criterion exists for algebraic non-integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Optional

from .errors import CrossCheckError, NotQuasiUnipotentError
from .exact import RatMatrix, UniPoly, char_poly, mat_mul, mat_pow


def euler_phi(n: int) -> int:
    """Euler's totient by trial-division factorization."""
    if n < 1:
        raise ValueError("totient argument must be positive")
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _proper_divisors(n: int) -> list[int]:
    divs = [d for d in range(1, n // 2 + 1) if n % d == 0]
    return divs


def _prime_factors(n: int) -> list[int]:
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial in t: monic, integer coefficients,
    degree phi(n).

    Computed by dividing t^n - 1 by the cyclotomic polynomials of all
    proper divisors of n; the division is exact.  Results are memoized,
    and the memo is a pure cache (results are identical with and without
    it).
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = UniPoly.from_coeffs([-1] + [0] * (n - 1) + [1], "t")
    for d in _proper_divisors(n):
        p = p.exact_div(cyclotomic_poly(d))
    if p.degree() != euler_phi(n) or not p.is_integral():
        raise CrossCheckError(f"cyclotomic polynomial {n} failed sanity checks")
    return p


@dataclass(frozen=True)
class QuasiUnipotencyVerdict:
    """Outcome of the root-of-unity test on a square rational matrix.

    When the verdict is positive, ``order`` is the least N with M^N
    unipotent and ``cyclotomic_factorization`` lists (n, multiplicity)
    pairs with char poly = product of Phi_n^multiplicity.  When negative,
    ``residual`` holds the nonconstant cofactor that has no cyclotomic
    factors (the full characteristic polynomial if it was not integral).
    """

    is_quasi_unipotent: bool
    order: Optional[int] = None
    cyclotomic_factorization: Optional[tuple[tuple[int, int], ...]] = None
    residual: Optional[UniPoly] = None


def is_unipotent(m: RatMatrix) -> bool:
    """True when (M - I)^K = 0, checked by repeated squaring."""
    k = m.dimension
    b = m - RatMatrix.identity(k)
    power = 1
    while True:
        if all(c == 0 for row in b.entries for c in row):
            return True
        if power >= k:
            return False
        b = mat_mul(b, b)
        power *= 2


@lru_cache(maxsize=None)
def quasi_unipotency(m: RatMatrix) -> QuasiUnipotencyVerdict:
    """Decide quasi-unipotency by stripping cyclotomic factors from the
    characteristic polynomial.

    The verdict is total: non-integral characteristic polynomials yield an
    immediate negative with the characteristic polynomial as residual.
    The minimality of the returned order (the lcm of the cyclotomic
    indices present) is re-verified on maximal proper divisors as cheap
    insurance against arithmetic bugs.
    """
    p = char_poly(m)
    if not p.is_integral():
        return QuasiUnipotencyVerdict(False, residual=p)
    d = m.dimension
    factors: list[tuple[int, int]] = []
    for n in range(1, 2 * d * d + 1):
        if euler_phi(n) > d:
            continue
        phi_n = cyclotomic_poly(n)
        mult = 0
        while phi_n.divides(p):
            p = p.exact_div(phi_n)
            mult += 1
        if mult:
            factors.append((n, mult))
        if p.degree() == 0:
            break
    if p.degree() != 0:
        return QuasiUnipotencyVerdict(False, residual=p)
    order = lcm(*(n for n, _ in factors))
    for q in _prime_factors(order):
        if is_unipotent(mat_pow(m, order // q)):
            raise CrossCheckError(
                "order minimality check failed: a proper divisor already works"
            )
    return QuasiUnipotencyVerdict(
        True,
        order=order,
        cyclotomic_factorization=tuple(sorted(factors)),
    )


def unipotent_power(m: RatMatrix) -> tuple[int, RatMatrix]:
    """Return (N, M^N) where N is the least exponent making M unipotent."""
    verdict = quasi_unipotency(m)
    if not verdict.is_quasi_unipotent:
        raise NotQuasiUnipotentError(
            "matrix is not quasi-unipotent; residual factor "
            f"{verdict.residual}"
        )
    u = mat_pow(m, verdict.order)
    if not is_unipotent(u):
        raise CrossCheckError("claimed unipotent power is not unipotent")
    return verdict.order, u
