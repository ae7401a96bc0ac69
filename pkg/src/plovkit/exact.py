"""Exact rational scalars, univariate polynomials, and square matrices.

Everything in this package is computed over Q with `fractions.Fraction`;
no floating point appears anywhere.  This module is the substrate shared
by the rest of the library:

  * `UniPoly` -- dense univariate polynomial over Q with a variable tag
    ('t' for characteristic polynomials, 'n'/'m' for growth polynomials),
  * `RatMatrix` / `PolyMatrix` -- immutable square matrices over Q and
    over Q[n],
  * fraction-free determinants, exact rank, characteristic polynomials,
  * `discrete_sum` -- the exact map q(m) -> Q(n) with Q(n) = sum of q(m)
    for m = 0..n-1, via the binomial-basis identity
    sum_{m<n} C(m,i) = C(n,i+1),
  * `det_poly` -- determinant of a polynomial matrix by evaluation at
    consecutive integers and Lagrange interpolation,
  * `compound_matrix` -- the matrix of all r-by-r minors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence, Union

from .errors import CrossCheckError, DimensionMismatchError

#: The scalar type used everywhere: arbitrary-precision rational numbers,
#: always in lowest terms with positive denominator.
Rational = Fraction

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial, strictly below every integer.
NEG_INF = float("-inf")


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__!r}")


# ---------------------------------------------------------------------------
# univariate polynomials


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over Q.

    ``coeffs[i]`` is the coefficient of the i-th power of the variable;
    the trailing coefficient is nonzero unless the polynomial is zero.
    The variable tag guards against accidentally mixing polynomials in
    different indeterminates.
    """

    coeffs: tuple[Fraction, ...]
    var: str = "t"

    @staticmethod
    def from_coeffs(coeffs: Iterable[Scalar], var: str = "t") -> "UniPoly":
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return UniPoly(tuple(cs), var)

    @staticmethod
    def zero(var: str = "t") -> "UniPoly":
        return UniPoly((), var)

    @staticmethod
    def constant(c: Scalar, var: str = "t") -> "UniPoly":
        return UniPoly.from_coeffs([c], var)

    @staticmethod
    def variable(var: str = "t") -> "UniPoly":
        return UniPoly((Fraction(0), Fraction(1)), var)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def retag(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ValueError(
                f"variable mismatch: {self.var!r} vs {other.var!r}"
            )

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.from_coeffs(
            (self.coefficient(i) + other.coefficient(i) for i in range(n)),
            self.var,
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.from_coeffs(
            (self.coefficient(i) - other.coefficient(i) for i in range(n)),
            self.var,
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs), self.var)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            self._check_var(other)
            if self.is_zero() or other.is_zero():
                return UniPoly.zero(self.var)
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return UniPoly.from_coeffs(out, self.var)
        c = _frac(other)
        if c == 0:
            return UniPoly.zero(self.var)
        return UniPoly(tuple(a * c for a in self.coeffs), self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.constant(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check_var(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quot = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlead = other.coeffs[-1]
        dlen = len(other.coeffs)
        while len(rem) >= dlen:
            if rem[-1] == 0:
                rem.pop()
                continue
            q = rem[-1] / dlead
            quot[len(rem) - dlen] = q
            for i, c in enumerate(other.coeffs):
                rem[len(rem) - dlen + i] -= q * c
            rem.pop()
        return (
            UniPoly.from_coeffs(quot, self.var),
            UniPoly.from_coeffs(rem, self.var),
        )

    def divides(self, other: "UniPoly") -> bool:
        """True when self divides other exactly."""
        _, r = divmod(other, self)
        return r.is_zero()

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{self.var}" + (f"^{i}" if i > 1 else "")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def binom_poly(j: int, var: str) -> UniPoly:
    """The binomial coefficient C(x, j) as a polynomial in x."""
    if j < 0:
        raise ValueError("binomial index must be nonnegative")
    result = UniPoly.constant(1, var)
    x = UniPoly.variable(var)
    for i in range(j):
        result = result * (x - UniPoly.constant(i, var))
    return result * Fraction(1, factorial(j))


def lagrange_interpolate(
    points: Sequence[tuple[Scalar, Scalar]], var: str
) -> UniPoly:
    """The unique polynomial of degree < len(points) through the points."""
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    full = UniPoly.constant(1, var)
    for x in xs:
        full = full * (UniPoly.variable(var) - UniPoly.constant(x, var))
    result = UniPoly.zero(var)
    for x, y in points:
        y = _frac(y)
        if y == 0:
            continue
        basis = full.exact_div(
            UniPoly.variable(var) - UniPoly.constant(x, var)
        )
        result = result + basis * (y / basis(x))
    return result


def discrete_sum(q: UniPoly) -> UniPoly:
    """Exact discrete summation: returns Q in n with Q(n) = sum_{m=0}^{n-1} q(m).

    Works by converting q to the binomial basis with Newton forward
    differences and using sum_{m<n} C(m,i) = C(n,i+1), so the degree of
    the result is deg q + 1 for nonzero q.
    """
    if q.var != "m":
        raise ValueError("discrete_sum expects a polynomial in 'm'")
    if q.is_zero():
        return UniPoly.zero("n")
    d = q.degree()
    diffs = [q(x) for x in range(d + 1)]
    newton = [diffs[0]]
    for _ in range(d):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        newton.append(diffs[0])
    result = UniPoly.zero("n")
    for i, a in enumerate(newton):
        if a:
            result = result + binom_poly(i + 1, "n") * a
    return result


# ---------------------------------------------------------------------------
# matrices over Q


@dataclass(frozen=True)
class RatMatrix:
    """Immutable square matrix over Q, stored as a tuple of row tuples."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable[Scalar]]) -> "RatMatrix":
        grid = tuple(tuple(_frac(x) for x in row) for row in rows)
        k = len(grid)
        if k == 0 or any(len(row) != k for row in grid):
            raise DimensionMismatchError("matrix must be square and nonempty")
        return RatMatrix(grid)

    @staticmethod
    def identity(k: int) -> "RatMatrix":
        return RatMatrix.from_rows(
            [[1 if i == j else 0 for j in range(k)] for i in range(k)]
        )

    @staticmethod
    def zero(k: int) -> "RatMatrix":
        return RatMatrix.from_rows([[0] * k for _ in range(k)])

    @staticmethod
    def jordan_block(eigenvalue: Scalar, size: int) -> "RatMatrix":
        """Upper-triangular Jordan block with 1 on the superdiagonal."""
        e = _frac(eigenvalue)
        return RatMatrix.from_rows(
            [
                [e if i == j else 1 if j == i + 1 else 0 for j in range(size)]
                for i in range(size)
            ]
        )

    @staticmethod
    def companion(p: UniPoly) -> "RatMatrix":
        """Companion matrix of a monic polynomial of degree >= 1."""
        d = p.degree()
        if d is NEG_INF or d < 1 or p.leading() != 1:
            raise ValueError("companion matrix needs a monic nonconstant polynomial")
        return RatMatrix.from_rows(
            [
                [
                    -p.coefficient(i)
                    if j == d - 1
                    else 1
                    if i == j + 1
                    else 0
                    for j in range(d)
                ]
                for i in range(d)
            ]
        )

    @staticmethod
    def block_diag(*blocks: "RatMatrix") -> "RatMatrix":
        k = sum(b.dimension for b in blocks)
        rows = [[Fraction(0)] * k for _ in range(k)]
        offset = 0
        for b in blocks:
            for i in range(b.dimension):
                for j in range(b.dimension):
                    rows[offset + i][offset + j] = b.entries[i][j]
            offset += b.dimension
        return RatMatrix.from_rows(rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.entries)))

    def is_integral(self) -> bool:
        return all(
            c.denominator == 1 for row in self.entries for c in row
        )

    def trace(self) -> Fraction:
        return sum(
            (self.entries[i][i] for i in range(self.dimension)),
            Fraction(0),
        )

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        _check_same_dim(self, other)
        return RatMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        _check_same_dim(self, other)
        return RatMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            return mat_mul(self, other)
        c = _frac(other)
        return RatMatrix(
            tuple(tuple(a * c for a in row) for row in self.entries)
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int) -> "RatMatrix":
        return mat_pow(self, e)


def _check_same_dim(a: RatMatrix, b: RatMatrix) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Exact matrix product; skips zero entries, which keeps products of
    the sparse nilpotent matrices used elsewhere cheap."""
    _check_same_dim(a, b)
    k = a.dimension
    brows = b.entries
    out = []
    for arow in a.entries:
        acc = [Fraction(0)] * k
        for idx, aval in enumerate(arow):
            if aval:
                brow = brows[idx]
                for j, bval in enumerate(brow):
                    if bval:
                        acc[j] += aval * bval
        out.append(tuple(acc))
    return RatMatrix(tuple(out))


def mat_pow(a: RatMatrix, e: int) -> RatMatrix:
    """a**e by binary exponentiation; a**0 is the identity."""
    if e < 0:
        raise ValueError("negative matrix power")
    result = RatMatrix.identity(a.dimension)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base_needed = e > 1
        if base_needed:
            base = mat_mul(base, base)
        e >>= 1
    return result


def det_exact(m: RatMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is scaled to integers first and the scaling divided back out
    at the end, so all intermediate arithmetic stays in Z with the usual
    Bareiss control on entry growth.
    """
    k = m.dimension
    scale = 1
    a = []
    for row in m.entries:
        d = lcm(*(c.denominator for c in row))
        scale *= d
        a.append([int(c * d) for c in row])
    sign = 1
    prev = 1
    for col in range(k - 1):
        piv = next((r for r in range(col, k) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        pivot = a[col][col]
        for r in range(col + 1, k):
            head = a[r][col]
            arow = a[r]
            crow = a[col]
            for c in range(col + 1, k):
                arow[c] = (arow[c] * pivot - head * crow[c]) // prev
            arow[col] = 0
        prev = pivot
    return Fraction(sign * a[k - 1][k - 1], scale)


def rank_exact(m: RatMatrix) -> int:
    """Rank over Q by exact Gaussian elimination on sparse rows."""
    rows = []
    for row in m.entries:
        sparse = {j: c for j, c in enumerate(row) if c}
        if sparse:
            rows.append(sparse)
    rank = 0
    while rows:
        col = min(min(r) for r in rows)
        # choose the shortest row pivoting on col to limit fill-in
        piv_idx = min(
            (i for i, r in enumerate(rows) if col in r),
            key=lambda i: len(rows[i]),
        )
        piv = rows.pop(piv_idx)
        pval = piv[col]
        rank += 1
        next_rows = []
        for r in rows:
            head = r.get(col)
            if head:
                f = head / pval
                for j, c in piv.items():
                    v = r.get(j, Fraction(0)) - f * c
                    if v:
                        r[j] = v
                    elif j in r:
                        del r[j]
            if r:
                next_rows.append(r)
        rows = next_rows
    return rank


def char_poly(m: RatMatrix) -> UniPoly:
    """Characteristic polynomial det(t*I - M), monic of degree = dimension.

    Computed by evaluating the shifted determinant at t = 0..K and
    interpolating; the monic-degree property is re-verified.
    """
    k = m.dimension
    ident = RatMatrix.identity(k)
    points = [(x, det_exact(ident * x - m)) for x in range(k + 1)]
    p = lagrange_interpolate(points, "t")
    if p.degree() != k or p.leading() != 1:
        raise CrossCheckError("characteristic polynomial is not monic of full degree")
    return p


def poly_at_matrix(p: UniPoly, m: RatMatrix) -> RatMatrix:
    """Evaluate a polynomial at a square matrix (Horner scheme)."""
    k = m.dimension
    result = RatMatrix.zero(k)
    ident = RatMatrix.identity(k)
    for c in reversed(p.coeffs):
        result = mat_mul(result, m)
        if c:
            result = result + ident * c
    return result


def submatrix(
    m: RatMatrix, rows: Sequence[int], cols: Sequence[int]
) -> RatMatrix:
    return RatMatrix(
        tuple(tuple(m.entries[i][j] for j in cols) for i in rows)
    )


def compound_matrix(m: RatMatrix, r: int) -> RatMatrix:
    """The r-th compound: all r-by-r minors, row and column index sets in
    lexicographic order.  Represents the induced action on the r-th
    exterior power."""
    k = m.dimension
    if not 1 <= r <= k:
        raise ValueError(f"compound order {r} out of range 1..{k}")
    if r == 1:
        return m
    combos = list(itertools.combinations(range(k), r))
    if r == 2:
        e = m.entries
        return RatMatrix(
            tuple(
                tuple(
                    e[a][c] * e[b][d] - e[a][d] * e[b][c]
                    for (c, d) in combos
                )
                for (a, b) in combos
            )
        )
    return RatMatrix(
        tuple(
            tuple(det_exact(submatrix(m, rows, cols)) for cols in combos)
            for rows in combos
        )
    )


# ---------------------------------------------------------------------------
# matrices over Q[n]


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable square matrix of UniPoly entries sharing one variable."""

    entries: tuple[tuple[UniPoly, ...], ...]
    var: str

    @staticmethod
    def from_rows(rows: Iterable[Iterable[UniPoly]], var: str) -> "PolyMatrix":
        grid = tuple(tuple(row) for row in rows)
        k = len(grid)
        if k == 0 or any(len(row) != k for row in grid):
            raise DimensionMismatchError("matrix must be square and nonempty")
        for row in grid:
            for p in row:
                if p.var != var:
                    raise ValueError(
                        f"entry variable {p.var!r} does not match {var!r}"
                    )
        return PolyMatrix(grid, var)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def eval_at(self, x: Scalar) -> RatMatrix:
        return RatMatrix(
            tuple(tuple(p(x) for p in row) for row in self.entries)
        )

    def det_degree_bound(self) -> int:
        """Upper bound on deg det: sum over rows of the max entry degree."""
        total = 0
        for row in self.entries:
            degs = [p.degree() for p in row if not p.is_zero()]
            if not degs:
                return 0
            total += max(degs)
        return total


def det_poly(m: PolyMatrix, degree_bound: int) -> UniPoly:
    """Exact determinant of a polynomial matrix in the variable n.

    Evaluates the matrix at the consecutive integers 0..degree_bound,
    takes exact determinants, and Lagrange-interpolates.  One extra node
    re-verifies the interpolation, so an undersized bound (a caller bug)
    fails loudly instead of returning a wrong polynomial.
    """
    if m.var != "n":
        raise ValueError("det_poly expects entries in the variable 'n'")
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    points = [(x, det_exact(m.eval_at(x))) for x in range(degree_bound + 1)]
    p = lagrange_interpolate(points, "n")
    probe = degree_bound + 1
    if p(probe) != det_exact(m.eval_at(probe)):
        raise CrossCheckError(
            "det_poly verification node mismatch (degree bound too small?)"
        )
    return p
