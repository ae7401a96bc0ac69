"""Exterior-algebra model of degree-2 cohomology classes.

Divisor classes are modeled as alternating 2-forms on a 2g-dimensional
space, written in the ordered basis e_i ^ e_j with 1 <= i < j <= 2g.
The pullback along a matrix M substitutes columns:

    e_i ^ e_j  |->  (M e_i) ^ (M e_j),

extended bilinearly, so pullback2(A*B) = pullback2(A) o pullback2(B).
Summing pullbacks of a form H along powers of a unipotent M gives the
divisor polynomial

    Delta_n = sum_{i=0}^{kf} C(n, i+1) N^i H,   N = pullback2(M, .) - id,

whose top self-intersection (the coefficient of e_1 ^ ... ^ e_2g in the
g-fold wedge) is a polynomial in n.  Its degree is the model-side volume
growth; intersection numbers are kept as raw wedge coefficients, since
every contract here concerns degrees and vanishing only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    CrossCheckError,
    DegenerateFormError,
    DimensionMismatchError,
    NotPseudoAnalyticError,
    NotUnipotentError,
)
from .exact import RatMatrix, Scalar, UniPoly, _frac, binom_poly
from .cyclotomic import is_unipotent
from .jordan import half_profile, pseudo_analytic_check, unipotent_block_profile
from .plov import plov_of

Pair = tuple[int, int]


def _check_pair(pair: Pair, g: int) -> Pair:
    i, j = pair
    if not (1 <= i < j <= 2 * g):
        raise ValueError(f"index pair {pair} out of range for genus {g}")
    return (i, j)


class TwoForm:
    """Alternating 2-form with rational coefficients on ordered pairs
    (i, j), 1 <= i < j <= 2g.  Values are immutable after construction."""

    __slots__ = ("genus", "_coeffs")

    def __init__(self, genus: int, coeffs: Optional[dict[Pair, Scalar]] = None):
        if genus < 1:
            raise ValueError("genus must be positive")
        self.genus = genus
        cleaned: dict[Pair, Fraction] = {}
        for pair, value in (coeffs or {}).items():
            v = _frac(value)
            if v:
                cleaned[_check_pair(pair, genus)] = v
        self._coeffs = cleaned

    @staticmethod
    def basis(genus: int, i: int, j: int) -> "TwoForm":
        return TwoForm(genus, {(i, j): 1})

    @staticmethod
    def standard(genus: int) -> "TwoForm":
        """sum_{j<=g} e_j ^ e_{g+j}: the pairing form adapted to a matrix
        presented as two identical blocks on coordinates (1..g | g+1..2g)."""
        return TwoForm(genus, {(j, genus + j): 1 for j in range(1, genus + 1)})

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def items(self) -> list[tuple[Pair, Fraction]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TwoForm)
            and self.genus == other.genus
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self._coeffs.items()))))

    def __add__(self, other: "TwoForm") -> "TwoForm":
        self._check_genus(other)
        out = dict(self._coeffs)
        for pair, v in other._coeffs.items():
            out[pair] = out.get(pair, Fraction(0)) + v
        return TwoForm(self.genus, out)

    def __sub__(self, other: "TwoForm") -> "TwoForm":
        self._check_genus(other)
        out = dict(self._coeffs)
        for pair, v in other._coeffs.items():
            out[pair] = out.get(pair, Fraction(0)) - v
        return TwoForm(self.genus, out)

    def __mul__(self, scalar: Scalar) -> "TwoForm":
        c = _frac(scalar)
        return TwoForm(self.genus, {p: v * c for p, v in self._coeffs.items()})

    __rmul__ = __mul__

    def _check_genus(self, other: "TwoForm") -> None:
        if self.genus != other.genus:
            raise DimensionMismatchError("genus mismatch between 2-forms")

    def __repr__(self) -> str:
        if self.is_zero():
            return "TwoForm(0)"
        terms = " + ".join(f"{v}*e{i}^e{j}" for (i, j), v in self.items())
        return f"TwoForm({terms})"


class TwoFormPoly:
    """Alternating 2-form whose coefficients are polynomials in n."""

    __slots__ = ("genus", "_coeffs")

    def __init__(self, genus: int, coeffs: Optional[dict[Pair, UniPoly]] = None):
        if genus < 1:
            raise ValueError("genus must be positive")
        self.genus = genus
        cleaned: dict[Pair, UniPoly] = {}
        for pair, value in (coeffs or {}).items():
            if value.var != "n":
                raise ValueError("coefficients must be polynomials in 'n'")
            if not value.is_zero():
                cleaned[_check_pair(pair, genus)] = value
        self._coeffs = cleaned

    def coefficient(self, i: int, j: int) -> UniPoly:
        return self._coeffs.get((i, j), UniPoly.zero("n"))

    def items(self) -> list[tuple[Pair, UniPoly]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def eval_at(self, x: Scalar) -> TwoForm:
        return TwoForm(
            self.genus, {pair: p(x) for pair, p in self._coeffs.items()}
        )

    def __add__(self, other: "TwoFormPoly") -> "TwoFormPoly":
        if self.genus != other.genus:
            raise DimensionMismatchError("genus mismatch between 2-forms")
        out = dict(self._coeffs)
        for pair, p in other._coeffs.items():
            out[pair] = out.get(pair, UniPoly.zero("n")) + p
        return TwoFormPoly(self.genus, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TwoFormPoly)
            and self.genus == other.genus
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self._coeffs.items()))))


def scale_form(form: TwoForm, poly: UniPoly) -> TwoFormPoly:
    return TwoFormPoly(
        form.genus, {pair: poly * v for pair, v in form.items()}
    )


def pullback2(m: RatMatrix, form: TwoForm) -> TwoForm:
    """Pullback of a 2-form along M by column substitution:
    e_i ^ e_j |-> (M e_i) ^ (M e_j), extended bilinearly."""
    g = form.genus
    if m.dimension != 2 * g:
        raise DimensionMismatchError(
            f"matrix dimension {m.dimension} does not match genus {g}"
        )
    e = m.entries
    out: dict[Pair, Fraction] = {}
    for (i, j), c in form.items():
        col_i = [e[a][i - 1] for a in range(2 * g)]
        col_j = [e[a][j - 1] for a in range(2 * g)]
        for a in range(2 * g):
            via = col_i[a]
            vjb = col_j[a]
            if not via and not vjb:
                continue
            for b in range(a + 1, 2 * g):
                v = via * col_j[b] - col_i[b] * vjb
                if v:
                    key = (a + 1, b + 1)
                    out[key] = out.get(key, Fraction(0)) + c * v
    return TwoForm(g, out)


def nilpotent_chain(m: RatMatrix, h: TwoForm) -> list[TwoForm]:
    """[H, N H, N^2 H, ...] for N = pullback2(M, .) - id, up to the last
    nonzero term; finite because the operator is nilpotent for unipotent M."""
    if not is_unipotent(m):
        raise NotUnipotentError("the divisor polynomial needs a unipotent matrix")
    if h.is_zero():
        raise ValueError("the 2-form must be nonzero")
    chain = [h]
    bound = h.genus * (2 * h.genus - 1)  # dim of the space of 2-forms
    while True:
        nxt = pullback2(m, chain[-1]) - chain[-1]
        if nxt.is_zero():
            return chain
        chain.append(nxt)
        if len(chain) > bound:
            raise CrossCheckError("pullback nilpotency bound exceeded")


def delta_n(m: RatMatrix, h: TwoForm) -> TwoFormPoly:
    """The divisor polynomial Delta_n = sum_i C(n, i+1) N^i H; evaluated
    at any integer x >= 0 it equals sum_{m=0}^{x-1} pullback2(M^m, H)."""
    chain = nilpotent_chain(m, h)
    result = TwoFormPoly(h.genus)
    for i, form in enumerate(chain):
        result = result + scale_form(form, binom_poly(i + 1, "n"))
    return result


def _merge_sign(indices: tuple[int, ...], pair: Pair) -> int:
    """Sign of sorting indices + pair into ascending order; 0 on repeats."""
    i, j = pair
    if i in indices or j in indices:
        return 0
    inversions = sum(1 for t in indices if t > i) + sum(
        1 for t in indices if t > j
    )
    return -1 if inversions % 2 else 1


def _top_wedge(terms: Sequence[list], genus: int, zero, unit):
    """Coefficient of e_1 ^ ... ^ e_2g in the wedge of g 2-forms given as
    item lists; generic over the coefficient arithmetic."""
    state = {(): unit}
    for items in terms:
        nxt: dict[tuple[int, ...], object] = {}
        for indices, acc in state.items():
            for pair, coeff in items:
                sign = _merge_sign(indices, pair)
                if sign == 0:
                    continue
                key = tuple(sorted(indices + pair))
                term = acc * coeff if sign > 0 else -(acc * coeff)
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
        state = nxt
    top = tuple(range(1, 2 * genus + 1))
    return state.get(top, zero)


def intersection_poly(classes: Sequence[TwoFormPoly]) -> UniPoly:
    """Wedge g polynomial 2-forms on a genus-g space and return the raw
    coefficient of the top form e_1 ^ ... ^ e_2g (no normalization; only
    degrees and vanishing are contractual)."""
    if not classes:
        raise DimensionMismatchError("need at least one class")
    g = classes[0].genus
    if len(classes) != g:
        raise DimensionMismatchError(
            f"need exactly g = {g} classes, got {len(classes)}"
        )
    for c in classes:
        if c.genus != g:
            raise DimensionMismatchError("genus mismatch among classes")
    return _top_wedge(
        [c.items() for c in classes], g, UniPoly.zero("n"),
        UniPoly.constant(1, "n"),
    )


def wedge_coefficient(forms: Sequence[TwoForm]) -> Fraction:
    """Top wedge coefficient of g constant 2-forms on a genus-g space."""
    if not forms:
        raise DimensionMismatchError("need at least one form")
    g = forms[0].genus
    if len(forms) != g:
        raise DimensionMismatchError(f"need exactly g = {g} forms")
    for f in forms:
        if f.genus != g:
            raise DimensionMismatchError("genus mismatch among forms")
    return _top_wedge([f.items() for f in forms], g, Fraction(0), Fraction(1))


@dataclass(frozen=True)
class ModelGrowthResult:
    """Degree of the g-fold self-intersection of Delta_n, with the
    profile-side value it is compared against."""

    degree: int
    poly: UniPoly
    profile_plov: int
    matches_profile: bool


def plov_via_model(m: RatMatrix, h: TwoForm) -> ModelGrowthResult:
    """Volume growth read off the model: the degree in n of the g-fold
    wedge of Delta_n.  Always at most the profile value sum k_i^2; whether
    equality holds depends on the chosen form and is reported as a flag,
    not asserted."""
    profile = unipotent_block_profile(m)
    if not pseudo_analytic_check(profile):
        raise NotPseudoAnalyticError(
            "model growth needs a conjugate-splitting block profile"
        )
    expected = plov_of(half_profile(profile))
    delta = delta_n(m, h)
    poly = intersection_poly([delta] * h.genus)
    if poly.is_zero():
        raise DegenerateFormError(
            "top self-intersection of Delta_n is identically zero"
        )
    degree = int(poly.degree())
    if degree > expected:
        raise CrossCheckError(
            f"model degree {degree} exceeds profile bound {expected}"
        )
    return ModelGrowthResult(
        degree=degree,
        poly=poly,
        profile_plov=expected,
        matches_profile=degree == expected,
    )


@dataclass(frozen=True)
class VanishingScanReport:
    """Scan of the products N^{i_1} H ^ ... ^ N^{i_g} H over the tuples
    whose index sum exceeds g*kf/2.

    ``scanned`` lists (tuple, value) pairs in lexicographic order;
    ``violations`` collects the tuples with a nonzero value (expected
    empty)."""

    genus: int
    kf: int
    scanned: tuple[tuple[tuple[int, ...], Fraction], ...]
    violations: tuple[tuple[int, ...], ...]


def vanishing_scan(m: RatMatrix, h: TwoForm) -> VanishingScanReport:
    """Evaluate every product N^{i_1}H ^ ... ^ N^{i_g}H with all
    0 <= i_j <= kf and record the tuples above the strict threshold
    sum i_j > g*kf/2 together with their (expected zero) values."""
    chain = nilpotent_chain(m, h)
    kf = len(chain) - 1
    g = h.genus
    scanned = []
    violations = []
    for combo in itertools.product(range(kf + 1), repeat=g):
        if 2 * sum(combo) <= g * kf:
            continue
        value = wedge_coefficient([chain[i] for i in combo])
        scanned.append((combo, value))
        if value != 0:
            violations.append(combo)
    return VanishingScanReport(
        genus=g,
        kf=kf,
        scanned=tuple(scanned),
        violations=tuple(violations),
    )
