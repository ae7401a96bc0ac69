"""Exact dynamical invariants of quasi-unipotent rational matrices.

plovkit decides quasi-unipotency by cyclotomic factorization, extracts
exact Jordan profiles by rank sequences, computes polynomial volume
growth (sum of squared half-profile block sizes), growth exponents of
compound actions, determinants of power sums, and an exterior-algebra
model of intersection numbers -- all over Q, with independent brute-force
oracles alongside the symbolic routes.
"""

from .errors import (
    CrossCheckError,
    DegenerateFormError,
    DimensionMismatchError,
    InputFormatError,
    NotPseudoAnalyticError,
    NotQuasiUnipotentError,
    NotSymmetricPositiveDefiniteError,
    NotUnipotentError,
    OddDimensionError,
    PlovkitError,
    PreconditionError,
)
from .exact import (
    NEG_INF,
    PolyMatrix,
    RatMatrix,
    Rational,
    UniPoly,
    binom_poly,
    char_poly,
    compound_matrix,
    det_exact,
    det_poly,
    discrete_sum,
    lagrange_interpolate,
    mat_mul,
    mat_pow,
    poly_at_matrix,
    rank_exact,
)
from .cyclotomic import (
    QuasiUnipotencyVerdict,
    cyclotomic_poly,
    euler_phi,
    is_unipotent,
    quasi_unipotency,
    unipotent_power,
)
from .jordan import (
    HalfProfile,
    JordanProfile,
    double_profile,
    half_profile,
    jordan_profile,
    pseudo_analytic_check,
    unipotent_block_profile,
)
from .plov import (
    AnalysisReport,
    BoundCheck,
    analyze,
    growth_exponent,
    growth_exponent_by_minors,
    max_block_compound2,
    plov_of,
    symbolic_unipotent_power,
)
from .powersum import (
    PowerSumResult,
    ensure_spd,
    hilbert_det,
    hilbert_matrix,
    power_sum_brute,
    power_sum_det,
    power_sum_matrix,
    single_block_leading_coeff,
)
from .cohomology import (
    ModelGrowthResult,
    TwoForm,
    TwoFormPoly,
    VanishingScanReport,
    delta_n,
    intersection_poly,
    plov_via_model,
    pullback2,
    vanishing_scan,
    wedge_coefficient,
)

__version__ = "0.1.0"
