"""Rate alternatives from pairwise comparison matrices.

Comparison data on a multiplicative (ratio) or additive (difference) scale
is approximated by the nearest rank-one reciprocal matrix in the
max-algebra sense; the approximating vectors are the scores.  The package
also provides a two-level scheme that derives criteria weights from their
own comparison matrix.
"""

from .ahp import (
    AhpProblem,
    RatingReport,
    build_report,
    derive_weights,
    normalize_scores,
    rank_scores,
    run_ahp,
)
from .linalg import (
    SpectralResult,
    TropicalMatrix,
    conj_transpose,
    eigenspace_generators,
    is_in_span,
    kleene_star,
    mat_add,
    mat_distance,
    mat_mul,
    reduce_generators,
    scalar_mul,
    spectral_radius,
    spectral_radius_trace,
    trace,
    vec_distance,
)
from .semifield import (
    DEFAULT_TOL,
    Scale,
    TropicalScalar,
    inv,
    isclose,
    leq,
    oplus,
    otimes,
    rpow,
)
from .solver import (
    ConsistencyReport,
    SolveResult,
    UnsolvableError,
    check_matrix,
    is_reciprocal_matrix,
    solve_multi,
    solve_single,
    solve_weighted,
)

__version__ = "0.1.0"

__all__ = [
    "AhpProblem",
    "ConsistencyReport",
    "DEFAULT_TOL",
    "RatingReport",
    "Scale",
    "SolveResult",
    "SpectralResult",
    "TropicalMatrix",
    "TropicalScalar",
    "UnsolvableError",
    "build_report",
    "check_matrix",
    "conj_transpose",
    "derive_weights",
    "eigenspace_generators",
    "inv",
    "is_in_span",
    "is_reciprocal_matrix",
    "isclose",
    "kleene_star",
    "leq",
    "mat_add",
    "mat_distance",
    "mat_mul",
    "normalize_scores",
    "oplus",
    "otimes",
    "rank_scores",
    "reduce_generators",
    "rpow",
    "run_ahp",
    "scalar_mul",
    "solve_multi",
    "solve_single",
    "solve_weighted",
    "spectral_radius",
    "spectral_radius_trace",
    "trace",
    "vec_distance",
]
