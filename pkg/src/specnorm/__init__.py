"""Spectral norms and entanglement of symmetric qubit states.

A symmetric d-qubit state is stored as its d+1 distinct entries s_0..s_d.
The package computes the complex and real spectral norms by reducing the
anti-fixed-point equation to a single univariate root-finding problem,
classifies the exceptional family where that reduction degenerates, and
derives the geometric entanglement measure from the norm.  An independent
alternating-maximization oracle provides certified lower bounds for
cross-checking.

Entry points: :func:`make_state` builds states, :func:`spectral_norm` is the
main computation, :func:`eta` / :func:`eta_rel` the entanglement measures,
:func:`oracle_max` the independent check.  The ``specnorm`` CLI wraps these.
"""

from .errors import (
    SpecnormError,
    InputError,
    ComputationError,
    DidNotConverge,
    InternalInconsistency,
    ClassificationFailure,
    BracketNotReached,
)
from .states import (
    QubitState,
    UnitVector2,
    make_state,
    binomial_weights,
    hs_norm,
    normalize,
    apply_unitary,
    eval_form,
    random_state,
)
from .polynomials import DensePolynomial, RootSet, roots_all, resultant
from .engine import (
    INFINITY_ROOT,
    PqPair,
    UvPair,
    CandidateRoot,
    SpectralResult,
    Census,
    build_pq,
    build_uv,
    fixed_point_polynomial,
    exceptionality,
    candidate_roots,
    witness,
    spectral_norm,
    is_nonsingular,
    anti_eigen_census,
)
from .exceptional import (
    ExceptionalClass,
    detect_exceptional,
    norm_monomial,
    two_root_state,
    two_root_reference_state,
    perturbed_two_root_state,
)
from .measures import (
    eta,
    eta_rel,
    standard_basis_state,
    standard_basis_sigma,
    balanced_index,
    EtaBounds,
    eta_sym_bounds,
)
from .oracle import OracleConfig, oracle_max, real_angle_grid_max

__version__ = "0.1.0"

__all__ = [
    "SpecnormError",
    "InputError",
    "ComputationError",
    "DidNotConverge",
    "InternalInconsistency",
    "ClassificationFailure",
    "BracketNotReached",
    "QubitState",
    "UnitVector2",
    "make_state",
    "binomial_weights",
    "hs_norm",
    "normalize",
    "apply_unitary",
    "eval_form",
    "random_state",
    "DensePolynomial",
    "RootSet",
    "roots_all",
    "resultant",
    "INFINITY_ROOT",
    "PqPair",
    "UvPair",
    "CandidateRoot",
    "SpectralResult",
    "Census",
    "build_pq",
    "build_uv",
    "fixed_point_polynomial",
    "exceptionality",
    "candidate_roots",
    "witness",
    "spectral_norm",
    "is_nonsingular",
    "anti_eigen_census",
    "ExceptionalClass",
    "detect_exceptional",
    "norm_monomial",
    "two_root_state",
    "two_root_reference_state",
    "perturbed_two_root_state",
    "eta",
    "eta_rel",
    "standard_basis_state",
    "standard_basis_sigma",
    "balanced_index",
    "EtaBounds",
    "eta_sym_bounds",
    "OracleConfig",
    "oracle_max",
    "real_angle_grid_max",
    "__version__",
]
