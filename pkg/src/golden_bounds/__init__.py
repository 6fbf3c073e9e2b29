"""Reverse eigenvalue and norm bounds for matrix geometric means.

The package evaluates the scalar constants (Specht ratio, generalized
Kantorovich constant, exponential reverse factors) that cap how far a
weighted matrix geometric mean can overshoot its exponential counterpart,
and certifies the corresponding matrix inequalities on seeded random
instances at desk scale.
"""

from .certify import (
    CSV_HEADER,
    INEQUALITY_IDS,
    ConvergenceRow,
    InequalityReport,
    SweepResult,
    certify_bounded_eigen_power,
    certify_bounded_power_low,
    certify_bounded_pq,
    certify_fm_eigen_power,
    certify_fm_power_low,
    certify_fm_pq,
    certify_forward_ando_hiai,
    certify_forward_gt_trace,
    certify_forward_mean_norm,
    certify_gt_bounded_specht,
    certify_gt_fm,
    certify_gt_kantorovich,
    certify_gt_kantorovich_bounded,
    certify_gt_kantorovich_squared,
    certify_gt_specht,
    certify_gt_specht_norm,
    certify_gt_specht_norm_squared,
    certify_kantorovich_matrix,
    certify_specht_eigen_power,
    certify_specht_power_low,
    certify_specht_pq,
    compare_constants_remark,
    compare_seo_constants,
    compare_specht_vs_fm,
    convergence_study,
    run_instances,
    specht_fm_sign_scan,
)
from .constants import (
    ConstantEval,
    evaluate_constant,
    fm_factor,
    kantorovich,
    kantorovich_limit_root,
    kantorovich_lower_bound,
    scalar_specht_amgm_check,
    specht,
    specht_p_root,
)
from .errors import (
    BadGridError,
    BadIndexError,
    BadRangeError,
    CondError,
    DimMismatchError,
    DomainError,
    EmptySequenceError,
    GoldenBoundsError,
    HypothesisViolatedError,
    NoConvergenceError,
    NonPositiveError,
    NonSquareError,
    NotHermitianError,
)
from .linalg import (
    HermitianMatrix,
    PositiveDefiniteMatrix,
    SpectralDecomposition,
    apply_function,
    commutator_norm,
    common_eigenbasis,
    congruence,
    eigenvalues_desc,
    exp_h,
    frobenius_distance,
    identity_pd,
    inv_sqrt_congruence,
    ky_fan_norm,
    log_pd,
    make_hermitian,
    matrix_from_json,
    matrix_to_json,
    power,
    schatten_norm,
    singular_values_desc,
    spectral_decompose,
    trace,
)
from .means import (
    MeanParams,
    geometric_mean,
    limit_probe,
    log_euclidean,
    mean_power,
)
from .orders import (
    OrderCertificate,
    loewner_leq,
    log_majorizes,
    olson_leq,
    sandwich_bounds,
    weak_log_majorizes,
)
from .sampling import (
    SamplerConfig,
    bounded_hermitian_pair,
    olson_exponential_pair,
    olson_sandwich_pair,
    ordered_chain_pair,
    ordered_exponential_chain_pair,
    philox_generator,
    random_bounded_hermitian,
    random_isometry,
    random_pd,
    random_pd_pair,
    sandwich_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BadGridError",
    "BadIndexError",
    "BadRangeError",
    "CSV_HEADER",
    "CondError",
    "ConstantEval",
    "ConvergenceRow",
    "DimMismatchError",
    "DomainError",
    "EmptySequenceError",
    "GoldenBoundsError",
    "HermitianMatrix",
    "HypothesisViolatedError",
    "INEQUALITY_IDS",
    "InequalityReport",
    "MeanParams",
    "NoConvergenceError",
    "NonPositiveError",
    "NonSquareError",
    "NotHermitianError",
    "OrderCertificate",
    "PositiveDefiniteMatrix",
    "SamplerConfig",
    "SpectralDecomposition",
    "SweepResult",
    "apply_function",
    "bounded_hermitian_pair",
    "certify_bounded_eigen_power",
    "certify_bounded_power_low",
    "certify_bounded_pq",
    "certify_fm_eigen_power",
    "certify_fm_power_low",
    "certify_fm_pq",
    "certify_forward_ando_hiai",
    "certify_forward_gt_trace",
    "certify_forward_mean_norm",
    "certify_gt_bounded_specht",
    "certify_gt_fm",
    "certify_gt_kantorovich",
    "certify_gt_kantorovich_bounded",
    "certify_gt_kantorovich_squared",
    "certify_gt_specht",
    "certify_gt_specht_norm",
    "certify_gt_specht_norm_squared",
    "certify_kantorovich_matrix",
    "certify_specht_eigen_power",
    "certify_specht_power_low",
    "certify_specht_pq",
    "commutator_norm",
    "common_eigenbasis",
    "compare_constants_remark",
    "compare_seo_constants",
    "compare_specht_vs_fm",
    "congruence",
    "convergence_study",
    "eigenvalues_desc",
    "evaluate_constant",
    "exp_h",
    "fm_factor",
    "frobenius_distance",
    "geometric_mean",
    "identity_pd",
    "inv_sqrt_congruence",
    "kantorovich",
    "kantorovich_limit_root",
    "kantorovich_lower_bound",
    "ky_fan_norm",
    "limit_probe",
    "loewner_leq",
    "log_euclidean",
    "log_majorizes",
    "log_pd",
    "make_hermitian",
    "matrix_from_json",
    "matrix_to_json",
    "mean_power",
    "olson_exponential_pair",
    "olson_leq",
    "olson_sandwich_pair",
    "ordered_chain_pair",
    "ordered_exponential_chain_pair",
    "philox_generator",
    "power",
    "random_bounded_hermitian",
    "random_isometry",
    "random_pd",
    "random_pd_pair",
    "run_instances",
    "sandwich_bounds",
    "sandwich_pair",
    "scalar_specht_amgm_check",
    "schatten_norm",
    "singular_values_desc",
    "spectral_decompose",
    "specht",
    "specht_fm_sign_scan",
    "specht_p_root",
    "trace",
    "weak_log_majorizes",
]
