"""Flat complete strictly causal Lorentzian manifolds with unipotent
holonomy, classified through matrix parabolas in the positive-definite
cone.

The library builds manifold data from frame parameters, extracts the
characteristic parabola Q(s) = A + 2sB + s^2 C of squared loop lengths,
decides which parabolas arise this way, reconstructs manifold data from
valid parabolas, and tests (almost) causal isometry through congruence
certificates and spectral invariants.
"""

from .charpoly import (
    MatrixParabola,
    ReductionResult,
    SchurResult,
    char_polynomial,
    check_positive_all_s,
    is_characteristic,
    q_direct,
    reduce_degenerate,
    schur_condition,
)
from .classify import (
    AffineSpectrum,
    AlmostVerdict,
    EquivalenceCertificate,
    SimpleSpectrumForm,
    affine_spectrum,
    almost_equivalent,
    apply_certificate,
    identity_certificate,
    realize,
    reparametrize,
    search_certificate,
    simple_spectrum_form,
    verify_equivalence,
)
from .construction import (
    ManifoldData,
    Signature,
    a_vector,
    build,
    check_free,
    euclidean_factor_dim,
    example_4d,
    example_5d,
    gamma_apply,
    lambda_of,
    recover_a_from_holonomy,
    signature_of,
    tau_of,
)
from .errors import (
    BadCertificate,
    CausalCurvesError,
    ConvergenceFailure,
    CSingular,
    DegenerateK,
    DimensionMismatch,
    FreenessViolated,
    InconsistentHolonomy,
    InvalidCharacteristic,
    NotCharacteristic,
    NotDegenerate,
    NotPositiveDefinite,
    NotPSD,
    NotSimpleSpectrum,
    NotSymmetric,
    RankDeficientR,
    SignatureInconsistent,
    SingularA,
    UnsupportedDimension,
    ZeroParameter,
    ZeroPolynomial,
)
from .minkowski import LorentzFrame
from .symmat import (
    DEFAULT_TOL,
    EigenDecomposition,
    congruence,
    det_poly,
    is_pd,
    is_psd,
    psd_sqrt,
    rank_tol,
    real_root_count,
    real_roots,
    sym_eig,
    symmetrize,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSpectrum",
    "AlmostVerdict",
    "BadCertificate",
    "CausalCurvesError",
    "ConvergenceFailure",
    "CSingular",
    "DEFAULT_TOL",
    "DegenerateK",
    "DimensionMismatch",
    "EigenDecomposition",
    "EquivalenceCertificate",
    "FreenessViolated",
    "InconsistentHolonomy",
    "InvalidCharacteristic",
    "LorentzFrame",
    "ManifoldData",
    "MatrixParabola",
    "NotCharacteristic",
    "NotDegenerate",
    "NotPositiveDefinite",
    "NotPSD",
    "NotSimpleSpectrum",
    "NotSymmetric",
    "RankDeficientR",
    "ReductionResult",
    "SchurResult",
    "Signature",
    "SignatureInconsistent",
    "SimpleSpectrumForm",
    "SingularA",
    "UnsupportedDimension",
    "ZeroParameter",
    "ZeroPolynomial",
    "a_vector",
    "affine_spectrum",
    "almost_equivalent",
    "apply_certificate",
    "build",
    "char_polynomial",
    "check_free",
    "check_positive_all_s",
    "congruence",
    "det_poly",
    "euclidean_factor_dim",
    "example_4d",
    "example_5d",
    "gamma_apply",
    "identity_certificate",
    "is_characteristic",
    "is_pd",
    "is_psd",
    "lambda_of",
    "psd_sqrt",
    "q_direct",
    "rank_tol",
    "real_root_count",
    "real_roots",
    "realize",
    "recover_a_from_holonomy",
    "reduce_degenerate",
    "reparametrize",
    "schur_condition",
    "search_certificate",
    "signature_of",
    "simple_spectrum_form",
    "sym_eig",
    "symmetrize",
    "tau_of",
    "verify_equivalence",
]
