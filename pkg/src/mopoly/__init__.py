"""Classical multiple orthogonal polynomials on steplines.

Seven families (Jacobi-Pineiro, both multiple Laguerre variants, multiple
Hermite, Jacobi-Angelesco, Jacobi-Laguerre, Laguerre-Hermite), each with
closed-form recurrence coefficients, explicit expansions where available,
zeros via banded Hessenberg eigenvalues, orthogonality certificates, and
simultaneous Gauss quadrature, cross-checked against a moment-system
oracle in exact or extended arithmetic.
"""

from .core import (
    EXTENDED_DPS,
    SCALAR_KINDS,
    DegenerateSystem,
    EigenFailure,
    IllConditionedVandermonde,
    JacobiAngelesco,
    JacobiLaguerre,
    JacobiPineiro,
    LaguerreHermite,
    MonicPolynomial,
    MopolyError,
    MultiIndex,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    NonIntegrable,
    ParameterOutOfRange,
    ScalarKindMismatch,
    SingularMomentMatrix,
    SpuriousComplexPair,
    UnsupportedFamily,
    UnsupportedMultiplicity,
    UnsupportedWeightShape,
    make_monic,
    stepline_index,
    validate,
)
from .quadrature import (
    QuadratureRule,
    WeightDescriptor,
    gauss_rule,
    moment,
    normalized_moments,
    oracle_polynomial,
    orthogonality_residuals,
    simultaneous_rule,
    weights_of,
)
from .recurrence import (
    AsymptoticLimits,
    BandedHessenberg,
    critical_points,
    asymptotic_coeffs,
    hessenberg,
    stepline_coeffs,
    x_moment_ratio,
)
from .construct import (
    LIMIT_KINDS,
    SubleadingCoefficients,
    classical_hermite,
    classical_jacobi,
    classical_laguerre,
    jacobi_angelesco_explicit,
    jacobi_angelesco_offdiagonal,
    jacobi_laguerre_explicit,
    jacobi_pineiro_explicit,
    limit_check,
    polynomial_via_recurrence,
    raising_apply,
    subleading_coefficients,
)
from .spectra import ZeroReport, zero_location_check, zeros

__version__ = "0.1.0"

__all__ = [
    "EXTENDED_DPS",
    "SCALAR_KINDS",
    "MopolyError",
    "ParameterOutOfRange",
    "DegenerateSystem",
    "ScalarKindMismatch",
    "UnsupportedMultiplicity",
    "UnsupportedFamily",
    "SingularMomentMatrix",
    "EigenFailure",
    "SpuriousComplexPair",
    "NonIntegrable",
    "UnsupportedWeightShape",
    "IllConditionedVandermonde",
    "MultiIndex",
    "stepline_index",
    "JacobiPineiro",
    "MultipleLaguerreFirst",
    "MultipleLaguerreSecond",
    "MultipleHermite",
    "JacobiAngelesco",
    "JacobiLaguerre",
    "LaguerreHermite",
    "validate",
    "MonicPolynomial",
    "make_monic",
    "WeightDescriptor",
    "weights_of",
    "moment",
    "normalized_moments",
    "QuadratureRule",
    "gauss_rule",
    "oracle_polynomial",
    "orthogonality_residuals",
    "simultaneous_rule",
    "AsymptoticLimits",
    "BandedHessenberg",
    "critical_points",
    "stepline_coeffs",
    "asymptotic_coeffs",
    "x_moment_ratio",
    "hessenberg",
    "polynomial_via_recurrence",
    "classical_jacobi",
    "classical_laguerre",
    "classical_hermite",
    "jacobi_pineiro_explicit",
    "jacobi_angelesco_explicit",
    "jacobi_angelesco_offdiagonal",
    "jacobi_laguerre_explicit",
    "SubleadingCoefficients",
    "subleading_coefficients",
    "raising_apply",
    "LIMIT_KINDS",
    "limit_check",
    "ZeroReport",
    "zeros",
    "zero_location_check",
]
