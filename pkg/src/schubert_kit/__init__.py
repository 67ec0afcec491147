"""Exact Schubert calculus for Kac-Moody flag varieties.

Arbitrary-precision integer, rational and prime-field arithmetic
throughout; nothing here ever touches floating point.
"""

from .errors import (
    DiagonalNotTwo,
    GCMValidationError,
    InexactDivision,
    NonIntegral,
    NotHomogeneous,
    NotHyperbolicOrAffine,
    NotInGroup,
    NotReduced,
    NotSpherical,
    OddPrimeRequired,
    PositiveOffDiagonal,
    SchubertKitError,
    TheoremViolation,
    UnderdeterminedSystem,
    ZeroAsymmetry,
    ZeroElement,
)
from .gcm import (
    GeneralizedCartanMatrix,
    Realization,
    SphericalPoset,
    coxeter_exponent,
    derived_realization,
    gcm_from_dict,
    gcm_from_file,
    is_finite_type,
    parse_gcm,
    rank_two,
    spherical_poset,
    standard_realization,
    validate_gcm,
)
from .poincare import PoincareSeries
from .polyring import GradedPolynomial, InvariantsReport, WeightRing
from .rings import GF, QQ, ZZ, parse_ring
from .schubert import (
    SchubertVector,
    TensorVector,
    l_functional,
    nil_a,
    nil_aw,
    parabolic_basis,
    peterson_coproduct,
)
from .weyl import (
    WeylElement,
    bruhat_leq,
    enumerate_by_length,
    from_word,
    identity_element,
    length_and_word,
    longest_element,
    min_coset_reps,
    multiply,
    simple_reflection,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "ZZ",
    "DiagonalNotTwo",
    "GCMValidationError",
    "GeneralizedCartanMatrix",
    "GradedPolynomial",
    "InexactDivision",
    "InvariantsReport",
    "NonIntegral",
    "NotHomogeneous",
    "NotHyperbolicOrAffine",
    "NotInGroup",
    "NotReduced",
    "NotSpherical",
    "OddPrimeRequired",
    "PoincareSeries",
    "PositiveOffDiagonal",
    "Realization",
    "SchubertKitError",
    "SchubertVector",
    "SphericalPoset",
    "TensorVector",
    "TheoremViolation",
    "UnderdeterminedSystem",
    "WeightRing",
    "WeylElement",
    "ZeroAsymmetry",
    "ZeroElement",
    "bruhat_leq",
    "coxeter_exponent",
    "derived_realization",
    "enumerate_by_length",
    "from_word",
    "gcm_from_dict",
    "gcm_from_file",
    "identity_element",
    "is_finite_type",
    "l_functional",
    "length_and_word",
    "longest_element",
    "min_coset_reps",
    "multiply",
    "nil_a",
    "nil_aw",
    "parabolic_basis",
    "parse_gcm",
    "parse_ring",
    "peterson_coproduct",
    "rank_two",
    "simple_reflection",
    "spherical_poset",
    "standard_realization",
    "validate_gcm",
]
