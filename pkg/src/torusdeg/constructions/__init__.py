"""Explicit polynomial constructions."""

from .acc import AccCertificate, acc_lift
from .amplifier import amplifier_coefficients, modulus_amplifier
from .delta import DeltaParameters, delta_construction, delta_parameters, prime_count, residue_indicator
from .distribution import (
    PolynomialDistribution,
    compose_distribution,
    default_sample_count,
    force_boolean_range,
    max_disagreement,
    sample_counts,
)
from .lift import (
    LiftParameters,
    lift_degree_bound,
    lift_field_polynomial,
    lift_parameters,
    lift_weight_polynomial,
    weight_polynomial_to_field,
)
from .majority import majority_padding, majority_to_delta, majority_to_threshold
from .nonclassical import binary_digits, nonclassical_round, rounding_error_bound

__all__ = [
    "AccCertificate", "acc_lift", "amplifier_coefficients", "modulus_amplifier",
    "DeltaParameters", "delta_construction", "delta_parameters", "prime_count", "residue_indicator",
    "PolynomialDistribution", "compose_distribution", "default_sample_count", "force_boolean_range",
    "max_disagreement", "sample_counts", "LiftParameters", "lift_degree_bound", "lift_field_polynomial",
    "lift_parameters", "lift_weight_polynomial", "weight_polynomial_to_field", "majority_padding",
    "majority_to_delta", "majority_to_threshold", "binary_digits", "nonclassical_round",
    "rounding_error_bound",
]
