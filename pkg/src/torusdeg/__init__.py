"""Torus-polynomial approximations of Boolean functions, in exact arithmetic."""

from .approx import approx_error, sup_distance
from .boolean import (
    BooleanFunction,
    SymmetricProfile,
    and_function,
    constant,
    delta,
    delta_at_least,
    majority,
    parity,
)
from .errors import (
    CertificateViolation,
    DimensionMismatch,
    MalformedInput,
    NotFoundWithin,
    SamplingFailed,
    SizeLimitExceeded,
    TorusDegError,
)
from .polynomials import (
    FieldPolynomial,
    IntegerPolynomial,
    MultilinearTorusPolynomial,
    NonclassicalPolynomial,
    SymmetricTorusPolynomial,
    multilinearize,
    symmetric_to_multilinear,
)
from .primes import first_primes, is_prime, sieve
from .torus import TorusValue, iota, torus_norm, torus_reduce

__version__ = "0.1.0"

__all__ = [
    "approx_error", "sup_distance", "BooleanFunction", "SymmetricProfile", "and_function", "constant",
    "delta", "delta_at_least", "majority", "parity", "CertificateViolation", "DimensionMismatch",
    "MalformedInput", "NotFoundWithin", "SamplingFailed", "SizeLimitExceeded", "TorusDegError",
    "FieldPolynomial", "IntegerPolynomial", "MultilinearTorusPolynomial", "NonclassicalPolynomial",
    "SymmetricTorusPolynomial", "multilinearize", "symmetric_to_multilinear", "first_primes", "is_prime",
    "sieve", "TorusValue", "iota", "torus_norm", "torus_reduce",
]
