"""Exact approximation-degree oracle and the counting machinery."""

from .fm import fm_solve
from .lp import ExactLP
from .search import (
    MULTILINEAR,
    SYMMETRIC,
    ApproximationProblem,
    DegreeCertificate,
    FeasibilityWitness,
    Infeasible,
    OracleLimits,
    exact_degree,
    feasibility,
    verify_witness,
    witness_polynomial,
)
from .snapping import (
    SnappedPolynomial,
    approximated_functions,
    counting_lower_bound,
    snap_coefficients,
    snapping_error_bound,
    snapping_precision,
)

__all__ = [
    "fm_solve", "ExactLP", "MULTILINEAR", "SYMMETRIC", "ApproximationProblem", "DegreeCertificate",
    "FeasibilityWitness", "Infeasible", "OracleLimits", "exact_degree", "feasibility", "verify_witness",
    "witness_polynomial", "SnappedPolynomial", "approximated_functions", "counting_lower_bound",
    "snap_coefficients", "snapping_error_bound", "snapping_precision",
]
