import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import profiles
from torusdeg.approx import approx_error, sup_distance
from torusdeg.boolean import BooleanFunction, SymmetricProfile, constant, delta, majority, parity
from torusdeg.constructions import delta_construction
from torusdeg.errors import NotFoundWithin, SizeLimitExceeded
from torusdeg.oracle import (
    MULTILINEAR,
    SYMMETRIC,
    ApproximationProblem,
    ExactLP,
    FeasibilityWitness,
    OracleLimits,
    SnappedPolynomial,
    approximated_functions,
    counting_lower_bound,
    exact_degree,
    feasibility,
    fm_solve,
    snap_coefficients,
    snapping_error_bound,
    snapping_precision,
    verify_witness,
    witness_polynomial,
)
from torusdeg.polynomials import SymmetricTorusPolynomial, symmetric_to_multilinear

HALF = Fraction(1, 2)


# -- exact linear algebra ----------------------------------------------------------


def _random_box_system(rng, nv, m):
    A = [[rng.randint(-3, 3) for _ in range(nv)] for _ in range(m)]
    b = [rng.randint(-3, 4) for _ in range(m)]
    for j in range(nv):
        e = [0] * nv
        e[j] = 1
        A.append(e)
        b.append(2)
        A.append([-v for v in e])
        b.append(0)
    return A, b


def _satisfies(A, b, x):
    return all(sum(Fraction(a) * xi for a, xi in zip(row, x)) <= bi for row, bi in zip(A, b))


def test_lp_small():
    lp = ExactLP([[1, 1], [-1, 0]], [4, -1])
    assert lp.feasible
    value, x = lp.maximize([1, 2])
    assert value == 7 and x == [1, 3]
    lo, _ = lp.minimize([1, 0])
    assert lo == 1
    assert not ExactLP([[1], [-1]], [1, -2]).feasible


def test_fm_small():
    assert fm_solve([[1, 1], [-1, 0], [0, -1]], [1, -Fraction(1, 2), -Fraction(1, 2)]) == [HALF, HALF]
    assert fm_solve([[1], [-1]], [1, -2]) is None


def test_fm_and_simplex_agree_on_random_systems():
    rng = random.Random(11)
    for _ in range(400):
        nv, m = rng.randint(1, 4), rng.randint(1, 7)
        A, b = _random_box_system(rng, nv, m)
        x = fm_solve(A, b, nv)
        lp = ExactLP(A, b, nv)
        assert (x is not None) == lp.feasible
        if x is not None:
            assert _satisfies(A, b, x)
            assert _satisfies(A, b, lp.point)


# -- problems and witnesses ---------------------------------------------------------


def test_problem_validation():
    f = BooleanFunction.from_values(2, [0, 1, 0, 0])
    with pytest.raises(ValueError):
        ApproximationProblem(f, 0, 1, basis=SYMMETRIC)
    with pytest.raises(ValueError):
        ApproximationProblem(parity(2), -1, 1)
    with pytest.raises(ValueError):
        ApproximationProblem(parity(2), 0, 1, alpha=2)
    # symmetric tables are accepted and converted
    assert ApproximationProblem(parity(3).to_function(), 0, 1).target == parity(3)


def test_limits():
    with pytest.raises(SizeLimitExceeded):
        feasibility(ApproximationProblem(parity(17), 0, 1))
    with pytest.raises(SizeLimitExceeded):
        feasibility(ApproximationProblem(parity(5), 0, 1, basis=MULTILINEAR))
    with pytest.raises(SizeLimitExceeded):
        feasibility(ApproximationProblem(delta(10, 5), Fraction(1, 40), 4), OracleLimits(max_nodes=5))
    small = OracleLimits(max_symmetric_n=4)
    with pytest.raises(SizeLimitExceeded):
        exact_degree(parity(5), 0, limits=small)


def test_trivial_eps():
    w = feasibility(ApproximationProblem(majority(9), HALF, 0))
    assert w.feasible and w.coefficients == (0,)


def test_parity_exact():
    w = feasibility(ApproximationProblem(parity(6), 0, 1))
    assert w.feasible
    assert w.coefficients == (0, HALF)


def test_delta_three_needs_degree_three():
    problem = ApproximationProblem(delta(3, 3), 0, 2, basis=MULTILINEAR)
    for solver in ("simplex", "fm"):
        result = feasibility(problem, solver=solver)
        assert not result.feasible
        assert result.degree == 2 and result.branches > 0


def test_exact_degree_examples():
    assert exact_degree(constant(5, 0), Fraction(1, 10)).d_min == 0
    for eps in (0, Fraction(1, 10)):
        assert exact_degree(parity(7), eps).d_min <= 1
    cert = exact_degree(delta(3, 3), 0, basis=MULTILINEAR)
    assert cert.d_min == 3
    P = cert.polynomial()
    assert approx_error(P, delta(3, 3)) == 0
    with pytest.raises(NotFoundWithin):
        exact_degree(delta(3, 3), 0, basis=MULTILINEAR, d_max=2)


def test_known_symmetric_degrees():
    assert exact_degree(majority(7), Fraction(1, 10)).d_min == 3
    assert exact_degree(majority(7), 0).d_min == 4
    assert exact_degree(delta(8, 3), Fraction(1, 10)).d_min == 3


def test_verify_witness_rejects_tampering():
    problem = ApproximationProblem(parity(4), 0, 1)
    w = feasibility(problem)
    assert verify_witness(problem, w)
    bad = FeasibilityWitness((0, Fraction(1, 3)), w.offsets)
    assert not verify_witness(problem, bad)
    assert not verify_witness(problem, FeasibilityWitness(w.coefficients, w.offsets[:-1]))


def test_solvers_agree():
    rng = random.Random(5)
    for _ in range(12):
        n = rng.randint(1, 6)
        b = SymmetricProfile(n, tuple(rng.randint(0, 1) for _ in range(n + 1)))
        eps = rng.choice([0, Fraction(1, 10), Fraction(1, 5)])
        d = rng.randint(0, min(n, 2))
        a = feasibility(ApproximationProblem(b, eps, d), solver="simplex")
        c = feasibility(ApproximationProblem(b, eps, d), solver="fm")
        assert a.feasible == c.feasible


def test_parallel_search_matches_serial():
    problem = ApproximationProblem(majority(7), Fraction(1, 10), 3)
    serial = feasibility(problem, workers=1)
    parallel = feasibility(problem, workers=2)
    assert serial.feasible and parallel.feasible
    assert serial.coefficients == parallel.coefficients
    problem = ApproximationProblem(majority(7), Fraction(1, 10), 2)
    assert not feasibility(problem, workers=2).feasible


@settings(max_examples=15)
@given(profiles(max_n=5), st.sampled_from([0, Fraction(1, 8), Fraction(1, 5)]))
def test_monotone_and_cross_validated(b, eps):
    limits = OracleLimits(max_symmetric_d=5)
    cert = exact_degree(b, eps, limits=limits)
    d = cert.d_min
    assert verify_witness(cert.problem, cert.witness)
    if cert.infeasibility is not None:
        assert cert.infeasibility.degree == d - 1
    # feasible at d implies feasible at d + 1 and at larger eps
    if d < b.n:
        assert feasibility(ApproximationProblem(b, eps, d + 1), limits).feasible
    assert feasibility(ApproximationProblem(b, eps + Fraction(1, 10), d), limits).feasible
    # a symmetric witness is also a multilinear one
    P = symmetric_to_multilinear(cert.polynomial())
    assert approx_error(P, b.to_function()) <= eps
    if b.n <= 4 and d <= 3:
        assert feasibility(ApproximationProblem(b, eps, d, basis=MULTILINEAR)).feasible


def test_generalized_alpha():
    b = delta(4, 2)
    cert = exact_degree(b, Fraction(1, 10), alpha=Fraction(1, 3))
    assert approx_error(cert.polynomial(), b, Fraction(1, 3)) <= Fraction(1, 10)


def test_oracle_below_construction_degree():
    for n in range(2, 8):
        for w in range(n + 1):
            eps = Fraction(1, 10)
            assert exact_degree(delta(n, w), eps).d_min <= delta_construction(n, w, eps).degree


def test_witness_polynomial_multilinear():
    problem = ApproximationProblem(delta(2, 2), 0, 2, basis=MULTILINEAR)
    w = feasibility(problem)
    P = witness_polynomial(problem, w)
    assert P.coefficient([1, 2]) == HALF


# -- snapping and counting -----------------------------------------------------------


def test_snap_dyadic_is_exact():
    Q = SymmetricTorusPolynomial(6, (Fraction(3, 8), Fraction(5, 16), Fraction(1, 2)))
    S = snap_coefficients(Q, 4)
    assert S.q == (6, 5, 8)
    assert S.to_symmetric() == Q


def test_snap_rounding_and_wrap():
    Q = SymmetricTorusPolynomial(3, (Fraction(31, 32), Fraction(3, 64)))
    S = snap_coefficients(Q, 4)
    assert S.q == (0, 1)  # 15.5 -> 16 (ties to even) wraps to 0; 0.75 -> 1
    with pytest.raises(ValueError):
        SnappedPolynomial(3, 2, (4,))


def test_snap_example_bound():
    rng = random.Random(2)
    Q = SymmetricTorusPolynomial(8, tuple(Fraction(rng.randrange(10**6), 10**6 - 1) for _ in range(3)))
    S = snap_coefficients(Q, 20)
    assert sup_distance(Q, S.to_symmetric()) <= Fraction(3 * 64, 2**20)
    assert snapping_error_bound(8, 2, 20) == Fraction(3 * 64, 2**20)


def test_approximated_functions_examples():
    assert approximated_functions(SymmetricTorusPolynomial(5, (0, HALF)), Fraction(1, 10)) == {parity(5)}
    assert approximated_functions(SymmetricTorusPolynomial(5), Fraction(1, 10)) == {constant(5, 0)}
    assert len(approximated_functions(SymmetricTorusPolynomial(4), HALF)) == 2**5
    assert approximated_functions(SymmetricTorusPolynomial(4, (Fraction(1, 4),)), Fraction(1, 10)) == set()


@given(st.integers(1, 10), st.lists(st.fractions(0, 1, max_denominator=50), min_size=1, max_size=5))
def test_at_most_one_below_quarter(n, coeffs):
    found = approximated_functions(SymmetricTorusPolynomial(n, tuple(coeffs)), Fraction(1, 5))
    assert len(found) <= 1


def test_counting_bound_values():
    assert counting_lower_bound(1) == 0
    assert counting_lower_bound(1024) == 10
    assert snapping_precision(1024, 0) == 5
    for n in (64, 1024, 2**16):
        L = counting_lower_bound(n)
        for d in range(L):
            assert (snapping_precision(n, d) + 1) * (d + 1) < n
        assert (snapping_precision(n, L) + 1) * (L + 1) >= n
        assert (L + 1) * n**L * 20 <= 2 ** snapping_precision(n, L)
