import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import multilinear_polys
from torusdeg.approx import approx_error, sup_distance
from torusdeg.boolean import BooleanFunction, and_function, delta, delta_at_least, majority, parity
from torusdeg.constructions import (
    AccCertificate,
    PolynomialDistribution,
    acc_lift,
    amplifier_coefficients,
    binary_digits,
    compose_distribution,
    default_sample_count,
    delta_construction,
    delta_parameters,
    force_boolean_range,
    lift_degree_bound,
    lift_field_polynomial,
    lift_parameters,
    lift_weight_polynomial,
    majority_padding,
    majority_to_delta,
    majority_to_threshold,
    max_disagreement,
    modulus_amplifier,
    nonclassical_round,
    prime_count,
    residue_indicator,
    rounding_error_bound,
    sample_counts,
    weight_polynomial_to_field,
)
from torusdeg.errors import CertificateViolation, DimensionMismatch, SamplingFailed
from torusdeg.polynomials import (
    FieldPolynomial,
    IntegerPolynomial,
    MultilinearTorusPolynomial,
    SymmetricTorusPolynomial,
    mobius_transform,
)
from torusdeg.torus import torus_norm

HALF = Fraction(1, 2)


# -- amplifier ---------------------------------------------------------------


def test_amplifier_small_cases():
    assert amplifier_coefficients(1) == (0, 1)
    assert amplifier_coefficients(2) == (0, 0, 3, -2)
    assert modulus_amplifier(3).coefficients() == [0, 0, 0, 10, -15, 6]


@given(st.integers(1, 8), st.integers(2, 12), st.integers(-300, 300))
def test_amplifier_congruences(k, m, t):
    A = modulus_amplifier(k)
    assert A.evaluate(m * t) % m**k == 0
    assert A.evaluate(m * t + 1) % m**k == 1


# -- lifts -------------------------------------------------------------------


def test_lift_parity_example():
    F = FieldPolynomial.from_subsets(2, 2, {(1,): 1, (2,): 1})
    P = lift_field_polynomial(F, HALF, Fraction(1, 4))
    assert approx_error(P, parity(2).to_function()) <= Fraction(1, 4)


def test_lift_zero_polynomial():
    P = lift_field_polynomial(FieldPolynomial(5, 3), Fraction(1, 3), Fraction(1, 10))
    assert P.degree == 0
    assert torus_norm(P.coefficient(())) <= Fraction(1, 10)


def test_lift_parameters_choice():
    lp = lift_parameters(3, Fraction(1, 3), Fraction(1, 10))
    assert (lp.k, lp.modulus, lp.q) == (3, 27, 9)
    # exactly halfway between 0 and 1/2: the smaller residue wins
    assert lift_parameters(2, Fraction(1, 4), Fraction(1, 2)).q == 0
    assert lift_degree_bound(FieldPolynomial.from_subsets(2, 3, {(1, 2): 1}), Fraction(1, 8)) == 5 * 2
    with pytest.raises(ValueError):
        lift_parameters(6, HALF, HALF)
    with pytest.raises(ValueError):
        lift_parameters(2, HALF, 0)


def test_lift_rejects_non_boolean_range():
    F = FieldPolynomial.from_subsets(3, 2, {(1,): 1, (2,): 1})
    with pytest.raises(ValueError, match="force_boolean_range"):
        lift_field_polynomial(F, HALF, Fraction(1, 4))


def test_force_boolean_range():
    F2 = FieldPolynomial.from_subsets(2, 3, {(1,): 1, (2, 3): 1})
    assert force_boolean_range(F2) is F2
    F = FieldPolynomial.from_subsets(3, 2, {(1,): 1, (2,): 1})
    G = force_boolean_range(F)
    assert G == FieldPolynomial.from_subsets(3, 2, {(1,): 1, (2,): 1, (1, 2): 2})
    assert set(G.values()) <= {0, 1}
    assert force_boolean_range(G).values() == G.values()


@settings(max_examples=40)
@given(
    st.sampled_from([2, 3, 5]),
    st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 4), min_size=1 << n, max_size=1 << n))),
    st.integers(1, 40).map(lambda d: Fraction(1, d)),
    st.integers(0, 12).map(lambda a: Fraction(a, 12)),
)
def test_lift_error_bound(p, case, eps, alpha):
    n, vals = case
    F = force_boolean_range(FieldPolynomial.from_values(p, n, [v % p for v in vals]))
    P = lift_field_polynomial(F, alpha, eps)
    assert approx_error(P, BooleanFunction.from_values(n, F.values()), alpha) <= eps
    assert P.degree <= lift_degree_bound(F, eps)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_weight_lift_matches_cube_lift(p):
    n, w = 6, 2
    coeffs = residue_indicator(p, w)
    Q = lift_weight_polynomial(coeffs, p, n, HALF, Fraction(1, 9))
    P = lift_field_polynomial(weight_polynomial_to_field(coeffs, p, n), HALF, Fraction(1, 9))
    assert sup_distance(Q, P) == 0


# -- distributions -------------------------------------------------------------


def _parity_distribution(n, p_good):
    good = FieldPolynomial.from_subsets(2, n, {(i,): 1 for i in range(1, n + 1)})
    bad = good + FieldPolynomial.from_subsets(2, n, {(): 1})
    return PolynomialDistribution(((good, p_good), (bad, 1 - p_good)))


def test_compose_degenerate_distribution():
    n = 3
    good = FieldPolynomial.from_subsets(2, n, {(i,): 1 for i in range(1, n + 1)})
    nu = PolynomialDistribution(((good, Fraction(1)),))
    f = parity(n).to_function()
    for m in (1, 5):
        P = compose_distribution(nu, f, Fraction(1, 5), m=m)
        assert approx_error(P, f) <= Fraction(1, 5)


def test_compose_parity_example():
    nu = _parity_distribution(4, Fraction(9, 10))
    f = parity(4).to_function()
    P = compose_distribution(nu, f, Fraction(1, 5), m=200, seed=0)
    err = approx_error(P, f)
    assert err <= Fraction(3, 5)
    # deterministic for a fixed seed
    assert compose_distribution(nu, f, Fraction(1, 5), m=200, seed=0) == P


def test_sampling_is_reproducible_and_roughly_right():
    nu = _parity_distribution(2, Fraction(9, 10))
    a = sample_counts(nu, 1000, seed=1)
    assert a == sample_counts(nu, 1000, seed=1)
    assert a != sample_counts(nu, 1000, seed=2)
    assert sum(a) == 1000 and 850 < a[0] < 950
    assert max_disagreement(nu, a, parity(2).to_function()) == a[1]


def test_sampling_failure_is_reported():
    nu = _parity_distribution(2, Fraction(1, 2))
    with pytest.raises(SamplingFailed):
        compose_distribution(nu, parity(2).to_function(), Fraction(1, 100), m=50, retries=3)


def test_distribution_validation():
    good = FieldPolynomial.from_subsets(2, 2, {(1,): 1})
    with pytest.raises(ValueError):
        PolynomialDistribution(((good, Fraction(1, 2)),))
    with pytest.raises(ValueError):
        PolynomialDistribution(((FieldPolynomial.from_subsets(3, 2, {(1,): 2}), 1),))
    with pytest.raises(DimensionMismatch):
        PolynomialDistribution(((good, HALF), (FieldPolynomial(2, 3), HALF)))
    assert default_sample_count(4, Fraction(1, 5)) == 400


# -- nonclassical rounding -----------------------------------------------------


def test_binary_digits_of_one_third():
    assert binary_digits(Fraction(1, 3), 4) == [0, 1, 0, 1]


def test_rounding_one_third():
    P = MultilinearTorusPolynomial.from_subsets(2, {(1,): Fraction(1, 3)})
    Q = nonclassical_round(P, 3)
    assert Q.bits == frozenset({(0b01, 1), (0b01, 3)})
    assert Q.coefficient([1]) == Fraction(5, 16)
    assert P.coefficient([1]) - Q.coefficient([1]) <= Fraction(1, 2**3)


def test_rounding_dyadic_is_lossless():
    P = MultilinearTorusPolynomial.from_subsets(3, {(): Fraction(3, 8), (1,): Fraction(5, 8), (2, 3): Fraction(1, 4)})
    Q = nonclassical_round(P, 4)
    assert sup_distance(P, Q.to_multilinear()) == 0
    assert Q.shift.value == Fraction(3, 8)


@settings(max_examples=40)
@given(multilinear_polys(max_n=6), st.integers(1, 10))
def test_rounding_bound(P, t):
    Q = nonclassical_round(P, t)
    assert sup_distance(P, Q.to_multilinear()) <= rounding_error_bound(P.n, P.degree, t)
    assert all(bin(s).count("1") + k <= t + P.degree for s, k in Q.bits)


# -- ACC lift ------------------------------------------------------------------


def test_acc_worked_example():
    cert = AccCertificate(IntegerPolynomial.from_subsets(2, {(1, 2): 8, (): 1}), 3, 2, 2, and_function(2).to_function())
    assert cert.errors() == [1, 1, 1, 1]
    assert approx_error(acc_lift(cert), cert.f) <= Fraction(1, 4)


def test_acc_validation():
    f = and_function(2).to_function()
    with pytest.raises(CertificateViolation):
        AccCertificate(IntegerPolynomial.from_subsets(2, {(1, 2): 8, (): -1}), 3, 2, 2, f)
    with pytest.raises(ValueError):
        AccCertificate(IntegerPolynomial.from_subsets(2, {(1, 2): 8}), 3, 0, 2, f)
    with pytest.raises(ValueError):
        AccCertificate(IntegerPolynomial.from_subsets(2, {(1, 2): 8}), 1, 2, 2, f)
    with pytest.raises(DimensionMismatch):
        AccCertificate(IntegerPolynomial.from_subsets(3, {(1, 2): 8}), 3, 2, 2, f)


@settings(max_examples=40)
@given(st.integers(1, 4), st.integers(1, 6).flatmap(lambda e: st.tuples(st.just(e), st.integers(e, 8))), st.data())
def test_acc_lift_bound(n, ek, data):
    e, k = ek
    f = BooleanFunction(n, data.draw(st.integers(0, (1 << (1 << n)) - 1)))
    errs = [data.draw(st.integers(0, 2 ** (k - e))) for _ in range(1 << n)]
    highs = [data.draw(st.integers(-3, 3)) for _ in range(1 << n)]
    vals = [b * 2**k + E + h * 2 ** (k + e) for b, E, h in zip(f.values(), errs, highs)]
    F = IntegerPolynomial.from_masks(n, dict(enumerate(mobius_transform(vals, n))))
    cert = AccCertificate(F, k, e, 0, f)
    assert cert.errors() == errs
    assert approx_error(acc_lift(cert), f) <= Fraction(1, 2**e)


# -- delta construction ----------------------------------------------------------


def test_prime_count():
    assert prime_count(1, HALF) == 1
    assert prime_count(8, Fraction(1, 4)) == 24
    assert prime_count(9, Fraction(1, 4)) == 32
    with pytest.raises(ValueError):
        prime_count(8, 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_residue_indicator(p):
    for w in range(12):
        coeffs = residue_indicator(p, w)
        for x in range(40):
            v = sum(c * x**j for j, c in enumerate(coeffs)) % p
            assert v == (1 if (x - w) % p == 0 else 0)
        expected = [(-math.comb(p - 1, i) * (-w) ** (p - 1 - i)) % p for i in range(p)]
        expected[0] = (expected[0] + 1) % p
        assert coeffs == expected


def test_delta_example():
    n, w, eps = 8, 3, Fraction(1, 4)
    Q = delta_construction(n, w, eps)
    assert approx_error(Q, delta(n, w)) <= eps
    t = delta_parameters(n, eps).t
    vals = Q.weight_values()
    assert torus_norm(vals[w].value - HALF) <= eps / 2
    for v in range(n + 1):
        if v != w:
            assert torus_norm(vals[v].value) <= eps / 2 + Fraction(math.ceil(math.log2(n)), t)


@settings(max_examples=25)
@given(st.integers(1, 24).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.integers(1, 12))
def test_delta_error_bound(nw, d):
    n, w = nw
    eps = Fraction(1, d)
    assert approx_error(delta_construction(n, w, eps), delta(n, w)) <= eps


def test_delta_rejects_bad_input():
    with pytest.raises(ValueError):
        delta_construction(4, 5, HALF)
    with pytest.raises(ValueError):
        delta_construction(4, 1, 0)


# -- majority reduction ----------------------------------------------------------


def test_padding():
    assert majority_padding(3, 0) == (1, 1, 1, 1)
    assert majority_padding(3, 2) == (1, 1, 0, 0)
    assert majority_padding(3, 4) == (0, 0, 0, 0)


def test_reduction_from_exact_interpolant():
    for n in range(1, 5):
        m = 2 * n + 1
        Q = SymmetricTorusPolynomial.from_weight_values(m, [Fraction(v, 2) for v in majority(m).values])
        for w in range(n + 1):
            assert approx_error(majority_to_threshold(Q, n, w), delta_at_least(n, w)) == 0
            assert approx_error(majority_to_delta(Q, n, w), delta(n, w)) == 0
        assert approx_error(majority_to_threshold(Q, n, 0), delta_at_least(n, 0)) == 0


def test_reduction_validation():
    Q = SymmetricTorusPolynomial(7, (0, HALF))
    with pytest.raises(DimensionMismatch):
        majority_to_delta(Q, 2, 1)
    with pytest.raises(ValueError):
        majority_to_delta(Q, 3, 4)
