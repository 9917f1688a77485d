from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import multilinear_polys, rationals, symmetric_polys
from torusdeg.boolean import index_bits, popcount
from torusdeg.errors import DimensionMismatch
from torusdeg.polynomials import (
    FieldPolynomial,
    IntegerPolynomial,
    MultilinearTorusPolynomial,
    NonclassicalPolynomial,
    SymmetricTorusPolynomial,
    mobius_transform,
    multilinearize,
    reduce_on_weights,
    symmetric_to_multilinear,
    zeta_transform,
)
from torusdeg.torus import TorusValue

HALF = Fraction(1, 2)


def _all_monomial(n):
    return MultilinearTorusPolynomial.from_subsets(n, {tuple(range(1, n + 1)): HALF})


def test_evaluate_examples():
    for n in range(1, 6):
        P = _all_monomial(n)
        assert P.evaluate([1] * n).value == HALF
        for x in range((1 << n) - 1):
            assert P.evaluate(x).value == 0
    Q = SymmetricTorusPolynomial(3, (0, HALF))
    assert Q.evaluate("110").value == 0
    assert Q.evaluate("100").value == HALF


def test_evaluate_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        _all_monomial(3).evaluate([1, 1])
    with pytest.raises(DimensionMismatch):
        SymmetricTorusPolynomial(3, (0, HALF)).evaluate("11")


def test_multilinearize_examples():
    # (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
    P = multilinearize({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert P == MultilinearTorusPolynomial(2, {})  # x1 + x2 + 2x1x2 has integer coefficients
    assert multilinearize({(3,): HALF}) == MultilinearTorusPolynomial.from_subsets(1, {(1,): HALF})
    Q = multilinearize({(1, 0): Fraction(1, 3), (0, 1): Fraction(1, 5)})
    assert Q == MultilinearTorusPolynomial.from_subsets(2, {(1,): Fraction(1, 3), (2,): Fraction(1, 5)})


def test_symmetric_to_multilinear_examples():
    assert symmetric_to_multilinear(SymmetricTorusPolynomial(4, (Fraction(1, 3),))) == MultilinearTorusPolynomial.constant(4, Fraction(1, 3))
    P = symmetric_to_multilinear(SymmetricTorusPolynomial(2, (0, 0, Fraction(1, 3))))
    # (x1 + x2)^2 / 3 = x1/3 + x2/3 + 2 x1 x2 / 3
    assert P == MultilinearTorusPolynomial.from_subsets(
        2, {(1,): Fraction(1, 3), (2,): Fraction(1, 3), (1, 2): Fraction(2, 3)}
    )
    P = symmetric_to_multilinear(SymmetricTorusPolynomial(5, (0, HALF)))
    assert P.terms == {1 << i: HALF for i in range(5)}


@settings(max_examples=60)
@given(symmetric_polys(max_n=8))
def test_symmetric_to_multilinear_pointwise(Q):
    P = symmetric_to_multilinear(Q)
    for x in range(1 << Q.n):
        assert P.evaluate(x) == Q.evaluate(x) == Q.evaluate_weight(popcount(x))


def test_symmetric_to_multilinear_exhaustive_small_coefficients():
    # every power |x|^j, j <= n, for n <= 10
    for n in range(11):
        for j in range(n + 1):
            Q = SymmetricTorusPolynomial(n, tuple([0] * j + [Fraction(1, 7)]))
            vals = symmetric_to_multilinear(Q).values()
            assert vals == [TorusValue(Fraction(popcount(x) ** j, 7)) for x in range(1 << n)]


@settings(max_examples=60)
@given(st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * n), rationals, max_size=8))))
def test_multilinearize_pointwise(case):
    n, terms = case
    P = multilinearize(terms, n)
    for x in range(1 << n):
        bits = index_bits(x, n)
        direct = sum((c * all(b or not a for a, b in zip(e, bits)) for e, c in terms.items()), Fraction(0))
        assert P.evaluate(x) == TorusValue(direct)


@settings(max_examples=40)
@given(multilinear_polys(max_n=8), st.integers(-5, 5))
def test_coefficient_shift_by_integer_is_invisible(P, shift):
    # adding an integer to any coefficient changes nothing on the cube
    raw = {s: c + shift for s, c in P.terms.items()}
    Q = MultilinearTorusPolynomial(P.n, raw)
    assert Q == P
    assert Q.values() == P.values()


@settings(max_examples=40)
@given(symmetric_polys(max_n=8))
def test_symmetric_depends_only_on_weight(Q):
    by_weight = Q.weight_values()
    for x in range(1 << Q.n):
        assert Q.evaluate(x) == by_weight[popcount(x)]


@given(symmetric_polys(max_n=8), st.integers(-3, 3))
def test_symmetric_integer_shift_invisible(Q, shift):
    R = SymmetricTorusPolynomial(Q.n, tuple(c + shift for c in Q.coeffs))
    assert R.weight_values() == Q.weight_values()


@given(st.integers(0, 8), st.lists(rationals, max_size=14))
def test_reduce_on_weights_keeps_values(n, coeffs):
    reduced = reduce_on_weights(coeffs, n)
    assert len(reduced) <= n + 1
    for w in range(n + 1):
        assert sum(c * w**j for j, c in enumerate(coeffs)) == sum(c * w**j for j, c in enumerate(reduced))


@given(st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(rationals, min_size=n + 1, max_size=n + 1))))
def test_from_weight_values_interpolates(case):
    n, vals = case
    Q = SymmetricTorusPolynomial.from_weight_values(n, vals)
    assert Q.weight_values() == [TorusValue(v) for v in vals]
    assert Q.degree <= n


@given(st.integers(0, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-50, 50), min_size=1 << n, max_size=1 << n))))
def test_zeta_mobius_inverse(case):
    n, vals = case
    assert zeta_transform(mobius_transform(vals, n), n) == vals
    assert mobius_transform(vals, n, 7) == [v % 7 for v in mobius_transform(vals, n)]


@given(multilinear_polys(max_n=6), multilinear_polys(max_n=6))
def test_torus_polynomial_ring_ops(P, Q):
    if P.n != Q.n:
        with pytest.raises(DimensionMismatch):
            P + Q
        return
    for x in range(1 << P.n):
        assert (P + Q).evaluate(x) == P.evaluate(x) + Q.evaluate(x)
        assert (P - Q).evaluate(x) == P.evaluate(x) - Q.evaluate(x)
        assert (-P).evaluate(x) == -P.evaluate(x)
        assert P.scale(3).evaluate(x) == 3 * P.evaluate(x)


def test_degree_queries():
    assert MultilinearTorusPolynomial(3).degree == 0
    assert _all_monomial(4).degree == 4
    assert MultilinearTorusPolynomial.from_subsets(3, {(1, 2): 1}).degree == 0  # integer coefficient vanishes
    assert SymmetricTorusPolynomial(5, (0, 0, 0, HALF)).degree == 3
    # |x|^3 reduces below n = 2
    assert SymmetricTorusPolynomial(2, (0, 0, 0, Fraction(1, 3))).degree <= 2


def test_field_polynomial():
    F = FieldPolynomial.from_subsets(3, 2, {(1,): 1, (2,): 1})
    assert F.values() == [0, 1, 1, 2]
    sq = F * F
    assert sq.values() == [v * v % 3 for v in F.values()]
    assert sq == FieldPolynomial.from_subsets(3, 2, {(1,): 1, (2,): 1, (1, 2): 2})
    assert (F**2) == sq
    assert (F - F).terms == {}
    assert F.degree == 1 and sq.degree == 2
    assert FieldPolynomial.from_values(3, 2, F.values()) == F
    with pytest.raises(ValueError):
        FieldPolynomial(4, 1, {})


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 4), min_size=1 << n, max_size=1 << n))), st.integers(0, 6))
def test_field_power_pointwise(case, e):
    n, vals = case
    F = FieldPolynomial.from_values(5, n, vals)
    assert (F**e).values() == [pow(v, e, 5) for v in vals]


def test_integer_polynomial():
    A = IntegerPolynomial.univariate([0, 0, 3, -2])
    assert A.degree == 3 and A.coefficients() == [0, 0, 3, -2]
    assert A.evaluate(2) == 12 - 16
    G = IntegerPolynomial.from_subsets(2, {(1,): 1, (2,): 1})
    comp = G.compose_univariate(A)
    for x in range(4):
        assert comp.evaluate(index_bits(x, 2)) == A.evaluate(G.evaluate(index_bits(x, 2)))
    sq = G * G
    assert not sq.is_multilinear
    assert sq.multilinearize() == IntegerPolynomial.from_subsets(2, {(1,): 1, (2,): 1, (1, 2): 2})
    with pytest.raises(DimensionMismatch):
        IntegerPolynomial(2, {(1,): 1})


def test_nonclassical_polynomial():
    N = NonclassicalPolynomial(2, Fraction(1, 4), frozenset({(0b01, 0), (0b11, 1)}), 3)
    assert N.coefficient([1]) == HALF
    assert N.evaluate("11").value == 0  # 1/4 + 1/2 + 1/4 = 1
    assert N.evaluate("10").value == Fraction(3, 4)
    assert N.to_multilinear().values() == [N.evaluate(x) for x in range(4)]
    with pytest.raises(ValueError):
        NonclassicalPolynomial(2, 0, frozenset({(0b11, 2)}), 3)
    with pytest.raises(DimensionMismatch):
        NonclassicalPolynomial(2, 0, frozenset({(0, 0)}), 3)
