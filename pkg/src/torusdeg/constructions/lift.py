"""Turning F_p polynomials with Boolean range into torus polynomials.

Given ``F`` over ``F_p`` with values in ``{0, 1}``, pick the least ``k`` with
``p^-k <= eps`` and the residue ``q`` whose ``q / p^k`` is nearest to
``alpha`` on the circle.  Then ``q A_k(F(x)) / p^k (mod 1)`` equals
``(q / p^k) f(x)`` exactly, which is within ``eps`` of ``alpha f(x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DimensionMismatch
from ..polynomials import (
    FieldPolynomial,
    IntegerPolynomial,
    MultilinearTorusPolynomial,
    SymmetricTorusPolynomial,
    binomial_to_power,
    forward_differences,
    univariate_compose,
)
from ..primes import is_prime
from ..torus import as_rational, torus_norm
from .amplifier import amplifier_coefficients, modulus_amplifier

# range checks on the full cube are skipped above this many variables
_RANGE_CHECK_MAX_N = 20


@dataclass(frozen=True)
class LiftParameters:
    p: int
    k: int
    q: int

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def rounding_error(self) -> Fraction:
        return torus_norm(Fraction(self.q, self.modulus))

    def degree_bound(self, field_degree: int) -> int:
        """Degree of ``A_k(F)`` before multilinearization."""
        return (2 * self.k - 1) * field_degree


def lift_parameters(p: int, alpha, eps) -> LiftParameters:
    """Smallest ``k >= 1`` with ``1/p^k <= eps`` and the nearest residue ``q``.

    Ties between two equally near residues go to the smaller ``q``.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    alpha, eps = as_rational(alpha), as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    k, modulus = 1, p
    while modulus * eps < 1:
        k += 1
        modulus *= p
    base = math.floor(alpha * modulus)
    candidates = {base % modulus, (base + 1) % modulus}
    q = min(candidates, key=lambda c: (torus_norm(Fraction(c, modulus) - alpha), c))
    return LiftParameters(p, k, q)


def _check_boolean_range(values, what: str):
    bad = next((v for v in values if v not in (0, 1)), None)
    if bad is not None:
        raise ValueError(f"{what} takes the value {bad}; apply force_boolean_range first")


def lift_field_polynomial(F: FieldPolynomial, alpha, eps) -> MultilinearTorusPolynomial:
    """Torus polynomial within ``eps`` of ``alpha * F`` on every point of the cube.

    The result is ``q A_k(F(x)) / p^k`` multilinearized; its degree is at
    most ``(2k - 1) deg(F)``.
    """
    params = lift_parameters(F.p, alpha, eps)
    if F.n <= _RANGE_CHECK_MAX_N:
        _check_boolean_range(F.values(), "F")
    modulus = params.modulus
    amplified = F.to_integer().compose_univariate(modulus_amplifier(params.k), modulus=modulus)
    return MultilinearTorusPolynomial(
        F.n, {s: Fraction(params.q * c, modulus) for s, c in amplified.mask_terms().items()}
    )


def lift_degree_bound(F: FieldPolynomial, eps) -> int:
    """``(2k - 1) deg(F)`` for the ``k`` chosen by the lift."""
    return lift_parameters(F.p, 0, eps).degree_bound(F.degree)


# ---------------------------------------------------------------------------
# polynomials in the Hamming weight


def _weight_lift_terms(coeffs: Sequence[int], p: int, n: int, params: LiftParameters):
    """Lift of one weight polynomial as ``(basis, coefficients)``.

    When the amplified degree fits below ``n`` the composition
    ``q A_k(F(w)) / p^k`` is expanded in the power basis.  Otherwise the
    function it defines on ``w = 0..n`` is the same as that of
    ``(q / p^k) F(w)``, because the amplifier fixes ``F(w)`` mod ``p^k``;
    that function is written in the binomial basis ``C(w, s)``, whose
    integer coefficients may be reduced mod ``p^k`` without changing any
    value.
    """
    modulus = params.modulus
    field_degree = len(coeffs) - 1
    if params.degree_bound(field_degree) <= n:
        amplified = univariate_compose(amplifier_coefficients(params.k), coeffs, modulus=modulus)
        return "power", [Fraction(params.q * c, modulus) for c in amplified]
    values = []
    for w in range(n + 1):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * w + c) % p
        values.append(acc)
    diffs = forward_differences(values)
    return "binomial", [Fraction(params.q * (d % modulus), modulus) for d in diffs]


def _weight_poly_mod_p(coeffs: Sequence[int], p: int) -> list[int]:
    out = [int(c) % p for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


def lift_weight_polynomial(coeffs: Sequence[int], p: int, n: int, alpha, eps) -> SymmetricTorusPolynomial:
    """Symmetric counterpart of :func:`lift_field_polynomial`.

    ``coeffs`` are the F_p coefficients of a polynomial ``F(w)`` in the
    Hamming weight, which must take values in ``{0, 1}`` for ``w = 0..n``.
    """
    params = lift_parameters(p, alpha, eps)
    coeffs = _weight_poly_mod_p(coeffs, p)
    _check_boolean_range(
        [IntegerPolynomial.univariate(coeffs).evaluate(w) % p for w in range(n + 1)], "F(w)"
    )
    basis, terms = _weight_lift_terms(coeffs, p, n, params)
    if basis == "binomial":
        terms = binomial_to_power(terms)
    return SymmetricTorusPolynomial(n, tuple(terms))


def weight_polynomial_to_field(coeffs: Sequence[int], p: int, n: int) -> FieldPolynomial:
    """The multilinear F_p polynomial ``F(x_1 + ... + x_n)``."""
    if n > _RANGE_CHECK_MAX_N:
        raise DimensionMismatch(f"n={n} is too large for a dense multilinear expansion")
    values = []
    for x in range(1 << n):
        w = bin(x).count("1")
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * w + c) % p
        values.append(acc)
    return FieldPolynomial.from_values(p, n, values)
