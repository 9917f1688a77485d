"""Symmetric torus polynomials approximating the delta functions.

For each of the first ``t`` primes, ``f_p(w) = 1 - (w - w0)^(p-1)`` is the
F_p indicator of ``w = w0 (mod p)``.  Lifting every ``f_p`` with weight
``1/(2t)`` and summing gives ``1/2`` at ``w = w0`` and at most
``log2(n) / (2t)`` elsewhere, since few primes divide ``w - w0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..polynomials import SymmetricTorusPolynomial, binomial_to_power
from ..primes import first_primes
from ..torus import as_rational
from .lift import LiftParameters, _weight_lift_terms, lift_parameters


def prime_count(n: int, eps) -> int:
    """Number of primes ``t``: the least ``t`` with ``ceil(log2 n) / t <= eps/2``."""
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if n <= 1:
        return 1
    log_n = (n - 1).bit_length()
    return max(1, math.ceil(2 * log_n / eps))


def residue_indicator(p: int, w: int) -> list[int]:
    """F_p coefficients of ``1 - (x - w)^(p-1)`` in ``x``."""
    e = p - 1
    # C(p-1, i) = (-1)^i (mod p)
    coeffs = [-((-1) ** i) * pow(-w, e - i, p) for i in range(e + 1)]
    coeffs[0] += 1
    return [c % p for c in coeffs]


@dataclass(frozen=True)
class DeltaParameters:
    n: int
    eps: Fraction
    t: int
    lifts: tuple[LiftParameters, ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(lp.p for lp in self.lifts)

    @property
    def nominal_degree(self) -> int:
        """``max_p (2 k_p - 1)(p - 1)``, the degree before restricting to weights ``0..n``."""
        return max(lp.degree_bound(lp.p - 1) for lp in self.lifts)


def delta_parameters(n: int, eps) -> DeltaParameters:
    eps = as_rational(eps)
    t = prime_count(n, eps)
    alpha, lift_eps = Fraction(1, 2 * t), eps / (2 * t)
    return DeltaParameters(n, eps, t, tuple(lift_parameters(p, alpha, lift_eps) for p in first_primes(t)))


def delta_construction(n: int, w: int, eps) -> SymmetricTorusPolynomial:
    """Symmetric torus polynomial within ``eps`` of ``Delta_w / 2``."""
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range [0, {n}]")
    params = delta_parameters(n, eps)
    power = [Fraction(0)] * (n + 1)
    binomial = [Fraction(0)] * (n + 1)
    for lp in params.lifts:
        basis, terms = _weight_lift_terms(residue_indicator(lp.p, w), lp.p, n, lp)
        acc = power if basis == "power" else binomial
        if len(terms) > len(acc):
            acc.extend([Fraction(0)] * (len(terms) - len(acc)))
        for j, c in enumerate(terms):
            acc[j] += c
    # binomial coefficients may be reduced mod 1 before the basis change
    binomial = [c - math.floor(c) for c in binomial]
    for j, c in enumerate(binomial_to_power(binomial)):
        power[j] += c
    return SymmetricTorusPolynomial(n, tuple(power))
