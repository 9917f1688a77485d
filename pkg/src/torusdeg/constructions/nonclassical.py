"""Rounding torus polynomials to nonclassical (dyadic) polynomials."""

from __future__ import annotations

import math
from fractions import Fraction

from ..polynomials import MultilinearTorusPolynomial, NonclassicalPolynomial


def binary_digits(c: Fraction, count: int) -> list[int]:
    """First ``count`` digits of the binary expansion ``0.c_0 c_1 ...`` of ``c in [0, 1)``."""
    return [math.floor(c * 2 ** (k + 1)) & 1 for k in range(count)]


def rounding_error_bound(n: int, d: int, t: int) -> Fraction:
    """``C(n, <=d) 2^-t`` where ``C(n, <=d) = sum_{j<=d} C(n, j)``."""
    return Fraction(sum(math.comb(n, j) for j in range(d + 1)), 2**t)


def nonclassical_round(P: MultilinearTorusPolynomial, t: int) -> NonclassicalPolynomial:
    """Truncate every non-constant coefficient to ``t + 1`` binary digits.

    The constant term becomes the shift; the result has degree at most
    ``t + deg(P)`` and differs from ``P`` by at most
    ``rounding_error_bound(n, deg P, t)`` everywhere.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    d = P.degree
    bits = set()
    for mask, c in P.terms.items():
        if mask == 0:
            continue
        for k, b in enumerate(binary_digits(c, t + 1)):
            if b:
                bits.add((mask, k))
    return NonclassicalPolynomial(P.n, P.terms.get(0, Fraction(0)), frozenset(bits), t + d)
