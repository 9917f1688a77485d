"""Modulus-amplifying polynomials.

``A_k(x) = x^k * sum_{j<k} C(k-1+j, j) (1-x)^j`` has degree ``2k - 1``.
The ``x^k`` factor gives ``A_k(x) = 0 (mod m^k)`` whenever ``m | x``, and
``1 - A_k(x)`` is divisible by ``(1 - x)^k``, which gives
``A_k(x) = 1 (mod m^k)`` whenever ``x = 1 (mod m)``.
"""

from __future__ import annotations

import math
from functools import lru_cache

from ..polynomials import IntegerPolynomial


@lru_cache(maxsize=None)
def amplifier_coefficients(k: int) -> tuple[int, ...]:
    """Dense coefficients ``(a_0, ..., a_{2k-1})`` of ``A_k``."""
    if k < 1:
        raise ValueError("amplifier order k must be >= 1")
    coeffs = [0] * (2 * k)
    for j in range(k):
        weight = math.comb(k - 1 + j, j)
        # (1 - x)^j = sum_i C(j, i) (-x)^i, shifted by x^k
        for i in range(j + 1):
            coeffs[k + i] += weight * math.comb(j, i) * (-1) ** i
    return tuple(coeffs)


def modulus_amplifier(k: int) -> IntegerPolynomial:
    """The univariate integer polynomial ``A_k`` of degree ``2k - 1``."""
    return IntegerPolynomial.univariate(amplifier_coefficients(k))
