"""From a symmetric approximator of majority to approximators of deltas.

Fixing ``n - w + 1`` of the extra ``n + 1`` inputs of ``Maj_{2n+1}`` to one
and the rest to zero gives ``Delta_{>=w}`` on the remaining ``n`` inputs.
"""

from __future__ import annotations

from ..errors import DimensionMismatch
from ..polynomials import SymmetricTorusPolynomial


def majority_padding(n: int, w: int) -> tuple[int, ...]:
    """The constant block ``c in {0,1}^(n+1)``: ``n - w + 1`` ones, then zeros."""
    if not 0 <= w <= n + 1:
        raise ValueError(f"threshold {w} out of range [0, {n + 1}]")
    ones = n - w + 1
    return (1,) * ones + (0,) * (n + 1 - ones)


def _check(Q: SymmetricTorusPolynomial, n: int):
    if Q.n != 2 * n + 1:
        raise DimensionMismatch(f"expected a polynomial on {2 * n + 1} variables, got n={Q.n}")


def majority_to_threshold(Q: SymmetricTorusPolynomial, n: int, w: int) -> SymmetricTorusPolynomial:
    """``Q_{>=w}(x) = Q(x, c)`` on ``n`` variables."""
    _check(Q, n)
    return Q.shifted(sum(majority_padding(n, w)), n)


def majority_to_delta(Q: SymmetricTorusPolynomial, n: int, w: int) -> SymmetricTorusPolynomial:
    """``Q_w = Q_{>=w} - Q_{>=w+1} (mod 1)``.

    If ``Q`` is within ``delta`` of ``Maj_{2n+1}/2`` then ``Q_w`` is within
    ``2 delta`` of ``Delta_w / 2``.
    """
    _check(Q, n)
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range [0, {n}]")
    return majority_to_threshold(Q, n, w) - majority_to_threshold(Q, n, w + 1)
