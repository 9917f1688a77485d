"""Dyadic snapping of symmetric polynomials and the counting lower bound."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from ..boolean import SymmetricProfile
from ..polynomials import SymmetricTorusPolynomial
from ..torus import HALF, as_rational, torus_norm


@dataclass(frozen=True)
class SnappedPolynomial:
    """Symmetric polynomial with coefficients ``q_j / 2^k``, ``|q_j| < 2^k``."""

    n: int
    k: int
    q: tuple[int, ...]

    def __post_init__(self):
        bound = 2**self.k
        if any(not -bound < v < bound for v in self.q):
            raise ValueError(f"snapped numerators must lie strictly between -2^{self.k} and 2^{self.k}")

    @property
    def d(self) -> int:
        return max(len(self.q) - 1, 0)

    def to_symmetric(self) -> SymmetricTorusPolynomial:
        return SymmetricTorusPolynomial(self.n, tuple(Fraction(v, 2**self.k) for v in self.q))


def snapping_error_bound(n: int, d: int, k: int) -> Fraction:
    """``(d + 1) n^d / 2^k``."""
    return Fraction((d + 1) * n**d, 2**k)


def snap_coefficients(Q: SymmetricTorusPolynomial, k: int) -> SnappedPolynomial:
    """Round every coefficient to the nearest multiple of ``2^-k`` (ties to even).

    A coefficient that rounds up to exactly 1 is stored as 0, which is the
    same torus polynomial since ``|x|^j`` is an integer.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    scale = 2**k
    q = []
    for c in Q.coeffs:
        v = round(c * scale)
        q.append(0 if v == scale else v)
    return SnappedPolynomial(Q.n, k, tuple(q))


def approximated_functions(Q: SymmetricTorusPolynomial, eps) -> set[SymmetricProfile]:
    """Every symmetric profile ``b`` with ``|Q(w) - b_w/2 (mod 1)| <= eps`` for all ``w``.

    For ``eps < 1/4`` at most one profile qualifies.
    """
    eps = as_rational(eps)
    options = []
    for value in Q.weight_values():
        allowed = tuple(b for b in (0, 1) if torus_norm(value.value - b * HALF) <= eps)
        if not allowed:
            return set()
        options.append(allowed)
    return {SymmetricProfile(Q.n, bits) for bits in itertools.product(*options)}


def snapping_precision(n: int, d: int) -> int:
    """Least ``k`` with ``(d + 1) n^d / 2^k <= 1/20``."""
    x = 20 * (d + 1) * n**d
    return (x - 1).bit_length()


def counting_lower_bound(n: int) -> int:
    """Degree below which symmetric ``1/(20n)``-approximation of every delta is impossible.

    For each ``d`` the precision ``k(d)`` makes snapped polynomials
    ``1/10``-approximate every symmetric function, and there are only
    ``2^((k+1)(d+1))`` snapped polynomials; ``d`` is ruled out whenever
    ``(k(d) + 1)(d + 1) < n``.  Returns one more than the largest ruled-out
    ``d`` (0 if none).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 0
    while (snapping_precision(n, d) + 1) * (d + 1) < n:
        d += 1
    return d


def counting_ratio(n: int) -> float:
    """``counting_lower_bound(n) * sqrt(log2(n) / n)``; a float, for reporting only."""
    return counting_lower_bound(n) * math.sqrt(math.log2(n) / n)
