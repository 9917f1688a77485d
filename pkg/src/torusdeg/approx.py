"""Approximation error ``max_x |P(x) - alpha f(x) (mod 1)|``."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .boolean import BooleanFunction, SymmetricProfile, popcount
from .errors import DimensionMismatch, SizeLimitExceeded
from .polynomials import (
    MultilinearTorusPolynomial,
    NonclassicalPolynomial,
    SymmetricTorusPolynomial,
)
from .torus import HALF, as_rational

TorusPolynomial = Union[MultilinearTorusPolynomial, SymmetricTorusPolynomial, NonclassicalPolynomial]
Target = Union[BooleanFunction, SymmetricProfile]

# dense truth tables beyond this many variables are refused
MAX_DENSE_N = 24


def _check_dense(n: int):
    if n > MAX_DENSE_N:
        raise SizeLimitExceeded(f"dense evaluation over 2^{n} points exceeds the n <= {MAX_DENSE_N} policy")


def _max_norm(den: int, nums, shifts) -> Fraction:
    """``max_i |(nums[i] - shifts[i]) / den (mod 1)|`` with integer arithmetic."""
    best = 0
    for v, s in zip(nums, shifts):
        r = (v - s) % den
        r = min(r, den - r)
        if r > best:
            best = r
    return Fraction(best, den)


def point_numerators(poly: TorusPolynomial) -> tuple[int, list[int]]:
    """``(D, nums)`` with ``poly(x) = nums[x] / D (mod 1)`` on every point index."""
    if isinstance(poly, NonclassicalPolynomial):
        poly = poly.to_multilinear()
    _check_dense(poly.n)
    if isinstance(poly, MultilinearTorusPolynomial):
        return poly.value_numerators()
    den, by_weight = poly.weight_numerators()
    return den, [by_weight[popcount(i)] for i in range(1 << poly.n)]


def approx_error(poly: TorusPolynomial, target: Target, alpha=HALF) -> Fraction:
    """Sup-norm distance between ``poly`` and ``alpha * target`` on the torus.

    Symmetric polynomials against symmetric targets are checked weight by
    weight (``n + 1`` points); everything else is checked on the full cube.
    """
    alpha = as_rational(alpha)
    if poly.n != target.n:
        raise DimensionMismatch(f"polynomial has n={poly.n}, target has n={target.n}")
    if isinstance(poly, SymmetricTorusPolynomial):
        profile = target
        if isinstance(target, BooleanFunction):
            profile = target.to_profile() if target.is_symmetric() else None
        if profile is not None:
            den0, nums = poly.weight_numerators()
            den = math.lcm(den0, alpha.denominator)
            nums = [v * (den // den0) for v in nums]
            a = alpha.numerator * (den // alpha.denominator)
            return _max_norm(den, nums, (a * b for b in profile.values))
    if isinstance(target, SymmetricProfile):
        _check_dense(target.n)
        target = target.to_function()
    den, nums = point_numerators(poly)
    den2 = math.lcm(den, alpha.denominator)
    nums = [v * (den2 // den) for v in nums]
    a = alpha.numerator * (den2 // alpha.denominator)
    return _max_norm(den2, nums, (a * b for b in target.values()))


def sup_distance(p: TorusPolynomial, q: TorusPolynomial) -> Fraction:
    """``max_x |p(x) - q(x) (mod 1)|``."""
    if p.n != q.n:
        raise DimensionMismatch(f"n={p.n} vs n={q.n}")
    if isinstance(p, SymmetricTorusPolynomial) and isinstance(q, SymmetricTorusPolynomial):
        dp, vp = p.weight_numerators()
        dq, vq = q.weight_numerators()
    else:
        dp, vp = point_numerators(p)
        dq, vq = point_numerators(q)
    den = math.lcm(dp, dq)
    return _max_norm(den, (v * (den // dp) for v in vp), [v * (den // dq) for v in vq])
