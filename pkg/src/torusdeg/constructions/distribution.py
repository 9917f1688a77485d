"""Boolean-range forcing and composition of random F_p polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..boolean import BooleanFunction
from ..errors import DimensionMismatch, SamplingFailed
from ..polynomials import FieldPolynomial, MultilinearTorusPolynomial
from ..torus import as_rational, lcm_of_denominators
from .lift import lift_field_polynomial

DEFAULT_RETRIES = 16


def force_boolean_range(F: FieldPolynomial) -> FieldPolynomial:
    """``F^(p-1)`` multilinearized; by Fermat its values lie in ``{0, 1}``."""
    if F.p == 2:
        return F
    return F ** (F.p - 1)


@dataclass(frozen=True)
class PolynomialDistribution:
    """Finitely supported distribution over Boolean-valued F_p polynomials."""

    entries: tuple

    def __post_init__(self):
        entries = tuple((F, as_rational(prob)) for F, prob in self.entries)
        if not entries:
            raise ValueError("distribution has no entries")
        first = entries[0][0]
        for F, prob in entries:
            if (F.p, F.n) != (first.p, first.n):
                raise DimensionMismatch("all polynomials must share p and n")
            if prob <= 0:
                raise ValueError("probabilities must be positive")
            if any(v not in (0, 1) for v in F.values()):
                raise ValueError("every polynomial must have range {0, 1}")
        total = sum(prob for _, prob in entries)
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries[0][0].n

    @property
    def p(self) -> int:
        return self.entries[0][0].p


def default_sample_count(n: int, eps) -> int:
    """``ceil(4 n / eps^2)``."""
    eps = as_rational(eps)
    return max(1, math.ceil(4 * max(n, 1) / eps**2))


def _draw_below(seed: int, attempt: int, index: int, bound: int) -> int:
    """Uniform integer in ``[0, bound)`` from a counter-based stream keyed by the draw."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, attempt, index])))
    nbytes = max(1, (bound.bit_length() + 7) // 8)
    limit = (256**nbytes // bound) * bound
    while True:
        v = int.from_bytes(rng.bytes(nbytes), "little")
        if v < limit:
            return v % bound


def sample_counts(nu: PolynomialDistribution, m: int, seed: int, attempt: int = 0) -> list[int]:
    """How many of ``m`` independent draws landed on each entry of ``nu``."""
    den = lcm_of_denominators(prob for _, prob in nu.entries)
    cumulative, acc = [], 0
    for _, prob in nu.entries:
        acc += int(prob * den)
        cumulative.append(acc)
    counts = [0] * len(nu.entries)
    for i in range(m):
        u = _draw_below(seed, attempt, i, den)
        counts[next(j for j, c in enumerate(cumulative) if u < c)] += 1
    return counts


def max_disagreement(nu: PolynomialDistribution, counts: Sequence[int], f: BooleanFunction) -> int:
    """``max_x |{i : F_i(x) != f(x)}|`` for the sample described by ``counts``."""
    target = f.values()
    worst = [0] * len(target)
    for (F, _), c in zip(nu.entries, counts):
        if c:
            for x, v in enumerate(F.values()):
                if v != target[x]:
                    worst[x] += c
    return max(worst, default=0)


def compose_distribution(
    nu: PolynomialDistribution,
    f: BooleanFunction,
    eps,
    m: int | None = None,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
) -> MultilinearTorusPolynomial:
    """Single torus polynomial from a distribution that agrees with ``f`` pointwise w.p. ``1 - eps``.

    Draws ``m`` polynomials, accepts the sample only if every point has at
    most ``2 eps m`` disagreements (otherwise redraws, up to ``retries``
    times), and sums the lifts of the drawn polynomials with
    ``alpha = 1/(2m)`` and error ``eps/m``.  An accepted result is within
    ``3 eps`` of ``f/2``.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if f.n != nu.n:
        raise DimensionMismatch(f"distribution has n={nu.n}, target has n={f.n}")
    if m is None:
        m = default_sample_count(f.n, eps)
    if m < 1:
        raise ValueError("sample size m must be >= 1")
    for attempt in range(retries):
        counts = sample_counts(nu, m, seed, attempt)
        if max_disagreement(nu, counts, f) <= 2 * eps * m:
            break
    else:
        raise SamplingFailed(f"{retries} samples of size {m} all exceeded {2 * eps * m} disagreements")
    alpha, lift_eps = Fraction(1, 2 * m), eps / m
    result = MultilinearTorusPolynomial(f.n)
    # identical draws share one lift
    for (F, _), c in zip(nu.entries, counts):
        if c:
            result = result + lift_field_polynomial(F, alpha, lift_eps).scale(c)
    return result

