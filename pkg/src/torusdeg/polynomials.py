"""Polynomial families over the Boolean cube.

Multilinear polynomials are keyed by *masks*: bit ``i`` of a mask stands for
variable ``x_{i+1}``, matching the little-endian point indexing of
:mod:`torusdeg.boolean`.  The ``from_subsets`` constructors take 1-based
variable labels, as in ``x_1, ..., x_n``.

Torus coefficients are stored reduced into ``[0, 1)``.  This never changes
a value on ``{0,1}^n`` because every monomial is integer valued there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .boolean import coerce_point, popcount
from .errors import DimensionMismatch
from .primes import is_prime
from .torus import TorusValue, as_rational, frac_mod1, lcm_of_denominators

# numpy int64 paths are used only while every intermediate stays below this
_INT64_SAFE = 1 << 61


# ---------------------------------------------------------------------------
# masks and cube transforms


def subset_mask(variables: Iterable[int], n: int) -> int:
    """Mask of a set of 1-based variable labels."""
    mask = 0
    for v in variables:
        if not 1 <= v <= n:
            raise DimensionMismatch(f"variable x_{v} out of range for n={n}")
        mask |= 1 << (v - 1)
    return mask


def mask_variables(mask: int) -> list[int]:
    """1-based labels of the variables in a mask, sorted."""
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _check_cube_size(values: Sequence, n: int):
    if len(values) != 1 << n:
        raise DimensionMismatch(f"expected {1 << n} entries, got {len(values)}")


def zeta_transform(coeffs: Sequence[int], n: int, modulus: int | None = None) -> list[int]:
    """Evaluate a multilinear polynomial on every point of the cube.

    ``coeffs[S]`` is the coefficient of the monomial with mask ``S``; the
    result has ``out[x] = sum_{S subset of x} coeffs[S]`` (reduced mod
    ``modulus`` when given).
    """
    _check_cube_size(coeffs, n)
    if modulus is not None and 0 < modulus < _INT64_SAFE // 2:
        arr = np.asarray([c % modulus for c in coeffs], dtype=np.int64)
        for i in range(n):
            view = arr.reshape(-1, 2, 1 << i)
            view[:, 1, :] += view[:, 0, :]
            view[:, 1, :] %= modulus
        return arr.tolist()
    out = list(coeffs)
    for i in range(n):
        bit = 1 << i
        for x in range(1 << n):
            if x & bit:
                out[x] += out[x ^ bit]
    if modulus is not None:
        out = [v % modulus for v in out]
    return out


def mobius_transform(values: Sequence[int], n: int, modulus: int | None = None) -> list[int]:
    """Inverse of :func:`zeta_transform`: multilinear coefficients from values."""
    _check_cube_size(values, n)
    if modulus is not None and 0 < modulus < _INT64_SAFE // 2:
        arr = np.asarray([v % modulus for v in values], dtype=np.int64)
        for i in range(n):
            view = arr.reshape(-1, 2, 1 << i)
            view[:, 1, :] -= view[:, 0, :]
            view[:, 1, :] %= modulus
        return arr.tolist()
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for x in range(1 << n):
            if x & bit:
                out[x] -= out[x ^ bit]
    if modulus is not None:
        out = [v % modulus for v in out]
    return out


def _ml_mul(a: Mapping[int, int], b: Mapping[int, int], modulus: int | None = None) -> dict[int, int]:
    """Product of two multilinear polynomials, multilinearized (x_i^2 = x_i)."""
    out: dict[int, int] = {}
    for sa, ca in a.items():
        for sb, cb in b.items():
            s = sa | sb
            out[s] = out.get(s, 0) + ca * cb
    if modulus is not None:
        return {s: c % modulus for s, c in out.items() if c % modulus}
    return {s: c for s, c in out.items() if c}


# ---------------------------------------------------------------------------
# combinatorial tables


@lru_cache(maxsize=None)
def stirling2_row(j: int) -> tuple[int, ...]:
    """``S(j, s)`` for ``s = 0..j`` (Stirling numbers of the second kind)."""
    row = [1]
    for m in range(1, j + 1):
        new = [0] * (m + 1)
        for s in range(1, m + 1):
            new[s] = s * (row[s] if s < len(row) else 0) + row[s - 1]
        row = new
    return tuple(row)


@lru_cache(maxsize=None)
def falling_factorial_coeffs(m: int) -> tuple[int, ...]:
    """Power-basis coefficients of ``w (w-1) ... (w-m+1)``, lowest degree first."""
    poly = [1]
    for r in range(m):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= r * c
        poly = nxt
    return tuple(poly)


def reduce_on_weights(coeffs: Sequence, n: int) -> list:
    """Reduce a power-basis polynomial to degree <= n without changing its
    values at ``w = 0..n``.

    Works by division by the monic integer polynomial ``w (w-1) ... (w-n)``,
    which vanishes on every weight; integer coefficients stay integers.
    """
    c = list(coeffs)
    if len(c) <= n + 1:
        return c
    ff = falling_factorial_coeffs(n + 1)
    for j in range(len(c) - 1, n, -1):
        top = c[j]
        if top:
            shift = j - (n + 1)
            for i in range(n + 1):
                c[shift + i] -= top * ff[i]
        c[j] = 0
    return c[: n + 1]


def forward_differences(values: Sequence[int]) -> list[int]:
    """``[Delta^s v (0) for s in range(len(values))]``."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def binomial_to_power(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Rewrite ``sum_s b_s C(w, s)`` in the power basis ``sum_j c_j w^j``."""
    out = [Fraction(0)] * len(coeffs)
    for s, b in enumerate(coeffs):
        if not b:
            continue
        scaled = b / math.factorial(s)
        for j, st in enumerate(falling_factorial_coeffs(s)):
            if st:
                out[j] += scaled * st
    return out


# ---------------------------------------------------------------------------
# torus polynomials


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True, eq=False)
class MultilinearTorusPolynomial:
    """``P(x) = sum_S P_S prod_{i in S} x_i (mod 1)`` on ``{0,1}^n``."""

    n: int
    terms: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        limit = 1 << self.n
        for mask, c in self.terms.items():
            if not 0 <= mask < limit:
                raise DimensionMismatch(f"monomial mask {mask:#x} out of range for n={self.n}")
            c = frac_mod1(as_rational(c))
            if c:
                clean[mask] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def from_subsets(cls, n: int, terms: Mapping[Iterable[int], object]) -> MultilinearTorusPolynomial:
        """Build from ``{(1, 3): Fraction(1, 2), (): c0, ...}`` with 1-based labels."""
        out: dict[int, Fraction] = {}
        for variables, c in terms.items():
            mask = subset_mask(variables, n)
            out[mask] = out.get(mask, Fraction(0)) + as_rational(c)
        return cls(n, out)

    @classmethod
    def constant(cls, n: int, c) -> MultilinearTorusPolynomial:
        return cls(n, {0: as_rational(c)})

    @classmethod
    def from_values(cls, n: int, values: Sequence) -> MultilinearTorusPolynomial:
        """Unique multilinear interpolant of a table of rationals (mod 1)."""
        vals = [as_rational(v) for v in values]
        den = lcm_of_denominators(vals)
        nums = [int(v * den) for v in vals]
        coeffs = mobius_transform(nums, n, modulus=den)
        return cls(n, {s: Fraction(c, den) for s, c in enumerate(coeffs) if c})

    def __eq__(self, other):
        if not isinstance(other, MultilinearTorusPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def __repr__(self):
        body = ", ".join(f"{mask_variables(s)}: {c}" for s, c in self.terms.items())
        return f"MultilinearTorusPolynomial(n={self.n}, {{{body}}})"

    @property
    def degree(self) -> int:
        """Largest monomial size with a nonzero coefficient (0 for the zero polynomial)."""
        return max((popcount(s) for s in self.terms), default=0)

    def coefficient(self, variables: Iterable[int] = ()) -> Fraction:
        return self.terms.get(subset_mask(variables, self.n), Fraction(0))

    def _check_same_n(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")

    def __add__(self, other):
        if not isinstance(other, MultilinearTorusPolynomial):
            return NotImplemented
        self._check_same_n(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, Fraction(0)) + c
        return MultilinearTorusPolynomial(self.n, out)

    def __neg__(self):
        return MultilinearTorusPolynomial(self.n, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultilinearTorusPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> MultilinearTorusPolynomial:
        """Integer multiple; non-integer scaling is not well defined mod 1."""
        if not isinstance(k, int):
            raise TypeError("torus polynomials can only be scaled by integers")
        return MultilinearTorusPolynomial(self.n, {s: c * k for s, c in self.terms.items()})

    def evaluate(self, x) -> TorusValue:
        idx = coerce_point(x, self.n)
        return TorusValue(sum((c for s, c in self.terms.items() if s & idx == s), Fraction(0)))

    def value_numerators(self) -> tuple[int, list[int]]:
        """``(D, nums)`` with ``P(x) = nums[x] / D (mod 1)`` for every point index."""
        den = lcm_of_denominators(self.terms.values())
        dense = [0] * (1 << self.n)
        for s, c in self.terms.items():
            dense[s] = c.numerator * (den // c.denominator)
        return den, zeta_transform(dense, self.n, modulus=den)

    def values(self) -> list[TorusValue]:
        den, nums = self.value_numerators()
        return [TorusValue(Fraction(v, den)) for v in nums]


@dataclass(frozen=True, eq=False)
class SymmetricTorusPolynomial:
    """``Q(x) = sum_j c_j |x|^j (mod 1)``, stored with degree <= n."""

    n: int
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        c = [as_rational(v) for v in self.coeffs]
        c = reduce_on_weights(c, self.n)
        c = _strip([frac_mod1(v) for v in c])
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_weight_values(cls, n: int, values: Sequence) -> SymmetricTorusPolynomial:
        """The symmetric polynomial of degree <= n taking ``values[w]`` at weight ``w`` (mod 1)."""
        if len(values) != n + 1:
            raise DimensionMismatch(f"expected {n + 1} weight values, got {len(values)}")
        diffs = forward_differences([as_rational(v) for v in values])
        return cls(n, tuple(binomial_to_power(diffs)))

    def __eq__(self, other):
        if not isinstance(other, SymmetricTorusPolynomial):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"SymmetricTorusPolynomial(n={self.n}, coeffs=({', '.join(map(str, self.coeffs))}))"

    @property
    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j] if j < len(self.coeffs) else Fraction(0)

    def _check_same_n(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")

    def __add__(self, other):
        if not isinstance(other, SymmetricTorusPolynomial):
            return NotImplemented
        self._check_same_n(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return SymmetricTorusPolynomial(self.n, tuple(self.coefficient(j) + other.coefficient(j) for j in range(m)))

    def __neg__(self):
        return SymmetricTorusPolynomial(self.n, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, SymmetricTorusPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> SymmetricTorusPolynomial:
        if not isinstance(k, int):
            raise TypeError("torus polynomials can only be scaled by integers")
        return SymmetricTorusPolynomial(self.n, tuple(c * k for c in self.coeffs))

    def evaluate_weight(self, w: int) -> TorusValue:
        if not 0 <= w <= self.n:
            raise DimensionMismatch(f"weight {w} out of range for n={self.n}")
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return TorusValue(acc)

    def evaluate(self, x) -> TorusValue:
        return self.evaluate_weight(popcount(coerce_point(x, self.n)))

    def weight_numerators(self) -> tuple[int, list[int]]:
        """``(D, nums)`` with ``Q(w) = nums[w] / D (mod 1)`` for ``w = 0..n``."""
        den = lcm_of_denominators(self.coeffs)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        out = []
        for w in range(self.n + 1):
            acc = 0
            for c in reversed(ints):
                acc = (acc * w + c) % den
            out.append(acc)
        return den, out

    def weight_values(self) -> list[TorusValue]:
        den, nums = self.weight_numerators()
        return [TorusValue(Fraction(v, den)) for v in nums]

    def shifted(self, offset: int, n: int) -> SymmetricTorusPolynomial:
        """``w -> Q(w + offset)`` as a polynomial on ``n`` variables.

        This is the restriction obtained by fixing ``offset`` of the inputs
        to one (and any others to zero).
        """
        out = [Fraction(0)] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            for i in range(j + 1):
                out[i] += c * math.comb(j, i) * offset ** (j - i)
        return SymmetricTorusPolynomial(n, tuple(out))


def symmetric_to_multilinear(q: SymmetricTorusPolynomial) -> MultilinearTorusPolynomial:
    """Rewrite ``sum_j c_j |x|^j`` in the subset basis.

    On the cube, ``|x|^j = sum_s s! S(j, s) e_s(x)`` where ``e_s`` is the
    elementary symmetric polynomial of degree ``s``.
    """
    n = q.n
    per_size = [Fraction(0)] * (q.degree + 1)
    for j, c in enumerate(q.coeffs):
        if not c:
            continue
        row = stirling2_row(j)
        for s in range(min(j, n) + 1):
            if row[s]:
                per_size[s] += c * math.factorial(s) * row[s]
    terms = {}
    for mask in range(1 << n):
        s = popcount(mask)
        if s < len(per_size) and per_size[s]:
            terms[mask] = per_size[s]
    return MultilinearTorusPolynomial(n, terms)


def multilinearize(terms: Mapping[Sequence[int], object], n: int | None = None) -> MultilinearTorusPolynomial:
    """Replace ``x_i^a`` by ``x_i`` (``a >= 1``) in a general polynomial.

    ``terms`` maps exponent vectors ``(a_1, ..., a_n)`` to rational
    coefficients.
    """
    if n is None:
        n = max((len(e) for e in terms), default=0)
    out: dict[int, Fraction] = {}
    for exps, c in terms.items():
        if len(exps) != n:
            raise DimensionMismatch(f"exponent vector {tuple(exps)} has length {len(exps)}, expected {n}")
        if any(a < 0 for a in exps):
            raise ValueError("negative exponent")
        mask = sum(1 << i for i, a in enumerate(exps) if a)
        out[mask] = out.get(mask, Fraction(0)) + as_rational(c)
    return MultilinearTorusPolynomial(n, out)


# ---------------------------------------------------------------------------
# polynomials over F_p and Z


@dataclass(frozen=True, eq=False)
class FieldPolynomial:
    """Multilinear polynomial over the prime field ``F_p``."""

    p: int
    n: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        limit = 1 << self.n
        clean = {}
        for mask, c in self.terms.items():
            if not 0 <= mask < limit:
                raise DimensionMismatch(f"monomial mask {mask:#x} out of range for n={self.n}")
            c = int(c) % self.p
            if c:
                clean[mask] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def from_subsets(cls, p: int, n: int, terms: Mapping[Iterable[int], int]) -> FieldPolynomial:
        out: dict[int, int] = {}
        for variables, c in terms.items():
            mask = subset_mask(variables, n)
            out[mask] = out.get(mask, 0) + int(c)
        return cls(p, n, out)

    @classmethod
    def from_values(cls, p: int, n: int, values: Sequence[int]) -> FieldPolynomial:
        coeffs = mobius_transform(list(values), n, modulus=p)
        return cls(p, n, {s: c for s, c in enumerate(coeffs) if c})

    def __eq__(self, other):
        if not isinstance(other, FieldPolynomial):
            return NotImplemented
        return (self.p, self.n, self.terms) == (other.p, other.n, other.terms)

    def __hash__(self):
        return hash((self.p, self.n, tuple(self.terms.items())))

    def __repr__(self):
        body = ", ".join(f"{mask_variables(s)}: {c}" for s, c in self.terms.items())
        return f"FieldPolynomial(p={self.p}, n={self.n}, {{{body}}})"

    @property
    def degree(self) -> int:
        return max((popcount(s) for s in self.terms), default=0)

    def _check_compatible(self, other):
        if (self.p, self.n) != (other.p, other.n):
            raise DimensionMismatch(f"(p, n)=({self.p}, {self.n}) vs ({other.p}, {other.n})")

    def __add__(self, other):
        if not isinstance(other, FieldPolynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return FieldPolynomial(self.p, self.n, out)

    def __neg__(self):
        return FieldPolynomial(self.p, self.n, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldPolynomial(self.p, self.n, {s: c * other for s, c in self.terms.items()})
        if not isinstance(other, FieldPolynomial):
            return NotImplemented
        self._check_compatible(other)
        return FieldPolynomial(self.p, self.n, _ml_mul(self.terms, other.terms, self.p))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldPolynomial:
        """Multilinearized power ``F^e``."""
        if e < 0:
            raise ValueError("negative exponent")
        if self.n <= 16:
            vals = [pow(v, e, self.p) for v in self.values()]
            return FieldPolynomial.from_values(self.p, self.n, vals)
        result: dict[int, int] = {0: 1}
        base = dict(self.terms)
        while e:
            if e & 1:
                result = _ml_mul(result, base, self.p)
            e >>= 1
            if e:
                base = _ml_mul(base, base, self.p)
        return FieldPolynomial(self.p, self.n, result)

    def evaluate(self, x) -> int:
        idx = coerce_point(x, self.n)
        return sum(c for s, c in self.terms.items() if s & idx == s) % self.p

    def values(self) -> list[int]:
        dense = [0] * (1 << self.n)
        for s, c in self.terms.items():
            dense[s] = c
        return zeta_transform(dense, self.n, modulus=self.p)

    def to_integer(self) -> IntegerPolynomial:
        """The integer polynomial with the same coefficients in ``{0, ..., p-1}``."""
        return IntegerPolynomial.from_masks(self.n, self.terms)


@dataclass(frozen=True, eq=False)
class IntegerPolynomial:
    """Polynomial with integer coefficients keyed by exponent vectors.

    Univariate polynomials (amplifiers) use ``n = 1`` and keys ``(j,)``.
    Multivariate polynomials used on the cube are kept multilinear.
    """

    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(int(a) for a in exps)
            if len(exps) != self.n:
                raise DimensionMismatch(f"exponent vector {exps} has length {len(exps)}, expected {self.n}")
            if any(a < 0 for a in exps):
                raise ValueError("negative exponent")
            c = int(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        object.__setattr__(self, "terms", dict(sorted((e, c) for e, c in clean.items() if c)))

    @classmethod
    def univariate(cls, coeffs: Sequence[int]) -> IntegerPolynomial:
        """From coefficients ``[a_0, a_1, ...]`` of ``sum a_j x^j``."""
        return cls(1, {(j,): c for j, c in enumerate(coeffs) if c})

    @classmethod
    def from_masks(cls, n: int, terms: Mapping[int, int]) -> IntegerPolynomial:
        return cls(n, {tuple((s >> i) & 1 for i in range(n)): c for s, c in terms.items()})

    @classmethod
    def from_subsets(cls, n: int, terms: Mapping[Iterable[int], int]) -> IntegerPolynomial:
        out: dict[int, int] = {}
        for variables, c in terms.items():
            mask = subset_mask(variables, n)
            out[mask] = out.get(mask, 0) + int(c)
        return cls.from_masks(n, out)

    def __eq__(self, other):
        if not isinstance(other, IntegerPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def __repr__(self):
        return f"IntegerPolynomial(n={self.n}, {dict(self.terms)})"

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    @property
    def is_multilinear(self) -> bool:
        return all(a <= 1 for e in self.terms for a in e)

    def coefficients(self) -> list[int]:
        """Dense coefficient list of a univariate polynomial."""
        if self.n != 1:
            raise DimensionMismatch("coefficients() is only defined for univariate polynomials")
        out = [0] * (self.degree + 1)
        for (j,), c in self.terms.items():
            out[j] = c
        return out

    def mask_terms(self) -> dict[int, int]:
        """Coefficients keyed by monomial mask (after multilinearization)."""
        out: dict[int, int] = {}
        for exps, c in self.terms.items():
            s = sum(1 << i for i, a in enumerate(exps) if a)
            out[s] = out.get(s, 0) + c
        return {s: c for s, c in out.items() if c}

    def multilinearize(self) -> IntegerPolynomial:
        return IntegerPolynomial.from_masks(self.n, self.mask_terms())

    def __add__(self, other):
        if not isinstance(other, IntegerPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntegerPolynomial(self.n, out)

    def __neg__(self):
        return IntegerPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(self.n, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, IntegerPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return IntegerPolynomial(self.n, out)

    __rmul__ = __mul__

    def evaluate(self, x: Sequence[int] | int) -> int:
        """Value at an integer point (any integers, not only bits)."""
        if isinstance(x, int):
            x = (x,)
        if len(x) != self.n:
            raise DimensionMismatch(f"point has {len(x)} coordinates, expected {self.n}")
        total = 0
        for exps, c in self.terms.items():
            term = c
            for xi, a in zip(x, exps):
                if a:
                    term *= xi**a
            total += term
        return total

    def values(self, modulus: int | None = None) -> list[int]:
        """Values on every point of ``{0,1}^n`` (point-index order)."""
        dense = [0] * (1 << self.n)
        for s, c in self.mask_terms().items():
            dense[s] = c
        return zeta_transform(dense, self.n, modulus=modulus)

    def compose_univariate(self, outer: IntegerPolynomial, modulus: int | None = None) -> IntegerPolynomial:
        """Multilinearized ``outer(self(x))`` with coefficients reduced mod ``modulus``.

        The result agrees with ``outer(self(x))`` (mod ``modulus``) at every
        point of the cube.
        """
        if outer.n != 1:
            raise DimensionMismatch("outer polynomial must be univariate")
        a = outer.coefficients()
        n = self.n
        if n <= 20:
            vals = []
            for v in self.values():
                acc = 0
                for c in reversed(a):
                    acc = acc * v + c
                    if modulus is not None:
                        acc %= modulus
                vals.append(acc)
            coeffs = mobius_transform(vals, n, modulus=modulus)
            return IntegerPolynomial.from_masks(n, {s: c for s, c in enumerate(coeffs) if c})
        inner = self.mask_terms()
        acc: dict[int, int] = {}
        for c in reversed(a):
            acc = _ml_mul(acc, inner, modulus)
            if c:
                acc[0] = acc.get(0, 0) + c
                if modulus is not None:
                    acc[0] %= modulus
        return IntegerPolynomial.from_masks(n, {s: c for s, c in acc.items() if c})


def univariate_compose(outer: Sequence[int], inner: Sequence[int], modulus: int | None = None) -> list[int]:
    """Coefficients of ``outer(inner(w))`` for dense univariate coefficient lists."""
    result: list[int] = []
    for c in reversed(outer):
        # result = result * inner + c
        prod = [0] * (len(result) + len(inner) - 1) if result else []
        for i, a in enumerate(result):
            if a:
                for j, b in enumerate(inner):
                    prod[i + j] += a * b
        if not prod:
            prod = [0]
        prod[0] += c
        if modulus is not None:
            prod = [v % modulus for v in prod]
        result = prod
    return _strip(result) or [0]


# ---------------------------------------------------------------------------
# nonclassical polynomials


@dataclass(frozen=True, eq=False)
class NonclassicalPolynomial:
    """``alpha + sum c_{S,k} / 2^{k+1} prod_{i in S} x_i (mod 1)`` with ``c_{S,k} in {0,1}``.

    Only the keys ``(mask, k)`` with ``c_{S,k} = 1`` are stored; every key
    satisfies ``S != {}`` and ``|S| + k <= degree_bound``.
    """

    n: int
    shift: TorusValue
    bits: frozenset = frozenset()
    degree_bound: int = 0

    def __post_init__(self):
        if not isinstance(self.shift, TorusValue):
            object.__setattr__(self, "shift", TorusValue(as_rational(self.shift)))
        bits = frozenset((int(s), int(k)) for s, k in self.bits)
        for s, k in bits:
            if s == 0 or not 0 < s < (1 << self.n):
                raise DimensionMismatch(f"bad monomial mask {s:#x} for n={self.n}")
            if k < 0:
                raise ValueError("bit position k must be non-negative")
            if popcount(s) + k > self.degree_bound:
                raise ValueError(f"key (|S|={popcount(s)}, k={k}) exceeds degree bound {self.degree_bound}")
        object.__setattr__(self, "bits", bits)

    def __eq__(self, other):
        if not isinstance(other, NonclassicalPolynomial):
            return NotImplemented
        return (self.n, self.shift, self.bits, self.degree_bound) == (
            other.n, other.shift, other.bits, other.degree_bound)

    def __hash__(self):
        return hash((self.n, self.shift, self.bits, self.degree_bound))

    def coefficient(self, variables: Iterable[int]) -> Fraction:
        mask = subset_mask(variables, self.n)
        return sum((Fraction(1, 2 ** (k + 1)) for s, k in self.bits if s == mask), Fraction(0))

    def to_multilinear(self) -> MultilinearTorusPolynomial:
        terms: dict[int, Fraction] = {0: self.shift.value}
        for s, k in self.bits:
            terms[s] = terms.get(s, Fraction(0)) + Fraction(1, 2 ** (k + 1))
        return MultilinearTorusPolynomial(self.n, terms)

    def evaluate(self, x) -> TorusValue:
        idx = coerce_point(x, self.n)
        total = self.shift.value
        for s, k in self.bits:
            if s & idx == s:
                total += Fraction(1, 2 ** (k + 1))
        return TorusValue(total)
