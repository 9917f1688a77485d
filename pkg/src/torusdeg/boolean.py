"""Boolean functions on the cube and their symmetric (weight) profiles.

Points of ``{0,1}^n`` are indexed little-endian: ``x_1`` is the least
significant bit of the index, ``x_n`` the most significant.  The truth
table of a function is an ``int`` whose bit ``i`` is ``f(point i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MalformedInput


def popcount(i: int) -> int:
    return bin(i).count("1")


def point_index(bits: Sequence[int]) -> int:
    """Index of the point ``(x_1, ..., x_n)``."""
    idx = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"coordinate {i + 1} is {b!r}, expected 0 or 1")
        idx |= b << i
    return idx


def index_bits(idx: int, n: int) -> tuple[int, ...]:
    return tuple((idx >> i) & 1 for i in range(n))


def coerce_point(x, n: int) -> int:
    """Accept a bit sequence, a ``"0110"`` string (x_1 first) or an index."""
    if isinstance(x, int) and not isinstance(x, bool):
        if not 0 <= x < (1 << n):
            raise DimensionMismatch(f"point index {x} out of range for n={n}")
        return x
    if isinstance(x, str):
        x = [int(c) for c in x]
    x = list(x)
    if len(x) != n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {n}")
    return point_index(x)


@dataclass(frozen=True)
class BooleanFunction:
    """A function ``{0,1}^n -> {0,1}`` stored as a dense truth table."""

    n: int
    table: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.table < (1 << (1 << self.n)):
            raise DimensionMismatch(f"truth table does not fit 2^{self.n} entries")

    @classmethod
    def from_values(cls, n: int, values: Iterable[int]) -> BooleanFunction:
        values = list(values)
        if len(values) != 1 << n:
            raise DimensionMismatch(f"expected {1 << n} values, got {len(values)}")
        table = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"value {v!r} at index {i} is not Boolean")
            table |= v << i
        return cls(n, table)

    @classmethod
    def from_callable(cls, n: int, fn) -> BooleanFunction:
        return cls.from_values(n, (int(bool(fn(index_bits(i, n)))) for i in range(1 << n)))

    @property
    def size(self) -> int:
        return 1 << self.n

    def __call__(self, x) -> int:
        return (self.table >> coerce_point(x, self.n)) & 1

    def values(self) -> list[int]:
        t = self.table
        return [(t >> i) & 1 for i in range(1 << self.n)]

    def is_symmetric(self) -> bool:
        seen: dict[int, int] = {}
        for i, v in enumerate(self.values()):
            w = popcount(i)
            if seen.setdefault(w, v) != v:
                return False
        return True

    def to_profile(self) -> SymmetricProfile:
        """Weight profile; raises ``ValueError`` if the function is not symmetric."""
        bits = [None] * (self.n + 1)
        for i, v in enumerate(self.values()):
            w = popcount(i)
            if bits[w] is None:
                bits[w] = v
            elif bits[w] != v:
                raise ValueError("function is not symmetric")
        return SymmetricProfile(self.n, tuple(bits))

    def to_hex(self) -> str:
        return format(self.table, "x")

    @classmethod
    def from_hex(cls, n: int, text: str) -> BooleanFunction:
        try:
            table = int(text, 16) if text else 0
        except ValueError:
            raise MalformedInput(f"bad hex truth table {text!r}") from None
        return cls(n, table)


@dataclass(frozen=True)
class SymmetricProfile:
    """Values ``(b_0, ..., b_n)`` of a symmetric function by Hamming weight."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.n + 1:
            raise DimensionMismatch(f"profile has {len(vals)} entries, expected {self.n + 1}")
        if any(v not in (0, 1) for v in vals):
            raise ValueError("profile entries must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: str) -> SymmetricProfile:
        if not bits or any(c not in "01" for c in bits):
            raise MalformedInput(f"bad profile bit string {bits!r}")
        return cls(len(bits) - 1, tuple(int(c) for c in bits))

    @property
    def bits(self) -> str:
        return "".join(str(v) for v in self.values)

    def __call__(self, weight: int) -> int:
        return self.values[weight]

    def to_function(self) -> BooleanFunction:
        vals = self.values
        return BooleanFunction.from_values(self.n, (vals[popcount(i)] for i in range(1 << self.n)))


def delta(n: int, w: int) -> SymmetricProfile:
    """Indicator of Hamming weight exactly ``w``."""
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range [0, {n}]")
    return SymmetricProfile(n, tuple(int(v == w) for v in range(n + 1)))


def delta_at_least(n: int, w: int) -> SymmetricProfile:
    """Indicator of Hamming weight at least ``w`` (``w = n + 1`` gives zero)."""
    if not 0 <= w <= n + 1:
        raise ValueError(f"threshold {w} out of range [0, {n + 1}]")
    return SymmetricProfile(n, tuple(int(v >= w) for v in range(n + 1)))


def majority(n: int) -> SymmetricProfile:
    """``1`` iff ``|x| >= n/2``."""
    return SymmetricProfile(n, tuple(int(2 * v >= n) for v in range(n + 1)))


def parity(n: int) -> SymmetricProfile:
    return SymmetricProfile(n, tuple(v % 2 for v in range(n + 1)))


def and_function(n: int) -> SymmetricProfile:
    return delta(n, n)


def constant(n: int, value: int = 0) -> SymmetricProfile:
    return SymmetricProfile(n, (value,) * (n + 1))
