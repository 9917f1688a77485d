"""Exact rationals and points of the circle group R/Z.

Rationals are plain :class:`fractions.Fraction` objects, which are always
kept in lowest terms with a positive denominator.  A :class:`TorusValue`
is a rational reduced into ``[0, 1)``.
"""

from __future__ import annotations

import decimal
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import MalformedInput

RationalLike = Union[int, Fraction]

HALF = Fraction(1, 2)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are refused: every quantity in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"``; decimal and float literals are rejected."""
    if not isinstance(text, str):
        raise MalformedInput(f"rational must be a string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise MalformedInput(f"not an exact rational 'num/den': {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise MalformedInput(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(r: RationalLike) -> str:
    """Canonical ``"num/den"`` form (denominator always written)."""
    r = as_rational(r)
    return f"{r.numerator}/{r.denominator}"


def format_decimal(r: RationalLike, digits: int = 12) -> str:
    """Human-readable rendering with ``digits`` significant digits."""
    r = as_rational(r)
    ctx = decimal.Context(prec=digits)
    value = ctx.divide(decimal.Decimal(r.numerator), decimal.Decimal(r.denominator))
    return format(value, "g") if value != 0 else "0"


def frac_mod1(r: Fraction) -> Fraction:
    """Fractional part ``r - floor(r)``."""
    return Fraction(r.numerator % r.denominator, r.denominator)


@dataclass(frozen=True, order=True)
class TorusValue:
    """A point of R/Z, stored as its representative in ``[0, 1)``.

    The constructor reduces its argument, so ``TorusValue(Fraction(13, 5))``
    is the same point as ``TorusValue(Fraction(3, 5))``.
    """

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", frac_mod1(as_rational(self.value)))

    def __add__(self, other):
        if isinstance(other, TorusValue):
            return TorusValue(self.value + other.value)
        if isinstance(other, (int, Fraction)):
            return TorusValue(self.value + other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TorusValue):
            return TorusValue(self.value - other.value)
        if isinstance(other, (int, Fraction)):
            return TorusValue(self.value - other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return TorusValue(other - self.value)
        return NotImplemented

    def __neg__(self):
        return TorusValue(-self.value)

    def __mul__(self, k):
        # only integer multiples are well defined on R/Z
        if isinstance(k, int) and not isinstance(k, bool):
            return TorusValue(self.value * k)
        return NotImplemented

    __rmul__ = __mul__

    def iota(self) -> Fraction:
        return iota(self)

    def norm(self) -> Fraction:
        return torus_norm(self)

    def __str__(self):
        return format_rational(self.value)


def torus_reduce(r: RationalLike) -> TorusValue:
    """``r mod 1`` as a torus value."""
    return TorusValue(as_rational(r))


def iota(z: TorusValue | RationalLike) -> Fraction:
    """Representative of ``z`` in ``[-1/2, 1/2)``."""
    v = z.value if isinstance(z, TorusValue) else frac_mod1(as_rational(z))
    return v - 1 if v >= HALF else v


def torus_norm(z: TorusValue | RationalLike) -> Fraction:
    """Distance from ``z`` to the nearest integer, in ``[0, 1/2]``."""
    return abs(iota(z))


def norm_of_residue(num: int, den: int) -> Fraction:
    """Torus norm of ``num/den`` computed with integers only."""
    r = num % den
    return Fraction(min(r, den - r), den)


def lcm_of_denominators(values) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, v.denominator)
    return d
