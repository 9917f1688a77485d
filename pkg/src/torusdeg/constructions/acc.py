"""Torus polynomials from integer polynomials with a padded output bit."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..boolean import BooleanFunction, index_bits
from ..errors import CertificateViolation, DimensionMismatch
from ..polynomials import IntegerPolynomial, MultilinearTorusPolynomial


@dataclass(frozen=True)
class AccCertificate:
    """Integer polynomial ``F`` whose bit ``k`` is ``f(x)``, padded by zeros.

    At every point, ``F(x) mod 2^(k+e) = f(x) 2^k + E(x)`` with
    ``0 <= E(x) <= 2^(k-e)``.  Checked on construction.
    """

    F: IntegerPolynomial
    k: int
    e: int
    depth: int
    f: BooleanFunction

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("e must be >= 1")
        if self.k < self.e:
            raise ValueError("k must be >= e")
        if self.F.n != self.f.n:
            raise DimensionMismatch(f"F has n={self.F.n}, f has n={self.f.n}")
        if not self.F.is_multilinear:
            object.__setattr__(self, "F", self.F.multilinearize())
        self.verify()

    def errors(self) -> list[int]:
        """``E(x)`` at every point index (may be out of range if the certificate is bad)."""
        modulus = 2 ** (self.k + self.e)
        top = 2**self.k
        return [v % modulus - b * top for v, b in zip(self.F.values(), self.f.values())]

    def verify(self):
        bound = 2 ** (self.k - self.e)
        for x, err in enumerate(self.errors()):
            if not 0 <= err <= bound:
                raise CertificateViolation(
                    f"at x={''.join(map(str, index_bits(x, self.f.n)))}: E(x)={err} not in [0, {bound}]"
                )


def acc_lift(cert: AccCertificate) -> MultilinearTorusPolynomial:
    """``F(x) / 2^(k+1) (mod 1)``, within ``2^-e`` of ``f/2`` everywhere."""
    cert.verify()
    den = 2 ** (cert.k + 1)
    return MultilinearTorusPolynomial(cert.F.n, {s: Fraction(c, den) for s, c in cert.F.mask_terms().items()})
