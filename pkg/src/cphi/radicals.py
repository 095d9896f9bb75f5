"""Exact values of the form r * i**m * sqrt(s).

Gauss sums and cusp constants in this project all live in the closed
multiplicative system {rational * i**m * sqrt(squarefree)}: every phase that
occurs is a fourth root of unity (the eighth-root exponents (1 - N*d)/8 that
appear for cusp constants are always even multiples of 1/8 because N and d
are odd).  Keeping the radical one-dimensional avoids cyclotomic arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import squarefree_split


@dataclass(frozen=True)
class QuarterRadical:
    """Normalized value coeff * i**i_exp * sqrt(radicand).

    Normal form: i_exp in {0, 1} (i**2 folded into the sign of coeff),
    radicand a squarefree positive integer (denominators and square parts
    moved into coeff), and the zero value stored as (0, 0, 1).  Equality of
    normal forms is exact value equality.
    """

    coeff: Fraction
    i_exp: int = 0
    radicand: Fraction | int = 1

    def __post_init__(self):
        c = Fraction(self.coeff)
        r = Fraction(self.radicand)
        if r <= 0:
            raise ValueError(f"radicand must be positive, got {r}")
        m1, s1 = squarefree_split(r.numerator)
        m2, s2 = squarefree_split(r.denominator)
        # sqrt(s1/s2) = sqrt(s1*s2)/s2
        c *= Fraction(m1, m2 * s2)
        rad = s1 * s2
        m = self.i_exp % 4
        if m >= 2:
            c = -c
            m -= 2
        if c == 0:
            m, rad = 0, 1
        object.__setattr__(self, "coeff", c)
        object.__setattr__(self, "i_exp", m)
        object.__setattr__(self, "radicand", rad)

    # -- constructors ------------------------------------------------------

    @classmethod
    def one(cls) -> "QuarterRadical":
        return cls(Fraction(1))

    @classmethod
    def zero(cls) -> "QuarterRadical":
        return cls(Fraction(0))

    @classmethod
    def i_power(cls, m: int) -> "QuarterRadical":
        return cls(Fraction(1), m, 1)

    @classmethod
    def sqrt_of(cls, x) -> "QuarterRadical":
        return cls(Fraction(1), 0, x)

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, QuarterRadical):
            return QuarterRadical(
                self.coeff * other.coeff,
                self.i_exp + other.i_exp,
                Fraction(self.radicand) * Fraction(other.radicand),
            )
        if isinstance(other, (int, Fraction)):
            return QuarterRadical(self.coeff * other, self.i_exp, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return QuarterRadical(-self.coeff, self.i_exp, self.radicand)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuarterRadical.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "QuarterRadical":
        """Multiplicative inverse: 1/(c i^m sqrt(r)) = i^(-m) sqrt(r)/(c r)."""
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of zero radical value")
        return QuarterRadical(
            Fraction(1, 1) / (self.coeff * self.radicand), -self.i_exp, self.radicand
        )

    def is_zero(self) -> bool:
        return self.coeff == 0

    def as_fraction(self) -> Fraction:
        """The value as a rational; raises if it is irrational or imaginary."""
        if self.i_exp != 0 or self.radicand != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeff

    def approx(self) -> tuple[float, float]:
        """Floating (re, im) approximation; relative error well under 2**-40."""
        mag = float(self.coeff) * math.sqrt(self.radicand)
        if self.i_exp == 0:
            return (mag, 0.0)
        return (0.0, mag)

    def approx_complex(self) -> complex:
        re, im = self.approx()
        return complex(re, im)

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        parts = []
        c = self.coeff
        if c == -1 and (self.i_exp or self.radicand != 1):
            parts.append("-")
        elif c != 1 or (self.i_exp == 0 and self.radicand == 1):
            parts.append(str(c))
        if self.i_exp:
            parts.append("i")
        if self.radicand != 1:
            parts.append(f"sqrt({self.radicand})")
        body = "*".join(p for p in parts if p != "-")
        return ("-" + body) if parts and parts[0] == "-" else body

    def as_dict(self) -> dict:
        return {
            "coeff": rational_str(self.coeff),
            "i_exp": self.i_exp,
            "radicand": str(self.radicand),
        }


def rational_str(x) -> str:
    """Lossless decimal-string form: plain integer, or 'num/den'."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
