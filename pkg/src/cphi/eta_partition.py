"""Eta-quotient expansions, cusp data, and partition-number machinery.

The eta quotient studied here is eta(z (N/d))^N / eta(dz) for d | N, whose
q-expansion is q^((N^2-d^2)/(24d)) (q^(N/d); q^(N/d))^N / (q^d; q^d).
Partition numbers P(n) use the convention P(x) = 0 for negative or
non-integral x, which is what makes terms like P(n/5) meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import divisors, validate_level
from .characters import kronecker
from .qseries import QSeries, euler_coefficients, euler_product, _alloc_trunc
from .radicals import QuarterRadical


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Parameters (N, d) with d | N; the q-power prefix must be integral."""

    level: int
    d: int

    def __post_init__(self):
        validate_level(self.level)
        if self.d < 1 or self.level % self.d:
            raise ValueError(f"d={self.d} does not divide N={self.level}")
        if (self.level**2 - self.d**2) % (24 * self.d):
            raise ValueError(
                f"(N^2-d^2)/(24d) is not an integer for N={self.level}, d={self.d}"
            )

    @property
    def prefix_exponent(self) -> int:
        return (self.level**2 - self.d**2) // (24 * self.d)


@lru_cache(maxsize=None)
def eta_quotient_series(level: int, d: int, n_max: int) -> QSeries:
    """Exact expansion of eta((N/d)z)^N / eta(dz) through q**n_max."""
    spec = EtaQuotientSpec(level, d)
    prefix = spec.prefix_exponent
    if prefix > n_max:
        return QSeries.zero(n_max)
    rest = n_max - prefix
    m = level // d
    numerator = euler_product(rest // m).pow(level).rescale(m)
    denominator_inv = euler_product(rest // d).inverse().rescale(d)
    series = (numerator * denominator_inv).crop(rest)
    return series.shift(prefix)


def cusp_vanishing_order(level: int, d: int, c: int) -> Fraction:
    """Order of vanishing of the eta quotient at the cusp 1/c, c | N."""
    validate_level(level)
    for name, x in (("d", d), ("c", c)):
        if x < 1 or level % x:
            raise ValueError(f"{name}={x} does not divide N={level}")
    return Fraction(level, 24 * c) * Fraction(
        d * d * gcd(level // d, c) ** 2 - gcd(d, c) ** 2, d
    )


def eta_cusp_constant(level: int, d: int, c: int) -> QuarterRadical:
    """Constant term of the eta quotient at the cusp 1/c; zero unless c = d."""
    validate_level(level)
    for name, x in (("d", d), ("c", c)):
        if x < 1 or level % x:
            raise ValueError(f"{name}={x} does not divide N={level}")
    if c != d:
        return QuarterRadical.zero()
    coeff = kronecker(level // d, d) * Fraction(d, level) ** ((level - 1) // 2)
    return QuarterRadical(coeff, ((1 - level * d) // 2) % 4, Fraction(d, level))


# -- partition numbers -------------------------------------------------------

_partition_table = [1]


def partition_numbers(n_max: int) -> list:
    """P(0..n_max) by inverting the Euler product (cached, grow-only)."""
    if n_max >= len(_partition_table):
        alloc = _alloc_trunc(n_max)
        e = euler_coefficients(alloc)
        nonzero = [(j, e[j]) for j in range(1, alloc + 1) if e[j]]
        for n in range(len(_partition_table), alloc + 1):
            acc = 0
            for j, ej in nonzero:
                if j > n:
                    break
                acc -= ej * _partition_table[n - j]
            _partition_table.append(acc)
    return _partition_table[: n_max + 1]


def partition_count(x) -> int:
    """P(x) with P = 0 at negative or non-integral arguments."""
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return 0
        x = int(x)
    if x < 0:
        return 0
    return partition_numbers(x)[x]


def scaled_partition_term(level: int, d: int, n: int) -> int:
    """(N/d) * P(N n / d^2 - (N^2 - d^2)/(24 d^2)) with the P convention."""
    if d < 1 or level % d:
        raise ValueError(f"d={d} does not divide N={level}")
    arg = Fraction(level * n, d * d) - Fraction(level**2 - d**2, 24 * d * d)
    return (level // d) * partition_count(arg)


def main_term(level: int, n: int) -> int:
    """The partition side of the main identity: sum over d | N of scaled terms."""
    return sum(scaled_partition_term(level, d, n) for d in divisors(level))


@lru_cache(maxsize=None)
def multi_partition_series(r: int, n_max: int) -> QSeries:
    """1/(q;q)^r: coefficients count r-colored partitions."""
    if r < 0:
        raise ValueError("negative color count")
    if r == 0:
        return QSeries.one(n_max)
    return euler_product(n_max).inverse().pow(r)
