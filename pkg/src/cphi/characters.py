"""Kronecker symbols, quadratic characters and their attached constants.

chi_a is the real character chi_a(b) = kronecker((-1)^((a-1)/2) * a, b),
primitive mod a for odd squarefree a.  This module also provides the
epsilon_c units, the fourth-root normalizer A(d, N) and sign C(d, N) of the
Eisenstein decomposition, classical character Gauss sums W(chi_d),
generalized Bernoulli numbers and twisted divisor sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arith import divisors, is_squarefree, prime_factors, validate_level
from .qseries import QSeries
from .radicals import QuarterRadical


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol (a|b) on the full domain, including b <= 0."""
    if b == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0
    sign = 1
    if b < 0:
        b = -b
        if a < 0:
            sign = -sign
    twos = 0
    while b % 2 == 0:
        b //= 2
        twos += 1
    if twos % 2 and a % 8 in (3, 5):
        sign = -sign
    a %= b
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                sign = -sign
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            sign = -sign
        a %= b
    return sign if b == 1 else 0


def chi(a: int, b: int) -> int:
    """The quadratic character chi_a(b), a odd positive."""
    if a < 1 or a % 2 == 0:
        raise ValueError(f"chi_a needs odd positive a, got {a}")
    if (a - 1) // 2 % 2:
        return kronecker(-a, b)
    return kronecker(a, b)


def epsilon_c(c: int) -> QuarterRadical:
    """1 for c = 1 mod 4, i for c = 3 mod 4; rejects even c."""
    if c % 2 == 0 or c < 1:
        raise ValueError(f"epsilon_c needs odd positive c, got {c}")
    return QuarterRadical(Fraction(1), 0 if c % 4 == 1 else 1, 1)


def unit_a(d: int, level: int) -> QuarterRadical:
    """The fourth-root unit (-1)^((d+1)(N/d-1)/4) * epsilon_{N/d} for d | N."""
    if d < 1 or level % d:
        raise ValueError(f"d={d} does not divide N={level}")
    m = level // d
    if d % 2 == 0 or m % 2 == 0:
        raise ValueError("unit_a needs odd d and N")
    exp = ((d + 1) * (m - 1)) // 4
    return QuarterRadical(Fraction((-1) ** (exp % 2)), 0 if m % 4 == 1 else 1, 1)


def eisenstein_sign(d: int, level: int) -> int:
    """The sign i^((1-N*d)/2) / A(d, N) in {+1, -1} for d | N."""
    q = QuarterRadical.i_power(((1 - level * d) // 2) % 4) * unit_a(d, level).inverse()
    value = q.as_fraction()
    if value not in (1, -1):
        raise ArithmeticError(f"sign for d={d}, N={level} is not a unit: {value}")
    alt = (
        kronecker(-8, level)
        * kronecker(8, d)
        * kronecker(-4, d) ** ((level - 1) // 2)
    )
    assert value == alt, f"sign formulas disagree at d={d}, N={level}"
    return int(value)


def gauss_w(d: int) -> QuarterRadical:
    """Classical Gauss sum of chi_d: epsilon_d * sqrt(d), d odd squarefree."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"gauss_w needs odd positive d, got {d}")
    if not is_squarefree(d):
        raise ValueError(f"gauss_w needs squarefree d, got {d}")
    return epsilon_c(d) * QuarterRadical.sqrt_of(d)


BERNOULLI_INDEX_BOUND = 64


@lru_cache(maxsize=None)
def bernoulli_chi(k: int, level: int) -> Fraction:
    """Generalized Bernoulli number B_{k, chi_level} by exact series division.

    Expands sum_{a=1}^{N} chi_N(a) t e^{at} / (e^{Nt} - 1) as a power series
    in t with rational coefficients and reads off k! times the t^k term.
    The N = 1 case reproduces the classical numbers with B_1 = +1/2.
    """
    if k < 0 or k > BERNOULLI_INDEX_BOUND:
        raise ValueError(f"index {k} outside supported range 0..{BERNOULLI_INDEX_BOUND}")
    if level < 1 or level % 2 == 0:
        raise ValueError(f"needs odd positive modulus, got {level}")
    # numerator: sum_a chi(a) e^{at} = sum_j (sum_a chi(a) a^j) t^j / j!
    power_sums = [0] * (k + 1)
    for a in range(1, level + 1):
        ca = chi(level, a)
        if ca:
            aj = 1
            for j in range(k + 1):
                power_sums[j] += ca * aj
                aj *= a
    num = QSeries(0, [Fraction(s, factorial(j)) for j, s in enumerate(power_sums)], k)
    # denominator: (e^{Nt} - 1)/t = sum_j N^{j+1} t^j / (j+1)!
    den = QSeries(
        0, [Fraction(level ** (j + 1), factorial(j + 1)) for j in range(k + 1)], k
    )
    series = num * den.inverse()
    return Fraction(series.coefficient(k)) * factorial(k)


def sigma_twisted(k: int, level: int, d: int, n: int) -> int:
    """Twisted divisor sum sum_{t|n} chi_{N/d}(n/t) chi_d(t) t**k."""
    if level % d:
        raise ValueError(f"d={d} does not divide N={level}")
    if n < 1:
        raise ValueError(f"twisted divisor sum needs n >= 1, got {n}")
    if k < 0:
        raise ValueError("negative weight exponent")
    m = level // d
    total = 0
    for t in divisors(n):
        ct = chi(d, t)
        if ct:
            cq = chi(m, n // t)
            if cq:
                total += cq * ct * t**k
    return total


@dataclass(frozen=True)
class CharacterContext:
    """A valid level N with its divisor lattice and prime factors."""

    level: int
    divisors: tuple
    prime_factors: tuple

    def chi_level(self, b: int) -> int:
        return chi(self.level, b)


@lru_cache(maxsize=None)
def context(level: int) -> CharacterContext:
    validate_level(level)
    return CharacterContext(
        level, tuple(divisors(level)), tuple(prime_factors(level))
    )
