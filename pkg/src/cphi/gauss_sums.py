"""Quadratic Gauss sums for the form theta_N and their closed forms.

G_N(a, c) = sum over x in (Z/c)^N of e(2 pi i a theta_N(x) / c), where
theta_N(x) = sum x_i^2 + sum_{i<j} x_i x_j, so 2 theta_N = (sum x_i)^2 + sum x_i^2.

The numeric oracle aggregates exact counts of theta values per residue class
before one floating phase sum; the closed forms come from a variable
elimination that peels one coordinate at a time, tracking the twist residue
R in the map R -> 1/(4(1-R)) mod p.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, pi

from .arith import is_prime, is_squarefree, prime_factors
from .radicals import QuarterRadical
from .characters import epsilon_c, kronecker

# guard on the conceptual term count c**dim of the defining sum
PHASE_GUARD = 10**7


def theta_form(x) -> int:
    """theta(x) for an integer tuple, via 2*theta = (sum x)^2 + sum x^2."""
    s = sum(x)
    ss = sum(v * v for v in x)
    return (s * s + ss) // 2


@dataclass(frozen=True)
class GaussSumQuery:
    """A sum G_dim(a, modulus); gcd(a, modulus) must be 1."""

    dim: int
    a: int
    modulus: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("negative dimension")
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if gcd(self.a, self.modulus) != 1:
            raise ValueError(f"gcd({self.a}, {self.modulus}) != 1")

    def evaluate_numeric(self) -> complex:
        return gauss_sum_numeric(self.dim, self.a, self.modulus)


@lru_cache(maxsize=None)
def _theta_residue_counts(dim: int, modulus: int) -> tuple:
    """Exact counts of theta(x) mod `modulus` over x in (Z/modulus)^dim.

    Tracks (s, ss) = (sum, sum of squares) mod 2*modulus; s^2 + ss is always
    even, so theta mod modulus is determined.
    """
    m2 = 2 * modulus
    table = {(0, 0): 1}
    values = [(v % m2, (v * v) % m2) for v in range(modulus)]
    for _ in range(dim):
        nxt: dict = {}
        for (s, ss), cnt in table.items():
            for dv, dss in values:
                key = ((s + dv) % m2, (ss + dss) % m2)
                if key in nxt:
                    nxt[key] += cnt
                else:
                    nxt[key] = cnt
        table = nxt
    counts = [0] * modulus
    for (s, ss), cnt in table.items():
        counts[((s * s + ss) % m2) // 2] += cnt
    return tuple(counts)


def gauss_sum_numeric(dim: int, a: int, modulus: int) -> complex:
    """Brute-force value of G_dim(a, modulus) in floating point.

    Rejects requests with modulus**dim beyond PHASE_GUARD; use the closed
    forms or the reduction chain there instead.
    """
    query = GaussSumQuery(dim, a, modulus)
    if modulus**dim > PHASE_GUARD:
        raise ValueError(
            f"{modulus}**{dim} exceeds the {PHASE_GUARD} term guard; "
            "use a closed form or the reduction chain"
        )
    counts = _theta_residue_counts(query.dim, query.modulus)
    total = 0j
    for r, cnt in enumerate(counts):
        if cnt:
            total += cnt * cmath.exp(2j * pi * ((a * r) % modulus) / modulus)
    return total


def coprime_split(dim: int, gamma: int, alpha: int, beta: int):
    """Factor queries per G_N(gamma, alpha*beta) = G_N(beta*gamma, alpha) * G_N(alpha*gamma, beta)."""
    for x, y in ((alpha, beta), (alpha, gamma), (beta, gamma)):
        if gcd(x, y) != 1:
            raise ValueError(f"arguments must be pairwise coprime, gcd({x},{y})>1")
    return (
        GaussSumQuery(dim, beta * gamma, alpha),
        GaussSumQuery(dim, alpha * gamma, beta),
    )


def twist_map(p: int, r: int) -> int:
    """One step of the twist recursion: R -> 1/(4(1-R)) mod p, R != 1."""
    if (r - 1) % p == 0:
        raise ValueError("twist map undefined at R = 1")
    return pow(4 * (1 - r), -1, p)


def twist_orbit(p: int, t: int) -> int:
    """t-fold iterate of the twist map at 0 mod p, 0 <= t <= p - 2.

    Lands on t/(2t+2) mod p and reaches 1 exactly at t = p - 2; hitting 1
    earlier would mean the recursion is broken, so that raises.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} must be an odd prime")
    if t < 0 or t > p - 2:
        raise ValueError(f"orbit index {t} outside 0..{p - 2}")
    r = 0
    for step in range(t):
        if r % p == 1 % p:
            raise ArithmeticError(
                f"twist orbit hit 1 mod {p} after {step} steps, before {p - 2}"
            )
        r = twist_map(p, r)
    return r % p


@dataclass(frozen=True)
class ReduceStep:
    """Outcome of eliminating coordinates from a twisted Gauss sum."""

    case: str  # "terminal", "drop-two" or "drop-one"
    factor: QuarterRadical
    next_dim: int | None
    next_twist: int | None


def reduce_step(dim: int, a: int, p: int, twist: int) -> ReduceStep:
    """One variable-elimination step for sum_x e(a(theta_dim(x) - R x_dim^2)/p).

    R = 1, dim <= 2: the sum collapses to p.  R = 1, dim > 2: factor p and a
    plain Gauss sum in dim-2 variables remains (twist 0).  R != 1: factor
    epsilon_p sqrt(p) (a(1-R)|p) and the twist advances to 1/(4(1-R)).
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} must be an odd prime")
    if gcd(a, p) != 1:
        raise ValueError(f"gcd({a}, {p}) != 1")
    if dim < 1:
        raise ValueError("nothing to reduce in dimension 0")
    if (twist - 1) % p == 0:
        if dim <= 2:
            return ReduceStep("terminal", QuarterRadical(p), None, None)
        return ReduceStep("drop-two", QuarterRadical(p), dim - 2, 0)
    factor = epsilon_c(p) * QuarterRadical.sqrt_of(p)
    factor = factor * kronecker(a * (1 - twist), p)
    return ReduceStep("drop-one", factor, dim - 1, twist_map(p, twist))


def gauss_sum_by_reduction(dim: int, a: int, p: int) -> QuarterRadical:
    """Exact G_dim(a, p) for odd prime p by composing reduction steps."""
    acc = QuarterRadical.one()
    twist = 0
    while dim > 0:
        step = reduce_step(dim, a, p, twist)
        acc = acc * step.factor
        if step.case == "terminal":
            return acc
        dim, twist = step.next_dim, step.next_twist
    return acc


def gauss_sum_prime_closed(dim: int, a: int, p: int):
    """Closed form for G_dim(a, p), dim >= p - 1.

    Returns (value, residual): for dim in {p-1, p} the residual is None and
    value = i^((p-p^2)/2) (a|p) p^(p/2); for dim > p the same factor
    multiplies a residual query G_{dim-p}(a, p).
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} must be an odd prime")
    if gcd(a, p) != 1:
        raise ValueError(f"gcd({a}, {p}) != 1")
    if dim < p - 1:
        raise ValueError(f"closed form needs dimension >= {p - 1}, got {dim}")
    value = QuarterRadical(
        kronecker(a, p) * p ** ((p - 1) // 2), ((p - p * p) // 2) % 4, p
    )
    if dim in (p - 1, p):
        return value, None
    return value, GaussSumQuery(dim - p, a, p)


def gauss_sum_closed(level: int, a: int, d: int) -> QuarterRadical:
    """Closed form G_{N-1}(a, d) = (a|d) i^((N-Nd)/2) d^(N/2), d | N odd squarefree."""
    if level < 1 or level % 2 == 0 or not is_squarefree(level):
        raise ValueError(f"N={level} must be odd positive squarefree")
    if d < 1 or level % d:
        raise ValueError(f"d={d} does not divide N={level}")
    if gcd(a, d) != 1:
        raise ValueError(f"gcd({a}, {d}) != 1")
    return QuarterRadical(
        kronecker(a, d) * d ** ((level - 1) // 2),
        ((level - level * d) // 2) % 4,
        d,
    )


def reduction_unit(d: int, level: int) -> QuarterRadical:
    """prod_{p|d} i^((N-Np)/2) (d/p|p) divided by i^((N-Nd)/2); always 1."""
    if d < 1 or level % d:
        raise ValueError(f"d={d} does not divide N={level}")
    acc = QuarterRadical.one()
    for p in prime_factors(d):
        acc = acc * QuarterRadical(
            kronecker(d // p, p), ((level - level * p) // 2) % 4, 1
        )
    return acc * QuarterRadical.i_power(((level - level * d) // 2) % 4).inverse()


def galois_twist_holds(level: int, a: int, d: int, tol: float = 1e-6) -> bool:
    """Numerically check G_{N-1}(a, d) = (a|d) G_{N-1}(1, d)."""
    if gcd(a, d) != 1:
        raise ValueError(f"gcd({a}, {d}) != 1")
    dim = level - 1
    lhs = gauss_sum_numeric(dim, a, d)
    rhs = kronecker(a, d) * gauss_sum_numeric(dim, 1, d)
    scale = max(abs(lhs), abs(rhs), 1.0)
    return abs(lhs - rhs) <= tol * scale
