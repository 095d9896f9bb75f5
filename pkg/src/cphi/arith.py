"""Small integer-arithmetic helpers shared across modules."""

from __future__ import annotations

from math import gcd

# All radicands and moduli in this project are desk scale (divisors of
# levels up to ~1000 and their products), so trial division is plenty.
TRIAL_DIVISION_LIMIT = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        if f > TRIAL_DIVISION_LIMIT:
            break
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_factors(n: int) -> list[int]:
    """Sorted distinct prime factors of n >= 1."""
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors of {n} undefined")
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for _, e in factorize(n))


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (m, s) with n = m*m*s and s squarefree, n >= 1."""
    m, s = 1, 1
    for p, e in factorize(n):
        m *= p ** (e // 2)
        if e % 2:
            s *= p
    return m, s


def validate_level(n: int) -> None:
    """Check that n is a valid level: positive, squarefree, coprime to 6."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"N={n}: must be a positive integer")
    if gcd(n, 6) != 1:
        raise ValueError(f"N={n}: must be coprime to 6")
    if not is_squarefree(n):
        raise ValueError(f"N={n}: must be squarefree")
