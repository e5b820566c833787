"""Exact integer helpers: divisors, factorization, Möbius function, Dirichlet convolution."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}`` by trial division."""
    _require_positive(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _require_positive(n)
    return list(_divisors(n))


def mobius(n: int) -> int:
    _require_positive(n)
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def mobius_table(N: int) -> list[int]:
    """``[mu(1), ..., mu(N)]`` by a linear sieve."""
    mu = [0] * (N + 1)
    if N < 1:
        return []
    mu[1] = 1
    primes: list[int] = []
    composite = [False] * (N + 1)
    for i in range(2, N + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > N:
                break
            composite[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu[1:]


def dirichlet_convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """``(a*b)(n) = sum_{d|n} a_d b_{n/d}`` for ``n <= min(len(a), len(b))``."""
    N = min(len(a), len(b))
    out = [0] * N
    for d in range(1, N + 1):
        ad = a[d - 1]
        if ad == 0:
            continue
        for q in range(1, N // d + 1):
            out[d * q - 1] += ad * b[q - 1]
    return tuple(out)


def mobius_convolve(a: Sequence[int]) -> tuple[int, ...]:
    """``(mu*a)(n) = sum_{d|n} mu(n/d) a_d``, the Möbius inverse of ``a``."""
    return dirichlet_convolve(mobius_table(len(a)), a)
