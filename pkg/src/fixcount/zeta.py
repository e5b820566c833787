"""Truncated power series around dynamical zeta functions, with exact rational coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional, Sequence

from fixcount.arith import divisors, mobius

PowerSeries = tuple[Fraction, ...]


def zeta_exp(a: Sequence[int], N: int) -> PowerSeries:
    """Coefficients ``c_0..c_N`` of ``exp(sum_{n>=1} a_n z^n / n)``.

    Uses ``n c_n = sum_{k=1}^{n} a_k c_{n-k}``, which follows from
    differentiating the exponential.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if len(a) < N:
        raise ValueError(f"need {N} terms, got {len(a)}")
    c = [Fraction(1)]
    for n in range(1, N + 1):
        c.append(sum((a[k - 1] * c[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
    return tuple(c)


def euler_product(o: Sequence[int], N: int) -> PowerSeries:
    """Coefficients ``c_0..c_N`` of ``prod_{n=1}^{N} (1 - z^n)^(-o_n)``.

    Each factor is expanded with the negative binomial series, so large orbit
    counts cost nothing extra and every coefficient stays an integer.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if len(o) < N:
        raise ValueError(f"need {N} orbit counts, got {len(o)}")
    if any(x < 0 for x in o[:N]):
        raise ValueError("orbit counts must be non-negative")
    c = [1] + [0] * N
    for n in range(1, N + 1):
        k = o[n - 1]
        if k == 0:
            continue
        factor = [comb(k + j - 1, j) for j in range(N // n + 1)]
        new = [0] * (N + 1)
        for i, ci in enumerate(c):
            if ci:
                for j, fj in enumerate(factor):
                    if i + n * j > N:
                        break
                    new[i + n * j] += ci * fj
        c = new
    return tuple(Fraction(x) for x in c)


@dataclass(frozen=True)
class RationalFunction:
    """``numerator / denominator`` with integer coefficients, constant term first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(int(x) for x in self.numerator))
        object.__setattr__(self, "denominator", tuple(int(x) for x in self.denominator))
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        """Parse ``"num;den"``; each side is a comma list, factors may be joined by ``*``.

        ``"1;1,1*1,-2,-2,1"`` is ``1 / ((1 + z)(1 - 2z - 2z^2 + z^3))``.
        """
        try:
            num, den = text.split(";")
            return cls(_parse_product(num), _parse_product(den))
        except ValueError as exc:
            raise ValueError(f"bad rational function {text!r}: {exc}") from None


def _parse_product(text: str) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for factor in text.split("*"):
        out = poly_mul(out, tuple(int(x) for x in factor.split(",")))
    return out


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return tuple(out)


def expand_rational(f: RationalFunction, N: int) -> PowerSeries:
    """Taylor coefficients ``c_0..c_N`` of ``f`` at ``z = 0`` by long division."""
    num, den = f.numerator, f.denominator
    if not den or den[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    c: list[Fraction] = []
    for n in range(N + 1):
        acc = Fraction(num[n] if n < len(num) else 0)
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * c[n - j]
        c.append(acc / den[0])
    return tuple(c)


class IntegralityResult(NamedTuple):
    passed: bool
    first_nonintegral_index: Optional[int]


def integrality_check(s: Sequence[Fraction]) -> IntegralityResult:
    for i, x in enumerate(s):
        if Fraction(x).denominator != 1:
            return IntegralityResult(False, i)
    return IntegralityResult(True, None)


def eta(n: int) -> int:
    """``sum_{d|n} (-1)^d mu(n/d)``; nonzero only at n = 1 and n = 2."""
    return sum((-1) ** d * mobius(n // d) for d in divisors(n))


def format_coefficient(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def series_to_json(s: Sequence[Fraction]) -> str:
    return json.dumps([format_coefficient(x) for x in s])


def series_from_json(text: str) -> PowerSeries:
    return tuple(Fraction(x) for x in json.loads(text))
