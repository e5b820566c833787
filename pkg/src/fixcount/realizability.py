"""Fix/orbit transforms and the realizability test.

A sequence ``a`` counts the periodic points of some map exactly when every
``(mu*a)(n)`` is non-negative and divisible by ``n``; the quotient is then the
number of closed orbits of length ``n``. On a finite prefix this can only
refute realizability, never certify it, hence the ``realizable-prefix`` wording.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from fixcount.arith import divisors, factorize, mobius, mobius_convolve, mobius_table

REALIZABLE = "realizable-prefix"
FAILED = "failed"
NEGATIVE = "negative"
NOT_DIVISIBLE = "not-divisible"


@dataclass(frozen=True)
class WitnessReport:
    status: str
    first_failure_index: Optional[int] = None
    convolution_value: Optional[int] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if self.status not in (REALIZABLE, FAILED):
            raise ValueError(f"unknown status {self.status!r}")
        failed = self.status == FAILED
        if failed != (self.first_failure_index is not None) or failed != (self.reason is not None):
            raise ValueError("failure index and reason must be present exactly when failed")

    @property
    def passed(self) -> bool:
        return self.status == REALIZABLE

    def to_dict(self) -> dict:
        # big integers travel as decimal strings; absent fields are omitted
        d: dict = {"status": self.status}
        if self.first_failure_index is not None:
            d["first_failure_index"] = self.first_failure_index
        if self.convolution_value is not None:
            d["convolution_value"] = str(self.convolution_value)
        if self.reason is not None:
            d["reason"] = self.reason
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "WitnessReport":
        value = d.get("convolution_value")
        return cls(
            status=d["status"],
            first_failure_index=d.get("first_failure_index"),
            convolution_value=None if value is None else int(value),
            reason=d.get("reason"),
        )

    def describe(self) -> str:
        if self.passed:
            return "realizable-prefix: no violation found in this prefix"
        n, v = self.first_failure_index, self.convolution_value
        if self.reason == NOT_DIVISIBLE:
            why = f"(mu*a)({n}) = {v} is not divisible by {n}"
        else:
            why = f"(mu*a)({n}) = {v} is negative"
        return f"failed at n = {n}: {why}"


def _first_violation(conv: Sequence[int]) -> Optional[WitnessReport]:
    for n, v in enumerate(conv, start=1):
        if v % n:
            return WitnessReport(FAILED, n, v, NOT_DIVISIBLE)
        if v < 0:
            return WitnessReport(FAILED, n, v, NEGATIVE)
    return None


def check_realizable(a: Sequence[int]) -> WitnessReport:
    if not a:
        raise ValueError("empty sequence")
    return _first_violation(mobius_convolve(a)) or WitnessReport(REALIZABLE)


def orbit_counts(a: Sequence[int]) -> tuple[int, ...] | WitnessReport:
    """Closed-orbit counts ``(mu*a)(n)/n``, or the failed report if ``a`` is not realizable."""
    if not a:
        raise ValueError("empty sequence")
    conv = mobius_convolve(a)
    failure = _first_violation(conv)
    if failure is not None:
        return failure
    return tuple(v // n for n, v in enumerate(conv, start=1))


def fix_from_orbits(o: Sequence[int]) -> tuple[int, ...]:
    """``a_n = sum_{d|n} d * o_d``."""
    if not o:
        raise ValueError("empty orbit counts")
    for n, c in enumerate(o, start=1):
        if c < 0:
            raise ValueError(f"negative orbit count {c} at n = {n}")
    N = len(o)
    out = [0] * N
    for d in range(1, N + 1):
        w = d * o[d - 1]
        if w:
            for m in range(d, N + 1, d):
                out[m - 1] += w
    return tuple(out)


def e_sum_cross_check(a: Sequence[int], k: int, n: int) -> tuple[int, int]:
    """Both sides of the identity behind the monomial time-change theorem.

    Returns ``(e, (mu*b)(n))`` where ``b_m = a_{m^k}`` and ``e`` sums
    ``(mu*a)(m)`` over the divisors ``m`` of ``n^k`` that are multiples of
    ``delta = n^k / (p_1 ... p_r)^(k-1)``. The two agree for realizable ``a``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if n < 2:
        raise ValueError("n must be at least 2")
    nk = n**k
    if len(a) < nk:
        raise ValueError(f"need at least {nk} terms, got {len(a)}")
    radical = 1
    for p in factorize(n):
        radical *= p
    delta = nk // radical ** (k - 1)

    e = 0
    for m in divisors(nk):
        if m % delta == 0:
            e += sum(mobius(m // d) * a[d - 1] for d in divisors(m))

    b = [a[j**k - 1] for j in range(1, n + 1)]
    mu = mobius_table(n)
    mu_b = sum(mu[n // d - 1] * b[d - 1] for d in divisors(n))
    return e, mu_b

