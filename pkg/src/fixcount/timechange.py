"""Time-changes ``h: N -> N`` acting on sequences by ``(a_n) -> (a_{h(n)})``.

Textual grammar (used by the CLI)::

    polynomial  "n^2", "2n^3", "3n^2+n+1", "n+1", "2*n^2 - n + 3"
    g_p         "g2"
    g_S         "g{2,3,5}"
    table       "table:3,1,4,1,5"      (h(1)=3, h(2)=1, ...)
    composition "n^2 ∘ g2"             (outer first: n -> g2(n)^2)

A polynomial with a single positive term ``c n^k`` parses to a ``Monomial``.
``compose(f, g)`` means ``f`` after ``g``. Note that applying ``g`` and then
``f`` to a sequence yields ``a_{g(f(n))}``, i.e. ``apply(compose(g, f), a)``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from fixcount.arith import factorize, is_prime
from fixcount.realizability import WitnessReport, check_realizable, fix_from_orbits


class OutOfDomain(ValueError):
    """The time-change is not defined at the requested argument."""


class EmptyTimeChange(ValueError):
    """``h(1)`` already exceeds the available prefix."""


class SearchBudgetExhausted(RuntimeError):
    pass


class TimeChange:
    def __call__(self, n: int) -> int:
        if n < 1:
            raise OutOfDomain(f"time-changes are defined on positive integers, got {n}")
        return self._eval(n)

    def _eval(self, n: int) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Monomial(TimeChange):
    """``n -> c n^k``; ``k = 0`` is the constant map."""

    c: int = 1
    k: int = 1

    def __post_init__(self):
        if self.c < 1 or self.k < 0:
            raise ValueError(f"monomial needs c >= 1 and k >= 0, got c={self.c}, k={self.k}")

    def _eval(self, n):
        return self.c * n**self.k

    def __str__(self):
        return _render_terms({self.k: self.c})


@dataclass(frozen=True)
class Polynomial(TimeChange):
    """Integer polynomial, coefficients constant term first. Positivity is checked per evaluation."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(x) for x in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs or coeffs == (0,):
            raise ValueError("zero polynomial is not a time-change")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monomial(self) -> bool:
        return sum(1 for x in self.coeffs if x) == 1 and self.coeffs[-1] > 0

    def _eval(self, n):
        v = 0
        for x in reversed(self.coeffs):
            v = v * n + x
        if v < 1:
            raise OutOfDomain(f"polynomial {self} takes value {v} < 1 at n = {n}")
        return v

    def __str__(self):
        return _render_terms({k: x for k, x in enumerate(self.coeffs) if x})


@dataclass(frozen=True)
class GP(TimeChange):
    """``n -> n`` if ``p`` does not divide ``n``, else ``n -> p n``."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"g_p needs a prime, got {self.p}")

    def _eval(self, n):
        return self.p * n if n % self.p == 0 else n

    def __str__(self):
        return f"g{self.p}"


@dataclass(frozen=True)
class GS(TimeChange):
    """Composite of ``g_p`` over a finite set of primes."""

    primes: tuple[int, ...]

    def __post_init__(self):
        primes = tuple(int(p) for p in self.primes)
        if not primes:
            raise ValueError("g_S needs at least one prime")
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("g_S primes must be strictly ascending")
        if not all(is_prime(p) for p in primes):
            raise ValueError(f"g_S needs primes, got {primes}")
        object.__setattr__(self, "primes", primes)

    def _eval(self, n):
        # g_{p_j1} ∘ ... ∘ g_{p_jt} over the primes of S dividing n; innermost is the largest
        for p in reversed([p for p in self.primes if n % p == 0]):
            n = GP(p)(n)
        return n

    def __str__(self):
        return "g{" + ",".join(map(str, self.primes)) + "}"


@dataclass(frozen=True)
class Table(TimeChange):
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        if not values or min(values) < 1:
            raise ValueError("table entries must be positive and nonempty")
        object.__setattr__(self, "values", values)

    def _eval(self, n):
        if n > len(self.values):
            raise OutOfDomain(f"table is defined only on 1..{len(self.values)}")
        return self.values[n - 1]

    def __str__(self):
        return "table:" + ",".join(map(str, self.values))


@dataclass(frozen=True)
class Composition(TimeChange):
    outer: TimeChange
    inner: TimeChange

    def _eval(self, n):
        return self.outer(self.inner(n))

    def __str__(self):
        return f"{self.outer} ∘ {self.inner}"


def evaluate(h: TimeChange, n: int) -> int:
    return h(n)


def compose(outer: TimeChange, inner: TimeChange) -> TimeChange:
    return Composition(outer, inner)


def apply(h: TimeChange, a: Sequence[int], max_terms: Optional[int] = None) -> tuple[int, ...]:
    """``(a_{h(1)}, ..., a_{h(M)})`` for the longest run with every ``h(n) <= len(a)``.

    Output length is capped at ``max_terms`` (default ``len(a)``) so that
    bounded maps such as constants terminate. Running off a table's domain
    ends the run; a polynomial dropping below 1 raises.
    """
    N = len(a)
    limit = N if max_terms is None else max_terms
    out = []
    for n in range(1, limit + 1):
        try:
            v = h(n)
        except OutOfDomain:
            if not _domain_end(h, n):
                raise
            break
        if v > N:
            break
        out.append(a[v - 1])
    if not out:
        raise EmptyTimeChange(f"h(1) exceeds the prefix length {N}; supply a longer prefix")
    return tuple(out)


def _domain_end(h: TimeChange, n: int) -> bool:
    # True when h is undefined at n because a table ran out, not because of a bad value
    if isinstance(h, Table):
        return n > len(h.values)
    if isinstance(h, Composition):
        if _domain_end(h.inner, n):
            return True
        try:
            m = h.inner(n)
        except OutOfDomain:
            return False
        return _domain_end(h.outer, m)
    return False


# -- parsing -------------------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(n(?:\^(\d+))?)?$")


def _parse_polynomial(text: str) -> TimeChange:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty expression")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]*)", s):
        m = _TERM.match(body)
        if not body or not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse term {sign}{body!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
    if "".join(re.findall(r"[+-][^+-]*", s)) != s:
        raise ValueError(f"cannot parse {text!r}")
    deg = max(coeffs)
    poly = Polynomial(tuple(coeffs.get(i, 0) for i in range(deg + 1)))
    if poly.is_monomial:
        return Monomial(poly.coeffs[-1], poly.degree)
    return poly


def parse_timechange(text: str) -> TimeChange:
    """Parse one expression of the grammar in the module docstring."""
    parts = [p.strip() for p in text.split("∘")]
    if len(parts) > 1:
        return compose_all(parse_timechange(p) for p in parts)
    s = text.strip()
    if s.startswith("table:"):
        try:
            return Table(tuple(int(x) for x in s[len("table:"):].split(",")))
        except ValueError as exc:
            raise ValueError(f"bad table {s!r}: {exc}") from None
    m = re.fullmatch(r"g\{([\d,\s]+)\}", s)
    if m:
        return GS(tuple(int(x) for x in m.group(1).split(",")))
    m = re.fullmatch(r"g(\d+)", s)
    if m:
        return GP(int(m.group(1)))
    return _parse_polynomial(s)


def compose_all(maps: Iterable[TimeChange]) -> TimeChange:
    """``h1 ∘ h2 ∘ ... ∘ hk`` (the last map is applied to n first)."""
    maps = list(maps)
    if not maps:
        raise ValueError("nothing to compose")
    out = maps[-1]
    for h in reversed(maps[:-1]):
        out = compose(h, out)
    return out


def _render_terms(terms: dict[int, int]) -> str:
    pieces = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("n" if k == 1 else f"n^{k}")
        pieces.append(("-" if c < 0 else "+") + body)
    s = "".join(pieces)
    return s[1:] if s.startswith("+") else s


# -- the "only if" direction: single-orbit counterexamples -----------------------


@dataclass(frozen=True)
class Counterexample:
    q: int
    n0: int
    timechanged: tuple[int, ...]
    report: WitnessReport


def counterexample_for_polynomial(
    h: Polynomial,
    q_min: int = 3,
    terms: Optional[int] = None,
    max_n: int = 10_000,
    max_q: Optional[int] = None,
) -> Counterexample:
    """Time-change a single orbit of prime length ``q`` along ``h`` and check the result.

    Scans ``n = 1, 2, ...`` and, for each, the primes ``q >= q_min`` dividing
    ``h(n)`` in ascending order; the first hit fixes ``(q, n0)``. The system
    with one closed orbit of length ``q`` has ``a_m = q`` if ``q | m`` else 0,
    and ``(a_{h(n)})`` is checked over ``terms`` values (default ``2 q``).
    A passing report means no violation was found in that prefix.
    Raises ``SearchBudgetExhausted`` if no prime turns up within the caps.
    """
    if not isinstance(h, Polynomial) or h.is_monomial or h.degree < 1:
        raise ValueError(f"{h} must be a non-monomial polynomial of degree >= 1")
    found = None
    for n in range(1, max_n + 1):
        for q in sorted(factorize(h(n))):
            if q >= q_min and (max_q is None or q <= max_q):
                found = (q, n)
                break
        if found:
            break
    if found is None:
        raise SearchBudgetExhausted(
            f"no prime q >= {q_min}{'' if max_q is None else f' and <= {max_q}'} "
            f"divides {h}(n) for n <= {max_n}"
        )
    q, n0 = found
    length = terms if terms is not None else max(2 * q, 2 * n0)
    b = tuple(q if h(n) % q == 0 else 0 for n in range(1, length + 1))
    return Counterexample(q, n0, b, check_realizable(b))


# -- preservation harnesses ------------------------------------------------------


@dataclass
class SuiteSummary:
    trials: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def preservation_suite(maps: Sequence[TimeChange], trials: int, N: int, seed: int) -> SuiteSummary:
    """Check that each map sends random realizable prefixes to realizable prefixes.

    Each trial draws orbit counts in [0, 9], long enough that every map yields
    ``N`` terms, builds the fix counts and checks them before and after every
    time-change. Failures are recorded as ``(trial, str(map), report)``.
    """
    need = max(max(h(n) for n in range(1, N + 1)) for h in maps)
    summary = SuiteSummary(trials)
    for t in range(trials):
        rng = _trial_rng(seed, t)
        a = fix_from_orbits([rng.randint(0, 9) for _ in range(need)])
        report = check_realizable(a)
        summary.checks += 1
        if not report.passed:
            summary.failures.append((t, "source", report))
        for h in maps:
            report = check_realizable(apply(h, a, max_terms=N))
            summary.checks += 1
            if not report.passed:
                summary.failures.append((t, str(h), report))
    return summary


def monomial_preservation_suite(
    trials: int = 50, k_max: int = 2, N: int = 64, seed: int = 0, c_max: int = 3
) -> SuiteSummary:
    maps = [Monomial(c, k) for c in range(1, c_max + 1) for k in range(1, k_max + 1)]
    return preservation_suite(maps, trials, N, seed)
