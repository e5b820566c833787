"""Fix-count sequences of concrete systems, and closure under sum and product."""

from __future__ import annotations

from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]


def _require_length(N: int) -> None:
    if N < 1:
        raise ValueError(f"length must be positive, got {N}")


def full_shift(a: int, N: int) -> tuple[int, ...]:
    """Full shift on ``a`` symbols: ``a_n = a**n``."""
    if a < 2:
        raise ValueError("full shift needs at least 2 symbols; use constant_system for a = 1")
    _require_length(N)
    return tuple(a**n for n in range(1, N + 1))


def constant_system(size: int, N: int) -> tuple[int, ...]:
    """Identity map on ``size`` points."""
    if size < 0:
        raise ValueError("size must be non-negative")
    _require_length(N)
    return (size,) * N


def golden_mean(N: int) -> tuple[int, ...]:
    """Lucas numbers ``trace([[1,1],[1,0]]**n)``, via the recurrence."""
    _require_length(N)
    out = [1, 3]
    while len(out) < N:
        out.append(out[-1] + out[-2])
    return tuple(out[:N])


def sigma_system(N: int) -> tuple[int, ...]:
    """Sum of divisors: the system with exactly one closed orbit of every length."""
    _require_length(N)
    out = [0] * N
    for d in range(1, N + 1):
        for m in range(d, N + 1, d):
            out[m - 1] += d
    return tuple(out)


def single_orbit(L: int, N: int) -> tuple[int, ...]:
    if L < 1:
        raise ValueError("orbit length must be positive")
    _require_length(N)
    return tuple(L if n % L == 0 else 0 for n in range(1, N + 1))


def negated_shift(a: int, N: int) -> tuple[int, ...]:
    """``x -> -a x mod 1`` on the circle: ``a_n = a**n - (-1)**n``."""
    if a < 2:
        raise ValueError("a must be at least 2")
    _require_length(N)
    return tuple(a**n - (-1) ** n for n in range(1, N + 1))


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or any(len(row) != len(m) for row in m):
        raise ValueError("matrix must be square with dimension >= 1")
    return m


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in A)


def determinant(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = [list(row) for row in A]
    d = len(M)
    sign, prev = 1, 1
    for k in range(d - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, d) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[d - 1][d - 1]


def lehmer_pierce(A: Sequence[Sequence[int]], N: int) -> tuple[int, ...]:
    """``|det(A**n - I)|`` for n = 1..N; rejects A if any term vanishes."""
    A = as_matrix(A)
    _require_length(N)
    out = []
    power = A
    for n in range(1, N + 1):
        if n > 1:
            power = matmul(power, A)
        shifted = tuple(
            tuple(x - (1 if i == j else 0) for j, x in enumerate(row)) for i, row in enumerate(power)
        )
        det = determinant(shifted)
        if det == 0:
            raise ValueError(f"det(A^{n} - I) = 0: matrix is not ergodic (fails at n = {n})")
        out.append(abs(det))
    return tuple(out)


def pointwise_product(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Cartesian product of systems; truncates to the shorter prefix."""
    return tuple(x * y for x, y in zip(a, b))


def pointwise_sum(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Disjoint union of systems; truncates to the shorter prefix."""
    return tuple(x + y for x, y in zip(a, b))
