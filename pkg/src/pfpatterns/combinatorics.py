"""Exact integer helpers shared by the rest of the package.

Everything here works on plain Python ints, so counts never lose precision.
Compositions and partitions are represented as tuples of ints.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Optional, Sequence


class BoundExceeded(ValueError):
    """Raised when an exhaustive oracle is asked for a size beyond its bound."""


def check_bound(n: int, bound: int, what: str) -> None:
    if n > bound:
        raise BoundExceeded(f"{what}: n={n} exceeds exhaustive bound {bound}")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``.

    A negative lower index is allowed (the LGV matrices need it below the
    subdiagonal); a negative upper index is not.
    """
    if n < 0:
        raise ValueError(f"binomial upper index must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def falling_factorial(x: int, m: int) -> int:
    """x (x-1) ... (x-m+1); the empty product for m == 0."""
    if m < 0:
        raise ValueError("falling factorial length must be nonnegative")
    result = 1
    for i in range(m):
        result *= x - i
    return result


def multinomial(parts: Sequence[int]) -> int:
    result = 1
    total = 0
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate division is exact, so the computation stays in the
    integers. The empty matrix has determinant 1.
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    for row in a:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss step left a remainder"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the compositions of ``n`` in lexicographic order of parts.

    n=3 gives (1, 1, 1), (1, 2), (2, 1), (3).
    """
    if n < 1:
        raise ValueError("compositions are defined for n >= 1")

    def rec(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    yield from rec(n)


def partitions(
    n: int, max_length: Optional[int] = None, max_part: Optional[int] = None
) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of ``n`` in lexicographic order of parts.

    ``max_length`` bounds the number of parts and ``max_part`` the largest
    part (both inclusive).  n=0 yields the empty partition once.
    """
    if n < 0:
        raise ValueError("partitions are defined for n >= 0")
    if (max_length is not None and max_length < 0) or (max_part is not None and max_part < 0):
        raise ValueError("partition constraints must be nonnegative")
    top = n if max_part is None else min(n, max_part)
    length = n if max_length is None else max_length

    def rec(remaining: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or cap * slots < remaining:
            return
        for first in range(max(1, -(-remaining // slots)), min(cap, remaining) + 1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, top, length)


def conjugate(partition: Sequence[int]) -> tuple[int, ...]:
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > i) for i in range(partition[0]))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_composition(parts: Sequence[int]) -> bool:
    return len(parts) > 0 and all(p > 0 for p in parts)


def weak_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All length-``length`` tuples of nonnegative ints summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in weak_compositions(total - first, length - 1):
            yield (first,) + rest


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
