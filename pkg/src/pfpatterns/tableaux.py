"""Young tableaux: hook lengths, contents, exact counting formulas and RSK."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .combinatorics import check_bound, conjugate, is_partition
from .patterns import STRICT_DECREASING, WEAK_INCREASING, longest_monotone

Grid = tuple[tuple[int, ...], ...]

#: Largest tableau size the exhaustive Kostka counter accepts.
KOSTKA_BOUND = 12


def _require_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def hook_lengths(lam: Sequence[int]) -> Grid:
    lam = _require_partition(lam)
    cols = conjugate(lam)
    return tuple(
        tuple((row - j - 1) + (cols[j] - i - 1) + 1 for j in range(row))
        for i, row in enumerate(lam)
    )


def cell_contents(lam: Sequence[int]) -> Grid:
    """Content column - row of each cell, so the first row reads 0, 1, 2, ..."""
    lam = _require_partition(lam)
    return tuple(tuple(j - i for j in range(row)) for i, row in enumerate(lam))


def f_lambda(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    hooks = hook_lengths(lam)
    n = sum(lam)
    denom = prod(h for row in hooks for h in row)
    q, r = divmod(factorial(n), denom)
    assert r == 0, f"hook length formula left a remainder for {tuple(lam)}"
    return q


def schur_ones(lam: Sequence[int], t: int) -> int:
    """s_lambda(1^t): semistandard tableaux of shape ``lam`` with entries <= t.

    Numerator and denominator of the hook content product are formed as
    integers and divided once.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    hooks = hook_lengths(lam)
    contents = cell_contents(lam)
    num = prod(t + c for row in contents for c in row)
    denom = prod(h for row in hooks for h in row)
    q, r = divmod(num, denom)
    assert r == 0, f"hook content formula left a remainder for {tuple(lam)}, t={t}"
    return q


@dataclass(frozen=True)
class TableauPair:
    insertion: Grid
    recording: Grid

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.insertion)


def rsk(w: Sequence[int]) -> TableauPair:
    """Row insertion of ``w`` from left to right.

    Each letter bumps the leftmost entry strictly larger than it, which
    keeps rows weakly increasing and columns strictly increasing.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            current = p_rows[row]
            pos = bisect_right(current, x)
            if pos == len(current):
                current.append(x)
                q_rows[row].append(step)
                break
            current[pos], x = x, current[pos]
            row += 1
    return TableauPair(
        tuple(tuple(r) for r in p_rows), tuple(tuple(r) for r in q_rows)
    )


def greene_invariants(w: Sequence[int]) -> tuple[int, int]:
    """(longest weakly increasing, longest strictly decreasing) subsequence lengths."""
    return longest_monotone(w, WEAK_INCREASING), longest_monotone(w, STRICT_DECREASING)


def count_syt(lam: Sequence[int]) -> int:
    """Standard tableaux counted by removing the largest entry from a corner."""
    return _count_syt(_require_partition(lam))


@lru_cache(maxsize=None)
def _count_syt(lam: tuple[int, ...]) -> int:
    if sum(lam) <= 1:
        return 1
    total = 0
    for i, row in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if row > below:
            smaller = list(lam)
            smaller[i] -= 1
            total += _count_syt(tuple(x for x in smaller if x))
    return total


def _count_fillings(lam: tuple[int, ...], t: int, content: tuple[int, ...] | None) -> int:
    """Semistandard fillings of ``lam`` with entries <= t, optionally of given content."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    grid = [[0] * row for row in lam]
    remaining = list(content) if content is not None else None

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        total = 0
        for v in range(lo, t + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            grid[i][j] = v
            total += rec(idx + 1)
            if remaining is not None:
                remaining[v - 1] += 1
        return total

    return rec(0)


def count_ssyt(lam: Sequence[int], t: int) -> int:
    """Semistandard tableaux with entries <= t, by exhaustive filling."""
    return _count_fillings(_require_partition(lam), t, None)


def kostka(mu: Sequence[int], content: Sequence[int], bound: int = KOSTKA_BOUND) -> int:
    """Semistandard tableaux of shape ``mu`` and the given content (exhaustive)."""
    mu = _require_partition(mu)
    content = tuple(content)
    if sum(mu) != sum(content):
        raise ValueError("shape and content sizes differ")
    check_bound(sum(mu), bound, "kostka")
    return _count_fillings(mu, len(content), content)
