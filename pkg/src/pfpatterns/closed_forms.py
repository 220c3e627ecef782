"""Closed-form enumerations of pattern-avoiding words and parking functions,
with the exhaustive counters they are checked against."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, product
from math import factorial
from typing import Sequence

from .combinatorics import (
    binomial,
    check_bound,
    compositions,
    determinant,
    falling_factorial,
    is_composition,
    partitions,
)
from .lattice_paths import dyck_by_ascent_det
from .parking import PF_BOUND, enumerate_pf, pf_avoids
from .patterns import (
    STRICT_DECREASING,
    WEAK_INCREASING,
    as_permutation,
    longest_monotone,
)
from .tableaux import f_lambda, schur_ones

DECREASING = "decreasing"
INCREASING = "increasing"

#: Compositions of n number 2^(n-1); sums beyond this size need an explicit opt-in.
COMPOSITION_SUM_LIMIT = 24

#: Exhaustive word filtering bound (total words k^n is also capped).
WORD_BOUND = 8

NONMONOTONE = ((1, 3, 2), (2, 3, 1), (2, 1, 3), (3, 1, 2))


@dataclass(frozen=True)
class MonotoneSpec:
    """Forbidden monotone run: strictly decreasing r..1 or weakly increasing 1..r."""

    direction: str
    r: int

    def __post_init__(self) -> None:
        if self.direction not in (DECREASING, INCREASING):
            raise ValueError(f"direction must be {DECREASING!r} or {INCREASING!r}")
        if self.r < 2:
            raise ValueError("pattern length r must be at least 2")

    @property
    def k(self) -> int:
        return self.r - 1


def w321_closed(n: int, k: int) -> int:
    """Words in [k]^n with no strictly decreasing subsequence of length 3."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    total = 0
    for a in range(n // 2 + 1):
        hooks = factorial(a) * factorial(n - 2 * a) * falling_factorial(n - a + 1, a)
        num = (
            factorial(n)
            * falling_factorial(k + n - a - 1, n - a)
            * falling_factorial(k + a - 2, a)
        )
        q, r = divmod(num, hooks * hooks)
        assert r == 0, f"non-integral term a={a} in w321_closed({n}, {k})"
        total += q
    return total


def pf321_closed(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    q, r = divmod(w321_closed(n, n + 1), n + 1)
    assert r == 0, f"w321_closed({n}, {n + 1}) not divisible by {n + 1}"
    return q


def monotone_word_count(n: int, k: int, spec: MonotoneSpec, standardized: bool = True) -> int:
    """Words in [k]^n avoiding the monotone pattern, as a sum over RSK shapes.

    Decreasing: no strictly decreasing subsequence of length r (shapes with
    fewer than r rows).  Increasing with ``standardized``: the standardization
    avoids 1..r, i.e. no weakly increasing subsequence of length r (shapes with
    first row shorter than r).  Increasing without ``standardized`` forbids
    strictly increasing runs of length r; reversal maps these words onto the
    decreasing case.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if spec.direction == DECREASING or not standardized:
        shapes = partitions(n, max_length=spec.r - 1)
    else:
        shapes = partitions(n, max_part=spec.r - 1)
    return sum(schur_ones(lam, k) * f_lambda(lam) for lam in shapes)


def monotone_pf_count(n: int, spec: MonotoneSpec) -> int:
    """Parking functions of length n avoiding the monotone permutation pattern."""
    if n < 1:
        raise ValueError("n must be positive")
    q, r = divmod(monotone_word_count(n, n + 1, spec), n + 1)
    assert r == 0, f"monotone count for n={n}, {spec} not divisible by {n + 1}"
    return q


def _suffix_matrix(parts: Sequence[int]) -> list[list[int]]:
    k = len(parts)
    sums = list(accumulate(parts))
    return [
        [binomial(j + sums[i - 1], j - (i - 1)) for j in range(1, k)] for i in range(1, k)
    ]


def sylvester_class_count_det(alpha: Sequence[int]) -> int:
    """Sylvester classes of words with packed content ``alpha`` (determinant)."""
    if not is_composition(alpha):
        raise ValueError(f"{tuple(alpha)} is not a packed content")
    return determinant(_suffix_matrix(tuple(reversed(alpha))))


def sharp_sylvester_class_count_det(alpha: Sequence[int]) -> int:
    """#-Sylvester classes of words with packed content ``alpha`` (determinant)."""
    if not is_composition(alpha):
        raise ValueError(f"{tuple(alpha)} is not a packed content")
    return determinant(_suffix_matrix(tuple(alpha)))


def nonmonotone_terms(n: int, pattern: Sequence[int]) -> list[tuple[tuple[int, ...], int, int]]:
    """Per composition: (alpha, number of PF contents with those runs, class count)."""
    pattern = tuple(pattern)
    if pattern in ((1, 3, 2), (2, 3, 1)):
        classes = sylvester_class_count_det
    elif pattern in ((2, 1, 3), (3, 1, 2)):
        classes = sharp_sylvester_class_count_det
    else:
        raise ValueError(f"pattern must be one of 132, 231, 213, 312; got {pattern}")
    return [(alpha, dyck_by_ascent_det(alpha), classes(alpha)) for alpha in compositions(n)]


def pf_nonmonotone_count(n: int, pattern: Sequence[int], allow_large: bool = False) -> int:
    """Parking functions of length n avoiding 132, 231, 213 or 312."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > COMPOSITION_SUM_LIMIT and not allow_large:
        raise ValueError(
            f"n={n} sums over 2^{n - 1} compositions; pass allow_large=True to proceed"
        )
    return sum(paths * classes for _, paths, classes in nonmonotone_terms(n, pattern))


def pf_bruteforce_count(n: int, sigma: Sequence[int], bound: int = PF_BOUND) -> int:
    """Parking functions avoiding ``sigma`` in the label-permutation sense, by enumeration."""
    sigma = as_permutation(sigma)
    return sum(1 for p in enumerate_pf(n, bound) if pf_avoids(p, sigma))


def word_bruteforce_count(
    n: int, k: int, spec: MonotoneSpec, standardized: bool = True, bound: int = WORD_BOUND
) -> int:
    """Exhaustive count of words in [k]^n avoiding the monotone pattern."""
    check_bound(max(n, k), bound, "word_bruteforce_count")
    if spec.direction == DECREASING:
        test = lambda w: longest_monotone(w, STRICT_DECREASING) < spec.r  # noqa: E731
    elif standardized:
        test = lambda w: longest_monotone(w, WEAK_INCREASING) < spec.r  # noqa: E731
    else:
        test = lambda w: longest_monotone(tuple(reversed(w)), STRICT_DECREASING) < spec.r  # noqa: E731
    return sum(1 for w in product(range(1, k + 1), repeat=n) if test(w))
