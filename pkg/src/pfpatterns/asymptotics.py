"""Growth rates of monotone-pattern-avoiding words.

Limits are exact :class:`fractions.Fraction` values; floats appear only for
n-th roots and the simplex objective.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .closed_forms import DECREASING, INCREASING, MonotoneSpec, monotone_word_count, w321_closed
from .combinatorics import binomial
from .patterns import av_count
from .tableaux import f_lambda, schur_ones

#: Largest n accepted by :func:`empirical_roots` for r = 3 decreasing (closed form).
CLOSED_FORM_MAX_N = 400
#: Largest n accepted for general partition sums.
PARTITION_SUM_MAX_N = 60


def decreasing_limit(k: int) -> Fraction:
    """(k+1)^(k+1) / k^(k-1): growth rate of words avoiding k+1, k, ..., 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Fraction((k + 1) ** (k + 1), k ** (k - 1))


def increasing_limit(k: int, degenerate: bool = False) -> Fraction:
    """k^(k+1) / (k-1)^(k-1): growth rate for weakly increasing runs of length k+1.

    k = 1 is only accepted with ``degenerate=True`` and uses 0^0 = 1.
    """
    if k < 1 or (k == 1 and not degenerate):
        raise ValueError("k must be at least 2 (k=1 needs degenerate=True)")
    return Fraction(k ** (k + 1), (k - 1) ** (k - 1))


def limit_for(spec: MonotoneSpec) -> Fraction:
    if spec.direction == DECREASING:
        return decreasing_limit(spec.k)
    return increasing_limit(spec.k, degenerate=True)


def diagonal_count(n: int, spec: MonotoneSpec) -> int:
    """Words in [n]^n avoiding ``spec``; n = 0 counts the empty word."""
    if n == 0:
        return 1
    if spec.direction == DECREASING and spec.r == 3:
        return w321_closed(n, n)
    return monotone_word_count(n, n, spec)


def nth_root(count: int, n: int) -> float:
    """count^(1/n) computed through logarithms so huge ints do not overflow."""
    if count <= 0:
        return 0.0
    return math.exp(_log_int(count) / n)


def _log_int(x: int) -> float:
    bits = x.bit_length()
    if bits < 1000:
        return math.log(x)
    shift = bits - 60
    return math.log(x >> shift) + shift * math.log(2)


@dataclass
class GrowthReport:
    spec: MonotoneSpec
    limit: Fraction
    samples: list[tuple[int, int, float]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.spec.k

    def rows(self) -> list[dict]:
        return [{"n": n, "count": str(c), "root": root} for n, c, root in self.samples]

    def to_dict(self) -> dict:
        return {
            "direction": self.spec.direction,
            "r": self.spec.r,
            "k": self.k,
            "limit": str(self.limit),
            "limit_float": float(self.limit),
            "samples": self.rows(),
        }


def max_evaluable_n(spec: MonotoneSpec) -> int:
    if spec.direction == DECREASING and spec.r == 3:
        return CLOSED_FORM_MAX_N
    return PARTITION_SUM_MAX_N


def empirical_roots(spec: MonotoneSpec, ns: Iterable[int]) -> GrowthReport:
    """Exact diagonal counts and their n-th roots for each n in ``ns``."""
    report = GrowthReport(spec, limit_for(spec))
    top = max_evaluable_n(spec)
    for n in ns:
        if not 1 <= n <= top:
            raise ValueError(f"n={n} outside evaluable range 1..{top} for {spec}")
        count = diagonal_count(n, spec)
        report.samples.append((n, count, nth_root(count, n)))
    return report


def supermultiplicativity_check(spec: MonotoneSpec, n: int, m: int) -> bool:
    """a_n * a_m <= a_(n+m) for the diagonal counts, compared exactly."""
    return diagonal_count(n, spec) * diagonal_count(m, spec) <= diagonal_count(n + m, spec)


def _xlogx(x: float) -> float:
    return 0.0 if x == 0 else x * math.log(x)


def growth_objective(direction: str, a: Sequence[float]) -> float:
    """Exponential growth of the RSK term for limiting row/column proportions ``a``.

    Decreasing: prod (1+a_i)^(1+a_i) / a_i^(2 a_i).
    Increasing: 1 / prod (1-a_i)^(1-a_i) a_i^(2 a_i).
    Zero components contribute a factor 1 (x^x -> 1).
    """
    if any(x < 0 or x > 1 for x in a):
        raise ValueError("components must lie in [0, 1]")
    if abs(sum(a) - 1) > 1e-12:
        raise ValueError(f"components must sum to 1, got {sum(a)!r}")
    if direction == DECREASING:
        log_value = sum(_xlogx(1 + x) - 2 * _xlogx(x) for x in a)
    elif direction == INCREASING:
        log_value = -sum(_xlogx(1 - x) + 2 * _xlogx(x) for x in a)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return math.exp(log_value)


def random_simplex_point(k: int, rng: random.Random) -> list[float]:
    """Uniform point on the probability simplex, renormalised to sum to 1."""
    weights = [rng.expovariate(1.0) for _ in range(k)]
    total = sum(weights)
    point = [w / total for w in weights]
    point[-1] = max(0.0, 1.0 - sum(point[:-1]))
    return point


def simplex_maximum_check(direction: str, k: int, samples: int, seed: int = 0) -> bool:
    """The uniform point beats every sampled point of the k-simplex."""
    rng = random.Random(seed)
    best = growth_objective(direction, [1.0 / k] * k)
    tol = 1e-12 * best
    for _ in range(samples):
        if growth_objective(direction, random_simplex_point(k, rng)) > best + tol:
            return False
    return True


def rectangle_term(n: int, k: int) -> int:
    """s_(n^k)(1^(nk)) * f^(n^k) for the k-row rectangle with rows of length n."""
    shape = (n,) * k
    return schur_ones(shape, n * k) * f_lambda(shape)


def surjection_bound_check(n: int, k: int) -> bool:
    """w_(n,n)(k+1..1) <= binom(2n-1, n) |Av_n(k+1..1)|, compared exactly."""
    spec = MonotoneSpec(DECREASING, k + 1)
    lhs = diagonal_count(n, spec)
    pattern = tuple(range(k + 1, 0, -1))
    return lhs <= binomial(2 * n - 1, n) * av_count(n, pattern)
