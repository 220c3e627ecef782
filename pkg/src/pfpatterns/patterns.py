"""Words, permutations and pattern containment.

Words and permutations are tuples of positive ints in one-line notation.
Positions reported by descent statistics are 1-based.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterable, Iterator, Sequence

from .combinatorics import check_bound

#: Largest n for which the exhaustive permutation counters will run.
PERMUTATION_BOUND = 10

STRICT_DECREASING = "strict-decreasing"
WEAK_INCREASING = "weak-increasing"


def as_word(letters: Iterable[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in letters)
    if any(x < 1 for x in w):
        raise ValueError(f"word letters must be positive: {w}")
    return w


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def as_permutation(letters: Iterable[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in letters)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def is_cayley(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, len(set(w)) + 1))


def standardize(w: Sequence[int]) -> tuple[int, ...]:
    """Permutation order-isomorphic to ``w``; equal letters rank left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    ranks = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return tuple(ranks)


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def _neighbour_plan(pattern: Sequence[int]) -> list[tuple[int, int, int]]:
    """For each pattern position, the earlier positions that bound its value.

    Returns (equal, below, above) indices, -1 when absent.  ``equal`` is an
    earlier position with the same letter; otherwise ``below``/``above`` are
    the earlier positions holding the nearest smaller/larger letters.
    """
    plan = []
    for d, c in enumerate(pattern):
        equal = below = above = -1
        for t in range(d):
            ct = pattern[t]
            if ct == c:
                equal = t
            elif ct < c and (below < 0 or ct > pattern[below]):
                below = t
            elif ct > c and (above < 0 or ct < pattern[above]):
                above = t
        plan.append((equal, below, above))
    return plan


def _contains(text: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    n = len(text)
    if k == 0:
        return True
    if k > n:
        return False
    plan = _neighbour_plan(pattern)
    chosen = [0] * k

    def search(start: int, depth: int) -> bool:
        if depth == k:
            return True
        equal, below, above = plan[depth]
        for i in range(start, n - (k - depth) + 1):
            v = text[i]
            if equal >= 0:
                if v != chosen[equal]:
                    continue
            else:
                if below >= 0 and v <= chosen[below]:
                    continue
                if above >= 0 and v >= chosen[above]:
                    continue
            chosen[depth] = v
            if search(i + 1, depth + 1):
                return True
        return False

    return search(0, 0)


def perm_contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """True if some subsequence of ``pi`` is order-isomorphic to ``sigma``."""
    return _contains(pi, sigma)


def word_contains(w: Sequence[int], c: Sequence[int]) -> bool:
    """Containment of the Cayley word ``c`` in ``w``.

    Equal letters of ``c`` must be matched by equal letters of ``w`` and
    distinct letters by letters in the same strict order.
    """
    if not is_cayley(c):
        raise ValueError(f"pattern {tuple(c)} is not a Cayley word")
    return _contains(w, c)


def longest_monotone(w: Sequence[int], mode: str) -> int:
    """Length of the longest strictly decreasing or weakly increasing subsequence."""
    if mode == STRICT_DECREASING:
        ok = lambda a, b: a > b  # noqa: E731
    elif mode == WEAK_INCREASING:
        ok = lambda a, b: a <= b  # noqa: E731
    else:
        raise ValueError(f"unknown mode {mode!r}")
    best = [1] * len(w)
    for j in range(len(w)):
        for i in range(j):
            if ok(w[i], w[j]) and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


def descent_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def ides(p: Sequence[int]) -> frozenset[int]:
    return descent_set(inverse(p))


def comp_of_set(s: Iterable[int], n: int) -> tuple[int, ...]:
    """Composition of ``n`` whose proper partial sums are the set ``s``."""
    points = sorted(set(s))
    if any(x < 1 or x > n - 1 for x in points):
        raise ValueError(f"set {points} is not contained in [1, {n - 1}]")
    parts = []
    prev = 0
    for x in points + [n]:
        parts.append(x - prev)
        prev = x
    return tuple(parts)


def set_of_comp(alpha: Sequence[int]) -> frozenset[int]:
    out = set()
    total = 0
    for part in alpha[:-1]:
        total += part
        out.add(total)
    return frozenset(out)


def words_with_content(content: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Each word with ``content[i]`` copies of letter i+1, in lexicographic order."""
    counts = list(content)
    n = sum(counts)
    word = [0] * n

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(word)
            return
        for letter, c in enumerate(counts):
            if c:
                counts[letter] -= 1
                word[pos] = letter + 1
                yield from rec(pos + 1)
                counts[letter] += 1

    yield from rec(0)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return _permutations(range(1, n + 1))


def av_count(n: int, sigma: Sequence[int], bound: int = PERMUTATION_BOUND) -> int:
    """|Av_n(sigma)| by testing all n! permutations."""
    check_bound(n, bound, "av_count")
    return sum(1 for p in all_permutations(n) if not perm_contains(p, sigma))


def reverse_complement(w: Sequence[int], top: int | None = None) -> tuple[int, ...]:
    """Reverse ``w`` and map each letter x to top+1-x (top defaults to max(w))."""
    if top is None:
        top = max(w, default=0)
    return tuple(top + 1 - x for x in reversed(w))


def packed(content: Sequence[int]) -> tuple[int, ...]:
    return tuple(c for c in content if c > 0)


def content_of_word(w: Sequence[int], length: int | None = None) -> tuple[int, ...]:
    size = max(w, default=0) if length is None else length
    counts = [0] * size
    for x in w:
        counts[x - 1] += 1
    return tuple(counts)
