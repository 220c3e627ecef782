"""Parking functions: the parking process, validity, enumeration and views."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from .combinatorics import check_bound
from .patterns import inverse, perm_contains, standardize

#: Default exhaustive bound for :func:`enumerate_pf`.
PF_BOUND = 7


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of running the parking process.

    ``spots[i]`` is the spot (1-based) taken by car i+1 when every car parked.
    Otherwise ``failed_car`` is the first car that drove off the street and
    ``spots`` covers only the cars before it.
    """

    spots: tuple[int, ...]
    failed_car: Optional[int] = None

    @property
    def total(self) -> bool:
        return self.failed_car is None


def park(prefs: Sequence[int]) -> ParkingOutcome:
    n = len(prefs)
    if any(not 1 <= p <= n for p in prefs):
        raise ValueError(f"preferences must lie in [1, {n}]: {tuple(prefs)}")
    taken = [False] * (n + 2)
    spots = []
    for car, p in enumerate(prefs, start=1):
        spot = p
        while spot <= n and taken[spot]:
            spot += 1
        if spot > n:
            return ParkingOutcome(tuple(spots), failed_car=car)
        taken[spot] = True
        spots.append(spot)
    return ParkingOutcome(tuple(spots))


def is_parking_function(prefs: Sequence[int]) -> bool:
    """Sorted-prefix criterion: the i-th smallest preference is at most i."""
    n = len(prefs)
    if any(not 1 <= p <= n for p in prefs):
        return False
    return all(p <= i for i, p in enumerate(sorted(prefs), start=1))


def _require_pf(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(p)
    if not is_parking_function(p):
        raise ValueError(f"{p} is not a parking function")
    return p


def enumerate_pf(n: int, bound: int = PF_BOUND) -> Iterator[tuple[int, ...]]:
    """Yield every parking function of length ``n`` in lexicographic order."""
    check_bound(n, bound, "enumerate_pf")
    for prefs in product(range(1, n + 1), repeat=n):
        if is_parking_function(prefs):
            yield prefs


def label_permutation(p: Sequence[int]) -> tuple[int, ...]:
    """Cars grouped by preferred spot (spots increasing, cars increasing)."""
    p = _require_pf(p)
    return tuple(car for _, car in sorted((pref, car) for car, pref in enumerate(p, start=1)))


def content_of(p: Sequence[int]) -> tuple[int, ...]:
    """Number of cars preferring each spot 1..n (zeros kept)."""
    p = _require_pf(p)
    counts = [0] * len(p)
    for x in p:
        counts[x - 1] += 1
    return tuple(counts)


def dyck_of_pf(p: Sequence[int]) -> tuple[str, tuple[tuple[int, ...], ...]]:
    """Labelled Dyck path view of a parking function.

    Returns the U/D word whose ascent runs are the nonzero entries of the
    content, together with the car labels on each run in increasing order.
    Each spot v contributes U^{content_v} followed by one D.
    """
    p = _require_pf(p)
    content = content_of(p)
    steps = []
    runs = []
    for spot, c in enumerate(content, start=1):
        steps.append("U" * c + "D")
        if c:
            runs.append(tuple(car for car, pref in enumerate(p, start=1) if pref == spot))
    return "".join(steps), tuple(runs)


def _valid_content(prefix: Sequence[int]) -> bool:
    total = 0
    for i, c in enumerate(prefix, start=1):
        total += c
        if total < i:
            return False
    return True


def valid_rotations(beta: Sequence[int]) -> list[int]:
    """Every rotation index whose first n parts form a parking-function content."""
    m = len(beta)
    out = []
    for r in range(m):
        rotated = tuple(beta[r:]) + tuple(beta[:r])
        if rotated[-1] == 0 and _valid_content(rotated[:-1]):
            out.append(r)
    return out


def pollak_representative(beta: Sequence[int]) -> int:
    """The unique rotation of an (n+1)-part weak composition of n that is a PF content."""
    n = len(beta) - 1
    if n < 0 or sum(beta) != n or any(b < 0 for b in beta):
        raise ValueError(f"expected n+1 nonnegative parts summing to n, got {tuple(beta)}")
    found = valid_rotations(beta)
    assert len(found) == 1, f"cyclic-shift uniqueness violated for {tuple(beta)}: {found}"
    return found[0]


def pf_avoids(p: Sequence[int], sigma: Sequence[int]) -> bool:
    """Avoidance in the label-permutation sense: pi(p) avoids sigma."""
    return not perm_contains(label_permutation(p), sigma)


def label_permutation_via_standardization(p: Sequence[int]) -> tuple[int, ...]:
    return inverse(standardize(_require_pf(p)))
