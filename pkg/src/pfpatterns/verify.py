"""Invariant suites comparing every formula against its exhaustive oracle.

Each suite returns a list of :class:`Check` records; the CLI prints one line
per check and exits nonzero if any failed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import asymptotics, closed_forms, lattice_paths, parking, patterns, sylvester, tableaux
from .combinatorics import catalan, compositions, partitions, weak_compositions


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _agree(name: str, got: int, expected: int) -> Check:
    return Check(name, got == expected, f"{got} vs {expected}")


def suite_pf(n_max: int = 5, slow: bool = False) -> list[Check]:
    bound = parking.PF_BOUND if slow else 6
    top = min(n_max, bound)
    checks = []
    for n in range(1, top + 1):
        pfs = list(parking.enumerate_pf(n))
        checks.append(_agree(f"|PF_{n}| = (n+1)^(n-1)", len(pfs), (n + 1) ** (n - 1)))
        if n <= 5:
            ok = all(
                parking.park(p).total == parking.is_parking_function(p)
                for p in product(range(1, n + 1), repeat=n)
            )
            checks.append(Check(f"park total <=> sorted criterion, n={n}", ok))
        ok = all(
            parking.label_permutation(p) == patterns.inverse(patterns.standardize(p)) for p in pfs
        )
        checks.append(Check(f"pi(p) = std(p)^-1, n={n}", ok))
        checks.append(
            _agree(
                f"pf_{n}(321) closed = brute force",
                closed_forms.pf321_closed(n),
                closed_forms.pf_bruteforce_count(n, (3, 2, 1), bound),
            )
        )
        for sigma in closed_forms.NONMONOTONE:
            name = "".join(map(str, sigma))
            checks.append(
                _agree(
                    f"pf_{n}({name}) determinant sum = brute force",
                    closed_forms.pf_nonmonotone_count(n, sigma),
                    closed_forms.pf_bruteforce_count(n, sigma, bound),
                )
            )
        ok = all(
            len(parking.valid_rotations(beta)) == 1 for beta in weak_compositions(n, n + 1)
        )
        checks.append(Check(f"unique valid cyclic rotation, n={n}", ok))
    return checks


def suite_words(n_max: int = 5, slow: bool = False) -> list[Check]:
    top = min(n_max, 6)
    checks = []
    for r in (2, 3, 4):
        for direction in (closed_forms.DECREASING, closed_forms.INCREASING):
            spec = closed_forms.MonotoneSpec(direction, r)
            bad = [
                (n, k)
                for n in range(0, top + 1)
                for k in range(1, top + 1)
                if closed_forms.monotone_word_count(n, k, spec)
                != closed_forms.word_bruteforce_count(n, k, spec)
            ]
            checks.append(
                Check(f"{direction} r={r}: RSK shape sum = word filter, n,k <= {top}", not bad,
                      f"mismatches {bad}" if bad else "")
            )
    spec = closed_forms.MonotoneSpec(closed_forms.DECREASING, 3)
    ok = all(
        closed_forms.w321_closed(n, k) == closed_forms.monotone_word_count(n, k, spec)
        for n in range(0, 13)
        for k in range(1, 13)
    )
    checks.append(Check("w321 closed form = shape sum, n,k <= 12", ok))
    return checks


def suite_sylvester(n_max: int = 6, slow: bool = False) -> list[Check]:
    top = min(n_max, 7 if not slow else sylvester.CLASS_BOUND)
    checks = []
    for n in range(1, top + 1):
        bad = []
        for alpha in compositions(n):
            table = sylvester.sylv_classes(alpha)
            sharp = sylvester.sharp_classes(alpha)
            if len(table) != closed_forms.sylvester_class_count_det(alpha):
                bad.append(("sylv", alpha))
            if len(sharp) != closed_forms.sharp_sylvester_class_count_det(alpha):
                bad.append(("sharp", alpha))
        checks.append(Check(f"class counts = determinants, packed contents of {n}", not bad,
                            f"mismatches {bad}" if bad else ""))
    length = min(top, 5)
    ok = True
    for m in range(1, length + 1):
        for w in product(range(1, 4), repeat=m):
            cls = sylvester.closure(w, sylvester.sylv_neighbours)
            same_tree = {u for u in patterns.words_with_content(patterns.content_of_word(w, 3))
                         if sylvester.bst_of(u) == sylvester.bst_of(w)}
            if cls != same_tree:
                ok = False
                break
    checks.append(Check(f"BST equality = adjacency closure, words over [3] of length <= {length}", ok))
    return checks


def suite_lgv(n_max: int = 8, slow: bool = False) -> list[Check]:
    checks = []
    for n in range(1, min(n_max, 12) + 1):
        total = sum(lattice_paths.dyck_by_ascent_det(a) for a in compositions(n))
        checks.append(_agree(f"sum of ascent determinants = Catalan({n})", total, catalan(n)))
    for n in range(1, min(n_max, 10) + 1):
        dist = Counter(lattice_paths.ascent_comp(d) for d in lattice_paths.enumerate_dyck(n))
        bad = [a for a in compositions(n) if lattice_paths.dyck_by_ascent_det(a) != dist[a]]
        checks.append(Check(f"ascent determinant = brute force, n={n}", not bad,
                            f"mismatches {bad}" if bad else ""))
    for n in range(1, min(n_max, 8) + 1):
        ok = True
        for alpha in compositions(n):
            fams = list(lattice_paths.lgv_families(alpha))
            paths = [lattice_paths.family_to_dyck(f) for f in fams]
            if len(fams) != lattice_paths.dyck_by_ascent_det(alpha):
                ok = False
            if any(lattice_paths.dyck_to_family(p) != f for p, f in zip(paths, fams)):
                ok = False
            if any(lattice_paths.ascent_comp(p) != alpha for p in paths) or len(set(paths)) != len(paths):
                ok = False
        checks.append(Check(f"LGV families roundtrip and count, n={n}", ok))
    for n in range(1, min(n_max, 7) + 1):
        avoiders = [p for p in patterns.all_permutations(n) if not patterns.perm_contains(p, (1, 3, 2))]
        paths = [lattice_paths.rothe_dyck(p) for p in avoiders]
        ok = all(
            lattice_paths.descent_comp(d) == lattice_paths.descent_comp_of_perm(p)
            for p, d in zip(avoiders, paths)
        ) and len(set(paths)) == len(paths) == catalan(n)
        checks.append(Check(f"Rothe path descent composition, Av_{n}(132)", ok, f"{len(avoiders)} permutations"))
    return checks


def suite_rsk(n_max: int = 5, slow: bool = False) -> list[Check]:
    checks = []
    ok = True
    count = 0
    for m in range(0, min(n_max, 5) + 1):
        for w in product(range(1, 5), repeat=m):
            count += 1
            shape = tableaux.rsk(w).shape
            lis, lds = tableaux.greene_invariants(w)
            if (shape[0] if shape else 0) != lis or len(shape) != lds:
                ok = False
    checks.append(Check("RSK shape = Greene invariants, words over [4]", ok, f"{count} words"))
    for n in range(1, min(n_max + 3, 8) + 1):
        ok = all(tableaux.f_lambda(lam) == tableaux.count_syt(lam) for lam in partitions(n))
        checks.append(Check(f"hook length formula = SYT count, |lambda| = {n}", ok))
    for n in range(1, min(n_max + 1, 6) + 1):
        ok = all(
            tableaux.schur_ones(lam, t) == tableaux.count_ssyt(lam, t)
            for lam in partitions(n)
            for t in range(0, 6)
        )
        checks.append(Check(f"hook content formula = SSYT count, |lambda| = {n}, t <= 5", ok))
    return checks


def suite_growth(n_max: int = 40, slow: bool = False, seed: int = 0) -> list[Check]:
    checks = []
    for direction in (closed_forms.DECREASING, closed_forms.INCREASING):
        spec = closed_forms.MonotoneSpec(direction, 3)
        ok = all(
            asymptotics.supermultiplicativity_check(spec, n, m)
            for n in range(1, n_max)
            for m in range(1, n_max - n + 1)
        )
        checks.append(Check(f"supermultiplicativity {direction} r=3, n+m <= {n_max}", ok))
    spec = closed_forms.MonotoneSpec(closed_forms.DECREASING, 3)
    top = 300 if slow else 100
    report = asymptotics.empirical_roots(spec, range(1, top + 1))
    limit = report.limit
    ok = all(c <= limit ** n for n, c, _ in report.samples)
    checks.append(Check(f"a_n <= (27/2)^n exactly for n <= {top}", ok))
    for direction in (closed_forms.DECREASING, closed_forms.INCREASING):
        for k in range(2, 7):
            ok = asymptotics.simplex_maximum_check(direction, k, 10_000, seed=seed + k)
            checks.append(Check(f"uniform point maximises {direction} objective, k={k}", ok))
    ok = all(asymptotics.surjection_bound_check(n, k) for n in range(1, 7) for k in range(1, 4))
    checks.append(Check("surjection bound, n <= 6, k <= 3", ok))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "pf": suite_pf,
    "words": suite_words,
    "sylvester": suite_sylvester,
    "lgv": suite_lgv,
    "rsk": suite_rsk,
    "growth": suite_growth,
}
