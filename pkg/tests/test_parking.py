import random
from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from pfpatterns.combinatorics import weak_compositions
from pfpatterns.parking import (
    content_of,
    dyck_of_pf,
    enumerate_pf,
    is_parking_function,
    label_permutation,
    park,
    pf_avoids,
    pollak_representative,
    valid_rotations,
)
from pfpatterns.lattice_paths import ascent_comp, is_dyck

from oracles import is_pf_by_parking, std_inverse

P = (2, 3, 3, 5, 6, 1, 6, 3, 5)


def test_park_failure_and_success():
    out = park((1, 4, 3, 4))
    assert not out.total and out.failed_car == 4
    assert park((1, 1, 1, 1)).spots == (1, 2, 3, 4)
    spots = park(P).spots
    assert park(P).total
    # cars 2, 3, 8 prefer spot 3; car 8 arrives after spots 1..7 are taken
    assert [spots[c - 1] for c in (2, 3, 8)] == [3, 4, 8]


def test_is_parking_function_examples():
    assert not is_parking_function((1, 4, 3, 4))
    assert is_parking_function(P)
    for p in permutations(range(1, 6)):
        assert is_parking_function(p)


def test_park_agrees_with_sorted_criterion_exhaustive():
    for n in range(1, 6):
        for prefs in product(range(1, n + 1), repeat=n):
            assert park(prefs).total == is_parking_function(prefs) == is_pf_by_parking(prefs)


def test_park_agrees_with_sorted_criterion_random():
    rng = random.Random(7)
    for n in (6, 7):
        for _ in range(3000):
            prefs = tuple(rng.randint(1, n) for _ in range(n))
            assert park(prefs).total == is_parking_function(prefs)


def test_total_outcome_is_permutation():
    for p in enumerate_pf(5):
        assert sorted(park(p).spots) == [1, 2, 3, 4, 5]


def test_enumerate_small():
    assert list(enumerate_pf(2)) == [(1, 1), (1, 2), (2, 1)]
    assert len(list(enumerate_pf(3))) == 16
    assert len(list(enumerate_pf(4))) == 125


def test_enumerate_counts():
    for n in range(1, 7):
        pfs = list(enumerate_pf(n))
        assert len(pfs) == len(set(pfs)) == (n + 1) ** (n - 1)


def test_enumerate_bound():
    with pytest.raises(ValueError):
        list(enumerate_pf(8))


def test_label_permutation_examples():
    assert label_permutation(P) == (6, 1, 2, 3, 8, 4, 9, 5, 7)
    assert label_permutation((1, 2, 3, 4)) == (1, 2, 3, 4)
    assert label_permutation((1, 1, 1)) == (1, 2, 3)
    with pytest.raises(ValueError):
        label_permutation((1, 4, 3, 4))


def test_label_permutation_is_inverse_standardization():
    for n in range(1, 7):
        for p in enumerate_pf(n):
            assert label_permutation(p) == std_inverse(p)


def test_content_and_dyck_view():
    assert content_of(P) == (1, 1, 3, 0, 2, 2, 0, 0, 0)
    path, labels = dyck_of_pf(P)
    assert ascent_comp(path) == (1, 1, 3, 2, 2)
    assert labels == ((6,), (1,), (2, 3, 8), (4, 9), (5, 7))
    assert content_of((1, 1, 1)) == (3, 0, 0)
    assert content_of((3, 1, 2)) == (1, 1, 1)


def test_dyck_view_is_always_a_dyck_path():
    for n in range(1, 6):
        for p in enumerate_pf(n):
            path, labels = dyck_of_pf(p)
            assert is_dyck(path)
            assert sum(labels, ()) == label_permutation(p)


def test_pollak_examples():
    assert pollak_representative((2, 0, 0)) == 0
    r = pollak_representative((0, 1, 1))
    beta = (0, 1, 1)
    assert (beta[r:] + beta[:r])[:2] == (1, 1)
    assert pollak_representative((1, 0)) == 0


def test_pollak_uniqueness_exhaustive():
    for n in range(1, 7):
        for beta in weak_compositions(n, n + 1):
            assert len(valid_rotations(beta)) == 1


def test_pf_avoids_examples():
    assert not pf_avoids((1, 2, 1), (1, 3, 2))
    assert not pf_avoids((2, 1, 3), (2, 1, 3))
    for sigma in [(2, 1), (1, 3, 2), (3, 2, 1)]:
        assert pf_avoids((1, 1, 1), sigma)


@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(1, n), min_size=n, max_size=n)),
       st.randoms())
def test_rearranging_a_parking_function_keeps_it_valid(prefs, rnd):
    if is_parking_function(prefs):
        shuffled = list(prefs)
        rnd.shuffle(shuffled)
        assert is_parking_function(shuffled)
