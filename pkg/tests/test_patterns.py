from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from pfpatterns.combinatorics import compositions
from pfpatterns.parking import enumerate_pf
from pfpatterns.patterns import (
    STRICT_DECREASING,
    WEAK_INCREASING,
    all_permutations,
    av_count,
    comp_of_set,
    descent_set,
    ides,
    inverse,
    longest_monotone,
    perm_contains,
    set_of_comp,
    standardize,
    word_contains,
    words_with_content,
)

from oracles import contains_bruteforce, longest_subsequence

W = (2, 3, 3, 5, 6, 1, 6, 3, 5)
words = st.lists(st.integers(1, 4), max_size=7).map(tuple)


def test_standardize_examples():
    assert standardize(W) == (2, 3, 4, 6, 8, 1, 9, 5, 7)
    assert standardize((1, 2, 1)) == (1, 3, 2)
    assert standardize((2, 5, 9)) == (1, 2, 3)


def test_inverse_examples():
    assert inverse((2, 3, 4, 6, 8, 1, 9, 5, 7)) == (6, 1, 2, 3, 8, 4, 9, 5, 7)
    assert inverse((1, 2, 3)) == (1, 2, 3)
    assert inverse((2, 1, 3)) == (2, 1, 3)


def test_inverse_is_involution():
    for n in range(9):
        for p in all_permutations(n):
            assert inverse(inverse(p)) == p


@given(st.permutations(range(1, 8)).map(tuple))
def test_standardize_fixes_permutations(p):
    assert standardize(p) == p


def test_perm_contains_examples():
    pi = (6, 1, 2, 3, 8, 4, 9, 5, 7)
    assert perm_contains(pi, (1, 2, 3))
    assert not perm_contains(pi, (3, 2, 1))
    for sigma in all_permutations(4):
        assert perm_contains(sigma, sigma)


def test_word_contains_examples():
    assert word_contains(W, (1, 2, 3))
    assert not word_contains(W, (3, 2, 1))
    assert word_contains(W, (3, 1, 2))


def test_word_contains_rejects_non_cayley():
    with pytest.raises(ValueError):
        word_contains(W, (1, 3))


def test_word_pattern_equalities_are_respected():
    assert word_contains((1, 2, 1), (1, 2, 1))
    assert not word_contains((1, 2, 3), (1, 2, 1))
    assert not word_contains((2, 2), (1, 2))


@given(words, st.sampled_from([(1, 2, 1), (2, 1, 1), (1, 1), (1, 3, 2), (2, 1, 2, 1), (3, 2, 1)]))
def test_word_contains_matches_bruteforce(w, c):
    assert word_contains(w, c) == contains_bruteforce(w, c)


def test_perm_contains_matches_bruteforce_exhaustive():
    for n in range(1, 7):
        for p in all_permutations(n):
            for sigma in [(1, 3, 2), (2, 3, 1), (3, 2, 1), (2, 1, 4, 3)]:
                assert perm_contains(p, sigma) == contains_bruteforce(p, sigma)


def test_longest_monotone_examples():
    assert longest_monotone(W, STRICT_DECREASING) == 2
    assert longest_monotone(W, WEAK_INCREASING) == 6
    assert longest_monotone((), STRICT_DECREASING) == 0
    assert longest_monotone((), WEAK_INCREASING) == 0


@given(words)
def test_longest_monotone_matches_subsequence_search(w):
    assert longest_monotone(w, STRICT_DECREASING) == longest_subsequence(w, lambda a, b: a > b)
    assert longest_monotone(w, WEAK_INCREASING) == longest_subsequence(w, lambda a, b: a <= b)


def test_descent_sets():
    assert descent_set((4, 5, 6, 3, 7, 8, 1, 2)) == {3, 6}
    assert descent_set((1, 2, 3, 4)) == set()
    sigma = (6, 1, 2, 3, 8, 4, 9, 5, 7)
    assert ides(sigma) == descent_set(inverse(sigma)) == {5, 7}


def test_comp_of_set():
    assert comp_of_set({3, 6}, 8) == (3, 3, 2)
    assert comp_of_set(set(), 5) == (5,)
    with pytest.raises(ValueError):
        comp_of_set({0}, 3)
    with pytest.raises(ValueError):
        comp_of_set({3}, 3)


def test_set_composition_roundtrip():
    for bits in product([0, 1], repeat=5):
        s = {i + 1 for i, b in enumerate(bits) if b}
        assert set_of_comp(comp_of_set(s, 6)) == s


def test_words_with_content():
    assert len(list(words_with_content((2, 2, 1)))) == 30
    assert list(words_with_content((4,))) == [(1, 1, 1, 1)]
    assert sorted(words_with_content((1, 1, 1))) == sorted(all_permutations(3))


@pytest.mark.parametrize("n,sigma,expected", [(3, (1, 3, 2), 5), (4, (3, 2, 1), 14), (5, (1, 2), 1)])
def test_av_count(n, sigma, expected):
    assert av_count(n, sigma) == expected


def test_decreasing_pattern_as_word_equals_standardized():
    for m in range(7):
        for w in product(range(1, 5), repeat=m):
            st_w = standardize(w)
            for k in (1, 2, 3):
                dec = tuple(range(k + 1, 0, -1))
                inc = tuple(range(1, k + 2))
                assert word_contains(w, dec) == perm_contains(st_w, dec)
                assert perm_contains(st_w, inc) == (longest_monotone(w, WEAK_INCREASING) >= k + 1)


def test_inverse_descents_sit_on_content_boundaries():
    for n in range(1, 8):
        for alpha in compositions(n):
            allowed = set_of_comp(alpha)
            for w in words_with_content(alpha):
                assert ides(standardize(w)) <= allowed


def test_word_level_wilf_equivalence_on_parking_functions():
    for n in range(1, 7):
        pfs = list(enumerate_pf(n))
        counts = {
            sigma: sum(1 for p in pfs if not word_contains(p, sigma)) for sigma in all_permutations(3)
        }
        assert len(set(counts.values())) == 1, counts


def test_av_count_matches_catalan_for_length_three():
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for sigma in all_permutations(3):
        for n in range(7):
            assert av_count(n, sigma) == catalan[n]
    assert factorial(4) == av_count(4, (1, 2, 3, 4, 5))
