from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from pfpatterns.combinatorics import multinomial, partitions
from pfpatterns.patterns import words_with_content
from pfpatterns.tableaux import (
    cell_contents,
    count_ssyt,
    count_syt,
    f_lambda,
    greene_invariants,
    hook_lengths,
    kostka,
    rsk,
    schur_ones,
)

from oracles import longest_subsequence, ssyt_count, syt_count


def test_grids_for_643():
    assert hook_lengths((6, 4, 3)) == ((8, 7, 6, 4, 2, 1), (5, 4, 3, 1), (3, 2, 1))
    assert cell_contents((6, 4, 3)) == ((0, 1, 2, 3, 4, 5), (-1, 0, 1, 2), (-2, -1, 0))


def test_rejects_non_partitions():
    with pytest.raises(ValueError):
        hook_lengths((2, 3))
    with pytest.raises(ValueError):
        f_lambda((1, 0, 1))


@pytest.mark.parametrize("lam,expected", [((3, 2), 5), ((2, 2), 2), ((4,), 1), ((), 1), ((3, 2, 1), 16)])
def test_f_lambda_examples(lam, expected):
    assert f_lambda(lam) == expected


def test_f_lambda_matches_oracle():
    for n in range(9):
        for lam in partitions(n):
            assert f_lambda(lam) == count_syt(lam)
            if n <= 7:
                assert f_lambda(lam) == syt_count(lam)


def test_sum_of_squares_is_factorial():
    from math import factorial
    for n in range(11):
        assert sum(f_lambda(lam) ** 2 for lam in partitions(n)) == factorial(n)


@pytest.mark.parametrize("lam,t,expected", [((2, 1), 2, 2), ((1,), 3, 3), ((2,), 0, 0), ((1, 1, 1), 2, 0), ((), 0, 1)])
def test_schur_ones_examples(lam, t, expected):
    assert schur_ones(lam, t) == expected


def test_schur_ones_matches_oracle():
    for n in range(5):
        for lam in partitions(n):
            for t in range(5):
                assert schur_ones(lam, t) == ssyt_count(lam, t)
    for n in range(7):
        for lam in partitions(n):
            for t in range(6):
                assert schur_ones(lam, t) == count_ssyt(lam, t)


def test_rsk_example():
    pair = rsk((2, 3, 3, 5, 6, 1, 6, 3, 5))
    assert pair.shape == (6, 3)
    assert pair.insertion == ((1, 3, 3, 3, 5, 6), (2, 5, 6))
    assert rsk(()).shape == ()


def test_rsk_is_injective_on_small_words():
    seen = {}
    for w in product(range(1, 4), repeat=4):
        pair = rsk(w)
        assert pair not in seen
        seen[pair] = w
    assert len(seen) == 81


@given(st.lists(st.integers(1, 5), max_size=8).map(tuple))
def test_rsk_tableaux_are_semistandard(w):
    pair = rsk(w)
    p, q = pair.insertion, pair.recording
    assert [len(r) for r in p] == [len(r) for r in q]
    for rows, strict_rows in ((p, False), (q, True)):
        for r in rows:
            for a, b in zip(r, r[1:]):
                assert a < b if strict_rows else a <= b
        for i in range(1, len(rows)):
            for j, v in enumerate(rows[i]):
                assert rows[i - 1][j] < v
    assert sorted(x for r in p for x in r) == sorted(w)


def test_greene_shape_for_small_words():
    for m in range(6):
        for w in product(range(1, 5), repeat=m):
            shape = rsk(w).shape
            inc, dec = greene_invariants(w)
            assert (shape[0] if shape else 0) == inc
            assert len(shape) == dec
            assert dec == longest_subsequence(w, lambda a, b: a > b)


def test_young_rule_counts():
    for alpha in [(2, 2, 1), (3, 1), (1, 1, 1, 1), (2, 1, 2)]:
        lam = tuple(sorted(alpha, reverse=True))
        shapes = Counter(rsk(w).shape for w in words_with_content(alpha))
        for mu in partitions(sum(alpha)):
            assert shapes.get(mu, 0) == kostka(mu, lam) * f_lambda(mu)
        assert sum(shapes.values()) == multinomial(alpha)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0
    with pytest.raises(ValueError):
        kostka((2,), (1,))
