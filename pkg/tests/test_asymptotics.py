import math
import random
from fractions import Fraction

import pytest

from pfpatterns.asymptotics import (
    decreasing_limit,
    diagonal_count,
    empirical_roots,
    growth_objective,
    increasing_limit,
    limit_for,
    nth_root,
    random_simplex_point,
    rectangle_term,
    simplex_maximum_check,
    supermultiplicativity_check,
    surjection_bound_check,
)
from pfpatterns.closed_forms import DECREASING, INCREASING, MonotoneSpec, monotone_word_count

DEC3 = MonotoneSpec(DECREASING, 3)
INC3 = MonotoneSpec(INCREASING, 3)


def test_limits_are_exact():
    assert decreasing_limit(2) == Fraction(27, 2)
    assert decreasing_limit(1) == 4
    assert increasing_limit(2) == 8
    assert increasing_limit(3) == Fraction(81, 4)
    assert increasing_limit(1, degenerate=True) == 1
    with pytest.raises(ValueError):
        increasing_limit(1)
    assert limit_for(DEC3) == Fraction(27, 2)
    assert limit_for(INC3) == 8


def test_diagonal_counts():
    assert [diagonal_count(n, DEC3) for n in range(4)] == [1, 1, 4, 26]
    for n in range(1, 9):
        assert diagonal_count(n, DEC3) == monotone_word_count(n, n, DEC3)


def test_nth_root_handles_huge_integers():
    assert nth_root(92378, 10) == pytest.approx(3.137, abs=1e-3)
    assert nth_root(10 ** 4000, 1000) == pytest.approx(10 ** 4, rel=1e-9)
    assert nth_root(0, 3) == 0.0


def test_roots_stay_below_limit():
    report = empirical_roots(DEC3, range(1, 121))
    assert all(root <= 13.5 for _, _, root in report.samples)
    assert report.to_dict()["limit"] == "27/2"


def test_roots_at_powers_of_two_increase():
    roots = [r for _, _, r in empirical_roots(DEC3, [2 ** j for j in range(9)]).samples]
    assert roots == sorted(roots)
    assert roots[3] == pytest.approx(6.1190, abs=1e-3)


def test_empirical_roots_range():
    with pytest.raises(ValueError):
        empirical_roots(INC3, [61])
    with pytest.raises(ValueError):
        empirical_roots(DEC3, [0])


def test_supermultiplicativity_small():
    for spec in (DEC3, INC3):
        for n in range(1, 12):
            for m in range(1, 12):
                assert supermultiplicativity_check(spec, n, m)


def test_growth_objective_values():
    assert growth_objective(DECREASING, [0.5, 0.5]) == pytest.approx(13.5)
    assert growth_objective(INCREASING, [0.5, 0.5]) == pytest.approx(8)
    assert growth_objective(INCREASING, [1 / 3] * 3) == pytest.approx(20.25)
    assert growth_objective(DECREASING, [1.0, 0.0]) == pytest.approx(4)
    with pytest.raises(ValueError):
        growth_objective(DECREASING, [0.7, 0.7])
    with pytest.raises(ValueError):
        growth_objective("flat", [1.0])


def test_uniform_value_equals_limit():
    for k in range(2, 7):
        assert growth_objective(DECREASING, [1 / k] * k) == pytest.approx(float(decreasing_limit(k)))
        assert growth_objective(INCREASING, [1 / k] * k) == pytest.approx(float(increasing_limit(k)))


def test_simplex_sampling():
    rng = random.Random(3)
    for k in range(1, 6):
        p = random_simplex_point(k, rng)
        assert len(p) == k and math.isclose(sum(p), 1.0) and min(p) >= 0
    assert simplex_maximum_check(DECREASING, 3, 500, seed=1)
    assert simplex_maximum_check(INCREASING, 4, 500, seed=1)


def test_rectangle_and_surjection():
    roots = [nth_root(rectangle_term(n, 2), 2 * n) for n in range(1, 15)]
    assert roots == sorted(roots)
    for n in range(1, 8):
        assert surjection_bound_check(n, 2)
        assert surjection_bound_check(n, 3)
