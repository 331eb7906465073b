import pytest

from brute import grid_patterns, rook_brute
from siteswap.closed_forms import (
    Branch,
    CountQuery,
    Method,
    count,
    count_all_balls_small_ceiling,
    count_ceiling_multiple,
    count_ceiling_multiple_closed,
    count_unbounded,
    derangement_count,
    menage_count,
)
from siteswap import closed_forms
from siteswap.errors import BudgetExceededError, CrossCheckError, NoClosedFormError
from siteswap.exact_math import binomial, eulerian, factorial
from siteswap.oracle import ALL, EnumerationSpec, count_patterns_oracle, rook_oracle


@pytest.mark.parametrize("n, b, expected", [(4, 5, 671), (3, 0, 1), (7, 0, 1), (3, 2, 19)])
def test_count_unbounded(n, b, expected):
    assert count_unbounded(n, b) == expected


def test_count_unbounded_against_oracle():
    assert count_patterns_oracle(EnumerationSpec(3, 2, 6)) == 19


@pytest.mark.parametrize("n, b, a, expected", [(4, 2, 1, 11), (2, 1, 1, 1), (4, 5, 6, 671)])
def test_count_ceiling_multiple(n, b, a, expected):
    assert count_ceiling_multiple(n, b, a) == expected


@pytest.mark.parametrize("n, b, a, expected", [(4, 2, 1, 11), (4, 5, 1, 0), (2, 1, 1, 1)])
def test_count_ceiling_multiple_closed(n, b, a, expected):
    assert count_ceiling_multiple_closed(n, b, a) == expected


def _literal_closed(n, b, a):
    return sum((-1) ** i * binomial(n, i) * ((b - i * a + 1) ** n - (b - i * a) ** n) for i in range(n + 1))


def test_literal_powers_break_on_negative_base():
    assert _literal_closed(2, 1, 1) == 0
    assert count_ceiling_multiple_closed(2, 1, 1) == 1
    assert len(grid_patterns(2, 1, 1)) == 1


def test_theorem1_sweep():
    for n in range(1, 6):
        for b in range(0, 7):
            for a in range(1, 4):
                expected = count_patterns_oracle(EnumerationSpec(n, b, a * n - 1))
                assert count_ceiling_multiple(n, b, a) == expected, (n, b, a)
                assert count_ceiling_multiple_closed(n, b, a) == expected, (n, b, a)


def test_theorem1_larger_agreement():
    # no oracle here: the two exact forms against each other
    for n in range(1, 11):
        for b in range(0, 15):
            for a in range(1, 6):
                assert count_ceiling_multiple(n, b, a) == count_ceiling_multiple_closed(n, b, a)


def test_eulerian_specialization():
    for n in range(1, 8):
        for b in range(n):
            assert count_ceiling_multiple(n, b, 1) == eulerian(n, b)


def test_saturation_and_monotonicity():
    for n in range(1, 6):
        for b in range(0, 6):
            counts = [count_ceiling_multiple(n, b, a) for a in range(1, 8)]
            assert counts == sorted(counts)
            for a in range(1, 8):
                if a * n - 1 >= b * n:
                    assert counts[a - 1] == count_unbounded(n, b)


@pytest.mark.parametrize("n, expected", [(4, 9), (1, 0), (3, 2)])
def test_derangement_count(n, expected):
    assert derangement_count(n) == expected


@pytest.mark.parametrize("n, expected", [(4, 2), (3, 1), (5, 13)])
def test_menage_count(n, expected):
    assert menage_count(n) == expected


def test_menage_rejects_small_n():
    with pytest.raises(ValueError):
        menage_count(2)


def test_menage_exact_division_guard(monkeypatch):
    monkeypatch.setattr(closed_forms, "binomial", lambda m, k: binomial(m, k) + 1)
    with pytest.raises(ArithmeticError):
        menage_count(4)


@pytest.mark.parametrize("n, c, expected", [(4, 3, 24), (4, 2, 9), (4, 0, 1), (4, 1, 2)])
def test_small_ceiling(n, c, expected):
    assert count_all_balls_small_ceiling(n, c) == expected


def test_small_ceiling_rejects_large_c():
    with pytest.raises(ValueError):
        count_all_balls_small_ceiling(4, 4)


def test_small_ceiling_chain():
    for n in range(3, 9):
        assert count_all_balls_small_ceiling(n, n - 1) == factorial(n)
        assert count_all_balls_small_ceiling(n, n - 2) == derangement_count(n) == rook_oracle(1, n)
        assert count_all_balls_small_ceiling(n, n - 3) == menage_count(n) == rook_oracle(2, n)
    for n in range(3, 8):
        assert derangement_count(n) == rook_brute(1, n)
        assert menage_count(n) == rook_brute(2, n)


def test_ball_split_sums_to_total():
    for n in range(1, 7):
        for c in range(n):
            split = sum(count_patterns_oracle(EnumerationSpec(n, b, c)) for b in range(c + 1))
            assert split == count_all_balls_small_ceiling(n, c)


# dispatcher


@pytest.mark.parametrize(
    "query, value, branch",
    [
        (CountQuery(4, 5), 671, Branch.UNBOUNDED),
        (CountQuery(4, 5, 20), 671, Branch.UNBOUNDED),
        (CountQuery(4, 5, 100), 671, Branch.UNBOUNDED),
        (CountQuery(4, ALL, 3), 24, Branch.FACTORIAL),
        (CountQuery(4, ALL, 2), 9, Branch.ROOK_DERANGEMENT),
        (CountQuery(4, ALL, 1), 2, Branch.ROOK_MENAGE),
        (CountQuery(5, ALL, 1), 2, Branch.ROOK_ORACLE),
        (CountQuery(4, 2, 3), 11, Branch.EULERIAN),
        (CountQuery(4, 2, 7), count_ceiling_multiple(4, 2, 2), Branch.THEOREM1_SUM),
        (CountQuery(5, 2, 3), 21, Branch.PATTERN_ORACLE),
        (CountQuery(3, ALL, 5), len(grid_patterns(3, 5)), Branch.PATTERN_ORACLE),
    ],
)
def test_dispatch_auto(query, value, branch):
    result = count(query)
    assert (result.count, result.branch, result.cross_checked) == (value, branch, False)


def test_dispatch_both_cross_checks():
    for query in [
        CountQuery(4, 5, method="both"),
        CountQuery(4, ALL, 3, method="both"),
        CountQuery(6, ALL, 2, method="both"),
        CountQuery(4, 2, 7, method="both"),
        CountQuery(4, 2, 3, method="both"),
    ]:
        result = count(query)
        assert result.cross_checked
        assert result.count == count_patterns_oracle(
            EnumerationSpec(query.period, query.balls, query.ceiling)
        )


def test_dispatch_both_without_closed_form():
    result = count(CountQuery(5, 2, 3, method="both"))
    assert result.branch is Branch.PATTERN_ORACLE and not result.cross_checked


def test_dispatch_closed_and_oracle_methods():
    result = count(CountQuery(4, 2, 7, method="closed-form"))
    assert result.branch is Branch.THEOREM1_CLOSED
    assert result.count == count_ceiling_multiple(4, 2, 2)
    with pytest.raises(NoClosedFormError):
        count(CountQuery(5, 2, 3, method=Method.CLOSED))
    result = count(CountQuery(4, 5, method="oracle"))
    assert (result.count, result.branch) == (671, Branch.PATTERN_ORACLE)


def test_dispatch_mismatch_fails_loudly(monkeypatch):
    monkeypatch.setattr(closed_forms, "count_unbounded", lambda n, b: 670)
    with pytest.raises(CrossCheckError):
        count(CountQuery(4, 5, method="both"))


def test_dispatch_budget():
    with pytest.raises(BudgetExceededError):
        count(CountQuery(9, 3, 5), budget=1000)


def test_query_validation():
    with pytest.raises(ValueError):
        CountQuery(4, ALL)
    with pytest.raises(ValueError):
        CountQuery(0, 1)
    with pytest.raises(ValueError):
        CountQuery(4, 1, method="guess")
