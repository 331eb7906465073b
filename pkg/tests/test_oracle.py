import pytest

from brute import grid_patterns, rook_brute
from siteswap.errors import BudgetExceededError
from siteswap.oracle import (
    ALL,
    DEFAULT_NODE_BUDGET,
    EnumerationSpec,
    count_patterns_oracle,
    default_budget,
    enumerate_patterns,
    rook_oracle,
)
from siteswap.pattern import validate


def heights_of(spec, **kw):
    return [p.heights for p in enumerate_patterns(spec, **kw)]


def test_enumerate_examples(backend):
    assert heights_of(EnumerationSpec(2, 1, 2), backend=backend) == [(0, 2), (1, 1), (2, 0)]
    assert heights_of(EnumerationSpec(3, ALL, 1), backend=backend) == [(0, 0, 0), (1, 1, 1)]
    assert heights_of(EnumerationSpec(1, 5, 5), backend=backend) == [(5,)]


def test_enumerated_patterns_carry_ball_count(backend):
    for p in enumerate_patterns(EnumerationSpec(3, ALL, 4), backend=backend):
        assert p.balls == validate(p).balls


@pytest.mark.parametrize(
    "n, b, c, expected",
    [(4, 5, 20, 671), (4, 2, 3, 11), (4, ALL, 3, 24), (4, 5, None, 671), (3, 4, 2, 0)],
)
def test_count_examples(backend, n, b, c, expected):
    assert count_patterns_oracle(EnumerationSpec(n, b, c), backend=backend) == expected


def test_spec_defaults_and_errors():
    assert EnumerationSpec(4, 5).ceiling == 20
    assert EnumerationSpec(3, 0).ceiling == 0
    with pytest.raises(ValueError):
        EnumerationSpec(3, ALL)
    with pytest.raises(ValueError):
        EnumerationSpec(0, 1, 2)
    with pytest.raises(ValueError):
        EnumerationSpec(3, -1, 2)
    with pytest.raises(ValueError):
        EnumerationSpec(3, 1, -2)
    assert EnumerationSpec(3, 4, 2).empty


def test_matches_grid_filter(backend):
    for n in range(1, 5):
        for c in range(0, 6):
            spec = EnumerationSpec(n, ALL, c)
            assert heights_of(spec, backend=backend) == grid_patterns(n, c)
            for b in range(0, c + 2):
                spec = EnumerationSpec(n, b, c)
                expected = grid_patterns(n, c, b)
                assert heights_of(spec, backend=backend) == expected
                assert count_patterns_oracle(spec, backend=backend) == len(expected)


def test_matches_unbounded_formula(backend):
    for n in range(1, 6):
        for b in range(0, 6):
            spec = EnumerationSpec(n, b, b * n)
            assert count_patterns_oracle(spec, backend=backend) == (b + 1) ** n - b**n


def test_rook_examples(backend):
    for n in range(1, 7):
        assert rook_oracle(0, n, backend=backend) == [1, 2, 6, 24, 120, 720][n - 1]
    assert rook_oracle(1, 4, backend=backend) == 9
    assert rook_oracle(3, 4, backend=backend) == 1


def test_rook_matches_permutation_filter(backend):
    for n in range(1, 8):
        for s in range(n):
            assert rook_oracle(s, n, backend=backend) == rook_brute(s, n)


def test_rook_rejects_bad_s():
    with pytest.raises(ValueError):
        rook_oracle(4, 4)
    with pytest.raises(ValueError):
        rook_oracle(-1, 4)


def test_all_balls_equals_rook(backend):
    for n in range(1, 8):
        for c in range(n):
            spec = EnumerationSpec(n, ALL, c)
            assert count_patterns_oracle(spec, backend=backend) == rook_oracle(n - c - 1, n, backend=backend)


def test_budget_guard(monkeypatch):
    spec = EnumerationSpec(4, 5, 20)
    with pytest.raises(BudgetExceededError):
        count_patterns_oracle(spec, budget=1000)
    with pytest.raises(BudgetExceededError):
        list(enumerate_patterns(spec, budget=1000))
    with pytest.raises(BudgetExceededError):
        rook_oracle(1, 8, budget=1000)
    monkeypatch.setenv("SITESWAP_NODE_BUDGET", "1000")
    assert default_budget() == 1000
    with pytest.raises(BudgetExceededError):
        count_patterns_oracle(spec)
    assert count_patterns_oracle(spec, budget=10**6) == 671
    monkeypatch.setenv("SITESWAP_NODE_BUDGET", "lots")
    with pytest.raises(ValueError):
        default_budget()
    monkeypatch.delenv("SITESWAP_NODE_BUDGET")
    assert default_budget() == DEFAULT_NODE_BUDGET


@pytest.mark.parametrize("workers", [2, 3, 8])
def test_parallel_is_deterministic(backend, workers):
    for spec in [EnumerationSpec(4, 3, 9), EnumerationSpec(5, ALL, 4), EnumerationSpec(5, 2)]:
        serial = heights_of(spec, backend=backend)
        assert heights_of(spec, workers=workers, backend=backend) == serial
        assert count_patterns_oracle(spec, workers=workers, backend=backend) == len(serial)


def test_wide_period_uses_fallback():
    # 70 beats exceeds the compiled mask; only the all-zero pattern fits under c = 0
    spec = EnumerationSpec(70, ALL, 0)
    assert heights_of(spec) == [(0,) * 70]
    assert count_patterns_oracle(EnumerationSpec(70, 0, 0)) == 1
