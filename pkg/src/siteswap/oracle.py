"""Brute-force ground truth for every closed-form count.

Patterns are found by depth-first search over positions with pruning on
landing collisions and on the running height sum. Restricted rook
placements are counted the same way over rows. Neither path uses any
counting formula.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _backend
from .errors import BudgetExceededError
from .exact_math import factorial
from .pattern import JugglingPattern, ThrowSequence

__all__ = [
    "ALL",
    "DEFAULT_NODE_BUDGET",
    "EnumerationSpec",
    "count_patterns_oracle",
    "default_budget",
    "enumerate_patterns",
    "rook_oracle",
]

ALL = "all"
DEFAULT_NODE_BUDGET = 10**9
BUDGET_ENV = "SITESWAP_NODE_BUDGET"


def default_budget():
    """The node budget, overridable through SITESWAP_NODE_BUDGET."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class EnumerationSpec:
    """Period, ball spec (an int or ALL) and ceiling of a search.

    With a fixed ball count the ceiling defaults to b*n, the tallest throw
    any such pattern can contain. With ALL a ceiling is required.
    """

    period: int
    balls: object = ALL
    ceiling: int | None = None

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if self.balls != ALL:
            if not isinstance(self.balls, int) or self.balls < 0:
                raise ValueError(f"balls must be a nonnegative int or {ALL!r}, got {self.balls!r}")
            if self.ceiling is None:
                object.__setattr__(self, "ceiling", self.balls * self.period)
        elif self.ceiling is None:
            raise ValueError("enumerating every ball count needs a finite ceiling")
        if self.ceiling < 0:
            raise ValueError(f"ceiling must be >= 0, got {self.ceiling}")

    @property
    def target(self):
        return -1 if self.balls == ALL else self.balls * self.period

    @property
    def empty(self):
        return self.balls != ALL and self.balls > self.ceiling

    @property
    def grid_size(self):
        return (self.ceiling + 1) ** self.period


def _check_budget(spec, budget):
    if budget is None:
        budget = default_budget()
    if spec.grid_size > budget:
        raise BudgetExceededError(
            f"search grid ({spec.ceiling}+1)^{spec.period} exceeds node budget {budget}"
        )


def _first_heights(spec):
    return range(min(spec.ceiling, spec.target if spec.target >= 0 else spec.ceiling) + 1)


def _blocks(spec, workers, backend, fn):
    k = _backend.for_period(spec.period, backend)
    args = [(spec.period, spec.ceiling, spec.target, h0) for h0 in _first_heights(spec)]
    call = getattr(k, fn)
    pool = ThreadPoolExecutor(max_workers=workers)
    # map() yields in submission order, so block order is h_0 ascending.
    results = pool.map(lambda a: call(*a), args)
    pool.shutdown(wait=False)
    return results


def enumerate_patterns(spec, budget=None, workers=1, backend=None):
    """Yield every matching pattern in ascending lexicographic order."""
    _check_budget(spec, budget)
    if spec.empty:
        return
    if workers <= 1:
        k = _backend.for_period(spec.period, backend)
        stream = k.iter_patterns(spec.period, spec.ceiling, spec.target, -1)
        for heights in stream:
            yield JugglingPattern(ThrowSequence(heights), sum(heights) // spec.period)
        return
    for block in _blocks(spec, workers, backend, "list_patterns"):
        for heights in block:
            yield JugglingPattern(ThrowSequence(heights), sum(heights) // spec.period)


def count_patterns_oracle(spec, budget=None, workers=1, backend=None):
    """Number of patterns :func:`enumerate_patterns` would yield."""
    _check_budget(spec, budget)
    if spec.empty:
        return 0
    if workers <= 1:
        k = _backend.for_period(spec.period, backend)
        return int(k.count_patterns(spec.period, spec.ceiling, spec.target, -1))
    return sum(int(c) for c in _blocks(spec, workers, backend, "count_patterns"))


def rook_oracle(s, n, budget=None, backend=None):
    """Permutations of 0..n-1 with p(i) outside {i+1, ..., i+s} mod n, by search."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= s <= n - 1:
        raise ValueError(f"s must lie in [0, {n - 1}], got {s}")
    if budget is None:
        budget = default_budget()
    if factorial(n) > budget:
        raise BudgetExceededError(f"{n}! placements exceed node budget {budget}")
    k = _backend.for_period(n, backend)
    return int(k.count_rook(s, n))
