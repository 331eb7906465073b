"""Closed-form pattern counts and the query dispatcher.

J(n, b) counts period-n patterns with b balls, J(n, b, c) adds a ceiling c
on every throw, and J(n, *, c) sums J(n, b, c) over all b. Closed forms
exist for no ceiling, for ceilings of the form a*n - 1, and for every-ball
counts with c <= n - 1 (via restricted rook placements). Everything else
goes to the enumeration oracle.
"""

import enum
from dataclasses import dataclass, field

from .errors import CrossCheckError, NoClosedFormError
from .exact_math import (
    binomial,
    bounded_compositions,
    eulerian,
    factorial,
    positive_power,
)
from .oracle import ALL, EnumerationSpec, count_patterns_oracle, rook_oracle

__all__ = [
    "Branch",
    "CountQuery",
    "CountResult",
    "Method",
    "count",
    "count_all_balls_small_ceiling",
    "count_ceiling_multiple",
    "count_ceiling_multiple_closed",
    "count_unbounded",
    "derangement_count",
    "menage_count",
]


class Method(str, enum.Enum):
    AUTO = "auto"
    CLOSED = "closed-form"
    ORACLE = "oracle"
    BOTH = "both"


class Branch(str, enum.Enum):
    UNBOUNDED = "unbounded"
    THEOREM1_SUM = "theorem1-sum"
    THEOREM1_CLOSED = "theorem1-closed"
    EULERIAN = "eulerian"
    FACTORIAL = "factorial"
    ROOK_DERANGEMENT = "rook-derangement"
    ROOK_MENAGE = "rook-menage"
    ROOK_ORACLE = "rook-oracle"
    PATTERN_ORACLE = "pattern-oracle"


def count_unbounded(n, b):
    """(b+1)^n - b^n."""
    if n < 1 or b < 0:
        raise ValueError(f"need n >= 1 and b >= 0, got n={n}, b={b}")
    return (b + 1) ** n - b**n


def count_ceiling_multiple(n, b, a):
    """J(n, b, a*n - 1) as sum_k E(n, k) * B(n, b - k, a - 1).

    A permutation with k descents forces b_i >= 1 at those k positions,
    leaving a capped composition of b - k.
    """
    _check_multiple_args(n, b, a)
    return sum(eulerian(n, k) * bounded_compositions(n, b - k, a - 1) for k in range(n))


def count_ceiling_multiple_closed(n, b, a):
    """J(n, b, a*n - 1) by the alternating power sum.

    Negative bases contribute zero. Literal signed powers give wrong answers
    once b - i*a < 0 (J(2, 1, 1) would come out 0 instead of 1).
    """
    _check_multiple_args(n, b, a)
    total = 0
    for i in range(n + 1):
        x = b - i * a
        term = binomial(n, i) * (positive_power(x + 1, n) - positive_power(x, n))
        total += -term if i % 2 else term
    return total


def _check_multiple_args(n, b, a):
    if n < 1 or b < 0 or a < 1:
        raise ValueError(f"need n >= 1, b >= 0, a >= 1, got n={n}, b={b}, a={a}")


def derangement_count(n):
    """sum_k (-1)^k C(n, k) (n - k)!"""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = 0
    for k in range(n + 1):
        term = binomial(n, k) * factorial(n - k)
        total += -term if k % 2 else term
    return total


def menage_count(n):
    """sum_k (-1)^k 2n/(2n-k) C(2n-k, k) (n-k)!, the married couples number."""
    if n < 3:
        raise ValueError(f"married couples numbers need n >= 3, got {n}")
    total = 0
    for k in range(n + 1):
        numer = 2 * n * binomial(2 * n - k, k)
        coeff, rem = divmod(numer, 2 * n - k)
        if rem:
            raise ArithmeticError(f"inexact division in term k={k} for n={n}")
        term = coeff * factorial(n - k)
        total += -term if k % 2 else term
    return total


def _small_ceiling_branch(n, c, budget=None):
    if not 0 <= c <= n - 1:
        raise ValueError(f"small ceilings need 0 <= c <= n-1, got c={c} for n={n}")
    if c == n - 1:
        return Branch.FACTORIAL, factorial(n)
    if c == n - 2:
        return Branch.ROOK_DERANGEMENT, derangement_count(n)
    if c == n - 3:
        return Branch.ROOK_MENAGE, menage_count(n)
    return Branch.ROOK_ORACLE, rook_oracle(n - c - 1, n, budget=budget)


def count_all_balls_small_ceiling(n, c, budget=None):
    """J(n, *, c) for c <= n - 1, equal to rook(n - c - 1, n)."""
    return _small_ceiling_branch(n, c, budget)[1]


@dataclass(frozen=True)
class CountQuery:
    period: int
    balls: object = ALL
    ceiling: int | None = None
    method: Method = Method.AUTO

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if self.balls == ALL:
            if self.ceiling is None:
                raise ValueError("counting every ball count needs a finite ceiling")
        elif not isinstance(self.balls, int) or self.balls < 0:
            raise ValueError(f"balls must be a nonnegative int or {ALL!r}, got {self.balls!r}")
        if self.ceiling is not None and self.ceiling < 0:
            raise ValueError(f"ceiling must be >= 0, got {self.ceiling}")

    def as_dict(self):
        return {
            "period": self.period,
            "balls": self.balls,
            "ceiling": self.ceiling,
            "method": self.method.value,
        }


@dataclass(frozen=True)
class CountResult:
    count: int
    branch: Branch
    cross_checked: bool = False
    query: CountQuery | None = field(default=None, compare=False)


def closed_form(query, budget=None):
    """(branch, value) of the applicable closed form, or None.

    Precedence: unbounded, then fixed-ball Eulerian at c = n-1, then the
    a*n - 1 family, then the every-ball small-ceiling family.
    """
    n, b, c = query.period, query.balls, query.ceiling
    if b != ALL:
        if c is None or c >= b * n:
            return Branch.UNBOUNDED, count_unbounded(n, b)
        if c == n - 1:
            return Branch.EULERIAN, eulerian(n, b)
        if (c + 1) % n == 0:
            return Branch.THEOREM1_SUM, count_ceiling_multiple(n, b, (c + 1) // n)
        return None
    if c <= n - 1:
        return _small_ceiling_branch(n, c, budget)
    return None


def _oracle(query, budget, workers):
    spec = EnumerationSpec(query.period, query.balls, query.ceiling)
    return count_patterns_oracle(spec, budget=budget, workers=workers)


def count(query, budget=None, workers=1):
    """Answer a CountQuery, reporting which branch produced the number.

    ``auto`` takes the closed form when one applies and the oracle
    otherwise; for ceilings a*n - 1 it uses the Eulerian-composition sum.
    ``closed-form`` refuses queries without one and evaluates the power-sum
    form for the a*n - 1 family. ``both`` runs the closed form and the
    oracle and raises CrossCheckError on any disagreement.
    """
    method = query.method
    if method is Method.ORACLE:
        return CountResult(_oracle(query, budget, workers), Branch.PATTERN_ORACLE, False, query)

    found = closed_form(query, budget)
    if found is None:
        if method is Method.CLOSED:
            raise NoClosedFormError(
                f"no closed form for period {query.period}, balls {query.balls}, "
                f"ceiling {query.ceiling}"
            )
        return CountResult(_oracle(query, budget, workers), Branch.PATTERN_ORACLE, False, query)

    branch, value = found
    if method is Method.CLOSED and branch is Branch.THEOREM1_SUM:
        a = (query.ceiling + 1) // query.period
        value = count_ceiling_multiple_closed(query.period, query.balls, a)
        return CountResult(value, Branch.THEOREM1_CLOSED, False, query)
    if method is not Method.BOTH:
        return CountResult(value, branch, False, query)

    if branch is Branch.THEOREM1_SUM:
        a = (query.ceiling + 1) // query.period
        closed = count_ceiling_multiple_closed(query.period, query.balls, a)
        if closed != value:
            raise CrossCheckError(
                f"theorem1 forms disagree for {query.as_dict()}: sum {value}, closed {closed}"
            )
    checked = _oracle(query, budget, workers)
    if checked != value:
        raise CrossCheckError(
            f"{branch.value} gave {value} but the oracle found {checked} for {query.as_dict()}"
        )
    return CountResult(value, branch, True, query)
