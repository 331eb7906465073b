"""Exact integer combinatorics: binomials, Eulerian numbers, compositions.

Python ints are unbounded, so every value here is exact. Nothing in this
module touches floating point.
"""

import math
import threading

__all__ = [
    "EulerianTable",
    "binomial",
    "bounded_compositions",
    "compositions",
    "eulerian",
    "eulerian_explicit",
    "eulerian_row",
    "factorial",
    "positive_power",
    "worpitzky_rhs",
]


def binomial(m, k):
    """C(m, k) with the combinatorial convention.

    Zero whenever m < 0 or m < k. The polynomial extension (where e.g.
    C(-1, 3) = -1) is never used.
    """
    if k < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {k}")
    if m < 0 or m < k:
        return 0
    return math.comb(m, k)


def factorial(n):
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def positive_power(x, n):
    """x**n for x >= 0, and 0 for x < 0."""
    return x**n if x >= 0 else 0


# rows[n - 1] == [E(n, 0), ..., E(n, n - 1)]; only ever appended to.
_rows = [[1]]
_rows_lock = threading.Lock()


def _next_row(prev):
    n = len(prev) + 1
    row = []
    for k in range(n):
        left = prev[k] if k < n - 1 else 0
        right = prev[k - 1] if k >= 1 else 0
        row.append((k + 1) * left + (n - k) * right)
    return row


def _cached_row(n):
    if n > len(_rows):
        with _rows_lock:
            while len(_rows) < n:
                _rows.append(_next_row(_rows[-1]))
    return _rows[n - 1]


def eulerian_row(n, cache=True):
    """[E(n, 0), ..., E(n, n-1)] built with the three-term recursion.

    With ``cache=False`` the row is rebuilt from E(1, 0) = 1 without
    touching the shared table.
    """
    if n < 1:
        raise ValueError(f"Eulerian rows start at n = 1, got {n}")
    if cache:
        return list(_cached_row(n))
    row = [1]
    for _ in range(n - 1):
        row = _next_row(row)
    return row


def eulerian(n, k, cache=True):
    """E(n, k), the number of permutations of {0..n-1} with k entries p_i < i.

    Zero outside 0 <= k <= n - 1.
    """
    if n < 1:
        raise ValueError(f"Eulerian numbers need n >= 1, got {n}")
    if k < 0 or k >= n:
        return 0
    if cache:
        return _cached_row(n)[k]
    return eulerian_row(n, cache=False)[k]


def eulerian_explicit(n, k):
    """E(n, k) from the alternating binomial sum.

    Powers of negative bases are taken as zero; with literal signed powers
    the sum is an n-th finite difference of a degree n-1 polynomial and
    collapses to 0 for every k.
    """
    if n < 1:
        raise ValueError(f"Eulerian numbers need n >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in [0, {n - 1}], got {k}")
    total = 0
    for i in range(n + 1):
        term = binomial(n, i) * (positive_power(k - i + 1, n) - positive_power(k - i, n))
        total += -term if i % 2 else term
    return total


def compositions(n, b):
    """Number of n-tuples of nonnegative integers summing to b."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if b < 0:
        return 0
    return binomial(n + b - 1, n - 1)


def bounded_compositions(n, b, a):
    """Number of n-tuples of nonnegative integers summing to b, each <= a.

    Inclusion-exclusion over the set of entries forced above the cap.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if b < 0 or a < 0:
        return 0
    total = 0
    for i in range(n + 1):
        term = binomial(n, i) * binomial(n + b - 1 - i * (a + 1), n - 1)
        total += -term if i % 2 else term
    return total


def worpitzky_rhs(x, n):
    """sum_k E(n, k) * C(x + k, n); equals x**n for x >= 0."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return sum(e * binomial(x + k, n) for k, e in enumerate(eulerian_row(n)))


class EulerianTable:
    """Rows 1..max_n of the Eulerian triangle.

    ``table[n]`` gives row n (1-based, matching the usual printing).
    """

    def __init__(self, max_n):
        if max_n < 1:
            raise ValueError(f"max_n must be >= 1, got {max_n}")
        self.rows = [eulerian_row(n) for n in range(1, max_n + 1)]

    @property
    def max_n(self):
        return len(self.rows)

    def __getitem__(self, n):
        if not 1 <= n <= self.max_n:
            raise IndexError(n)
        return self.rows[n - 1]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def check_identities(self):
        """Return the row numbers that break the row-sum or symmetry identity."""
        bad = []
        for n, row in enumerate(self.rows, start=1):
            if len(row) != n or sum(row) != factorial(n) or row != row[::-1]:
                bad.append(n)
            elif any(v < 1 for v in row):
                bad.append(n)
        return bad
