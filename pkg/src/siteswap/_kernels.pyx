# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; API mirrors ``_kernels_py``.

Landing beats live in a 64-bit mask, so periods are limited to MAX_PERIOD.
Counting runs without the GIL.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

NAME = "cython"
MAX_PERIOD = 64


cdef struct Search:
    int n
    int c
    int64_t target
    int* heights


cdef inline void _bounds(Search* s, int i, int64_t total, int64_t* lo, int64_t* hi) noexcept nogil:
    cdef int64_t rest
    if s.target < 0:
        lo[0] = 0
        hi[0] = s.c
        return
    rest = s.n - i - 1
    lo[0] = s.target - total - rest * s.c
    if lo[0] < 0:
        lo[0] = 0
    hi[0] = s.target - total
    if hi[0] > s.c:
        hi[0] = s.c


cdef uint64_t _count(Search* s, int i, uint64_t used, int64_t total) noexcept nogil:
    cdef int64_t lo, hi, h
    cdef int slot
    cdef uint64_t count = 0
    cdef uint64_t bit
    _bounds(s, i, total, &lo, &hi)
    h = lo
    while h <= hi:
        slot = <int>((i + h) % s.n)
        bit = (<uint64_t>1) << slot
        if not (used & bit):
            if i == s.n - 1:
                if (total + h) % s.n == 0:
                    count += 1
            else:
                count += _count(s, i + 1, used | bit, total + h)
        h += 1
    return count


cdef int _collect(Search* s, int i, uint64_t used, int64_t total, list out) except -1:
    cdef int64_t lo, hi, h
    cdef int slot, j
    cdef uint64_t bit
    _bounds(s, i, total, &lo, &hi)
    h = lo
    while h <= hi:
        slot = <int>((i + h) % s.n)
        bit = (<uint64_t>1) << slot
        if not (used & bit):
            s.heights[i] = <int>h
            if i == s.n - 1:
                if (total + h) % s.n == 0:
                    out.append(tuple([s.heights[j] for j in range(s.n)]))
            else:
                _collect(s, i + 1, used | bit, total + h, out)
        h += 1
    return 0


cdef int _check(int n, int c) except -1:
    if n < 1 or n > MAX_PERIOD:
        raise ValueError(f"compiled kernel supports 1 <= n <= {MAX_PERIOD}, got {n}")
    if c < 0:
        raise ValueError(f"ceiling must be >= 0, got {c}")
    return 0


def count_patterns(int n, int c, long long target=-1, int first=-1):
    _check(n, c)
    cdef Search s
    cdef int64_t lo, hi
    cdef uint64_t count = 0
    cdef uint64_t bit
    s.n = n
    s.c = c
    s.target = target
    s.heights = NULL
    if first < 0:
        with nogil:
            count = _count(&s, 0, 0, 0)
        return count
    _bounds(&s, 0, 0, &lo, &hi)
    if first < lo or first > hi:
        return 0
    bit = (<uint64_t>1) << (first % n)
    if n == 1:
        return 1 if first % n == 0 else 0
    with nogil:
        count = _count(&s, 1, bit, first)
    return count


def list_patterns(int n, int c, long long target=-1, int first=-1):
    _check(n, c)
    cdef Search s
    cdef int64_t lo, hi
    cdef list out = []
    s.n = n
    s.c = c
    s.target = target
    s.heights = <int*>malloc(n * sizeof(int))
    if s.heights == NULL:
        raise MemoryError()
    try:
        if first < 0:
            _collect(&s, 0, 0, 0, out)
        else:
            _bounds(&s, 0, 0, &lo, &hi)
            if lo <= first <= hi:
                s.heights[0] = first
                if n == 1:
                    out.append((first,))
                else:
                    _collect(&s, 1, (<uint64_t>1) << (first % n), first, out)
    finally:
        free(s.heights)
    return out


def iter_patterns(int n, int c, long long target=-1, int first=-1):
    yield from list_patterns(n, c, target, first)


cdef uint64_t _place(int row, int n, uint64_t used, uint64_t full, uint64_t* forbidden) noexcept nogil:
    cdef uint64_t free_cols, bit
    cdef uint64_t count = 0
    if row == n:
        return 1
    free_cols = full & ~used & ~forbidden[row]
    while free_cols:
        bit = free_cols & (~free_cols + 1)
        free_cols ^= bit
        count += _place(row + 1, n, used | bit, full, forbidden)
    return count


def count_rook(int s, int n):
    if n < 1 or n > MAX_PERIOD:
        raise ValueError(f"compiled kernel supports 1 <= n <= {MAX_PERIOD}, got {n}")
    cdef uint64_t* forbidden = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t full, count
    cdef int i, t
    if forbidden == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            forbidden[i] = 0
            for t in range(1, s + 1):
                forbidden[i] |= (<uint64_t>1) << ((i + t) % n)
        full = ~(<uint64_t>0) if n == 64 else (((<uint64_t>1) << n) - 1)
        with nogil:
            count = _place(0, n, 0, full, forbidden)
    finally:
        free(forbidden)
    return count
