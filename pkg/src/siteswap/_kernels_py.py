"""Pure-Python search kernels.

Same API as the compiled ``_kernels`` module. Depth-first search over
positions 0..n-1 choosing heights in ascending order, so output is in
lexicographic order. Landing beats are tracked in an int bitmask; with a
fixed target sum each height is clamped so the remaining positions can
still reach it.

``target < 0`` means any ball count. ``first >= 0`` pins h_0.
"""

NAME = "python"


def _search(n, c, target, first):
    heights = [0] * n
    cand = [0] * n
    limit = [0] * n
    used = 0
    total = 0

    def bounds(i):
        if target < 0:
            return 0, c
        rest = n - i - 1
        return max(0, target - total - rest * c), min(c, target - total)

    cand[0], limit[0] = bounds(0)
    if first >= 0:
        if not cand[0] <= first <= limit[0]:
            return
        cand[0] = limit[0] = first

    i = 0
    while i >= 0:
        if cand[i] > limit[i]:
            i -= 1
            if i >= 0:
                h = heights[i]
                used &= ~(1 << ((i + h) % n))
                total -= h
                cand[i] += 1
            continue
        h = cand[i]
        slot = (i + h) % n
        if used >> slot & 1:
            cand[i] += 1
            continue
        if i == n - 1:
            if (total + h) % n == 0:
                heights[i] = h
                yield heights
            cand[i] += 1
            continue
        heights[i] = h
        used |= 1 << slot
        total += h
        i += 1
        cand[i], limit[i] = bounds(i)


def count_patterns(n, c, target=-1, first=-1):
    count = 0
    for _ in _search(n, c, target, first):
        count += 1
    return count


def list_patterns(n, c, target=-1, first=-1):
    return [tuple(h) for h in _search(n, c, target, first)]


def iter_patterns(n, c, target=-1, first=-1):
    for h in _search(n, c, target, first):
        yield tuple(h)


def count_rook(s, n):
    """Permutations p of 0..n-1 with p(i) not in {i+1, ..., i+s} mod n."""
    forbidden = []
    for i in range(n):
        mask = 0
        for t in range(1, s + 1):
            mask |= 1 << ((i + t) % n)
        forbidden.append(mask)
    full = (1 << n) - 1

    def place(row, used):
        if row == n:
            return 1
        free = full & ~used & ~forbidden[row]
        count = 0
        while free:
            bit = free & -free
            free ^= bit
            count += place(row + 1, used | bit)
        return count

    return place(0, 0)
