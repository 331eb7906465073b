"""Pattern representation, validity checks and the P - Q + nB decomposition.

A throw sequence of period n is valid when the landing beats (i + h_i) mod n
are pairwise distinct and the heights sum to a multiple of n; the quotient
is the ball count. Indexing is 0-based and rotations are distinct patterns.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidPatternError

__all__ = [
    "Decomposition",
    "JugglingPattern",
    "ThrowSequence",
    "ValidationReport",
    "ball_count",
    "construct",
    "decompose",
    "descent_count",
    "validate",
]


@dataclass(frozen=True)
class ThrowSequence:
    """An ordered tuple of nonnegative throw heights, not necessarily valid."""

    heights: tuple

    def __post_init__(self):
        heights = tuple(int(h) for h in self.heights)
        if not heights:
            raise ValueError("a throw sequence needs at least one throw")
        if any(h < 0 for h in heights):
            raise ValueError(f"negative throw height in {heights}")
        object.__setattr__(self, "heights", heights)

    @property
    def period(self):
        return len(self.heights)

    def __len__(self):
        return len(self.heights)

    def __iter__(self):
        return iter(self.heights)

    def __getitem__(self, i):
        return self.heights[i]


@dataclass(frozen=True)
class JugglingPattern:
    """A throw sequence known to satisfy both validity conditions."""

    sequence: ThrowSequence
    balls: int

    @classmethod
    def from_heights(cls, heights):
        """Validate ``heights`` and wrap them; raises InvalidPatternError."""
        report = validate(heights)
        if not report.valid:
            raise InvalidPatternError(report.describe())
        return cls(report.sequence, report.balls)

    @property
    def heights(self):
        return self.sequence.heights

    @property
    def period(self):
        return self.sequence.period


@dataclass(frozen=True)
class ValidationReport:
    sequence: ThrowSequence
    valid: bool
    balls: int | None
    # Every pair (i, j), i < j, whose throws land on the same beat mod n.
    collisions: tuple = ()
    # sum(h) mod n when it is nonzero, else None.
    remainder: int | None = None

    def describe(self):
        if self.valid:
            return f"valid, {self.balls} balls"
        parts = []
        for i, j in self.collisions:
            parts.append(f"landing collision {(i, j)}")
        if self.remainder is not None:
            parts.append(
                f"sum {sum(self.sequence.heights)} not divisible by period "
                f"{self.sequence.period} (remainder {self.remainder})"
            )
        return "; ".join(parts)


@dataclass(frozen=True)
class Decomposition:
    """perm - (0, 1, ..., n-1) + n * b_vec, with the descent count of perm."""

    perm: tuple
    b_vec: tuple
    descents: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "b_vec", tuple(self.b_vec))
        if self.descents < 0:
            object.__setattr__(self, "descents", descent_count(self.perm))

    @property
    def balls(self):
        return sum(self.b_vec)


def _as_sequence(seq):
    if isinstance(seq, ThrowSequence):
        return seq
    if isinstance(seq, JugglingPattern):
        return seq.sequence
    return ThrowSequence(tuple(seq))


def validate(seq):
    """Check both validity conditions and report every violation found."""
    seq = _as_sequence(seq)
    n = seq.period
    landed = {}
    collisions = []
    for i, h in enumerate(seq.heights):
        landed.setdefault((i + h) % n, []).append(i)
    for slot_users in landed.values():
        collisions.extend(combinations(slot_users, 2))
    collisions.sort()
    total = sum(seq.heights)
    remainder = total % n or None
    valid = not collisions and remainder is None
    return ValidationReport(
        sequence=seq,
        valid=valid,
        balls=total // n if valid else None,
        collisions=tuple(collisions),
        remainder=remainder,
    )


def ball_count(pattern):
    """Average throw height of a valid pattern."""
    if not isinstance(pattern, JugglingPattern):
        pattern = JugglingPattern.from_heights(pattern)
    return sum(pattern.heights) // pattern.period


def _check_permutation(perm):
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise InvalidPatternError(f"{tuple(perm)} is not a permutation of 0..{n - 1}")


def descent_count(perm):
    """Number of positions i with perm[i] < i."""
    perm = tuple(perm)
    _check_permutation(perm)
    return sum(1 for i, p in enumerate(perm) if p < i)


def construct(perm, b_vec):
    """Build the pattern with h_i = perm[i] - i + n * b_vec[i]."""
    perm = tuple(int(p) for p in perm)
    b_vec = tuple(int(b) for b in b_vec)
    n = len(perm)
    if n == 0:
        raise InvalidPatternError("empty permutation")
    if len(b_vec) != n:
        raise InvalidPatternError(f"perm has length {n} but b_vec has length {len(b_vec)}")
    _check_permutation(perm)
    for i, b in enumerate(b_vec):
        if b < 0:
            raise InvalidPatternError(f"b_{i} must be nonnegative, got {b}")
        if perm[i] < i and b < 1:
            raise InvalidPatternError(f"b_{i} must be ≥ 1 at descent position {i}")
    heights = tuple(p - i + n * b for i, (p, b) in enumerate(zip(perm, b_vec)))
    return JugglingPattern(ThrowSequence(heights), sum(b_vec))


def decompose(pattern):
    """Invert :func:`construct`: perm[i] is the landing beat of throw i."""
    if not isinstance(pattern, JugglingPattern):
        pattern = JugglingPattern.from_heights(pattern)
    else:
        report = validate(pattern.sequence)
        if not report.valid:
            raise InvalidPatternError(report.describe())
    n = pattern.period
    perm = tuple((i + h) % n for i, h in enumerate(pattern.heights))
    b_vec = tuple((h + i - p) // n for i, (h, p) in enumerate(zip(pattern.heights, perm)))
    return Decomposition(perm, b_vec)
