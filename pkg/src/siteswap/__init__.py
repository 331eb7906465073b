"""Exact counting, enumeration and validation of siteswap juggling patterns."""

from ._backend import BACKEND
from .closed_forms import (
    CountQuery,
    CountResult,
    count,
    count_all_balls_small_ceiling,
    count_ceiling_multiple,
    count_ceiling_multiple_closed,
    count_unbounded,
    derangement_count,
    menage_count,
)
from .errors import (
    BudgetExceededError,
    CrossCheckError,
    InvalidPatternError,
    ParseError,
    RepresentabilityError,
    SiteswapError,
)
from .exact_math import (
    EulerianTable,
    binomial,
    bounded_compositions,
    compositions,
    eulerian,
    eulerian_explicit,
    eulerian_row,
    factorial,
    worpitzky_rhs,
)
from .notation import NotationForm, parse, render
from .oracle import ALL, EnumerationSpec, count_patterns_oracle, enumerate_patterns, rook_oracle
from .pattern import (
    Decomposition,
    JugglingPattern,
    ThrowSequence,
    ball_count,
    construct,
    decompose,
    descent_count,
    validate,
)

__version__ = "0.1.0"
