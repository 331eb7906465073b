"""Exception hierarchy shared by the library and the command line."""


class SiteswapError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SiteswapError, ValueError):
    """Notation text that does not match the grammar.

    ``offset`` is the byte offset of the offending token in the input.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class InvalidPatternError(SiteswapError, ValueError):
    """A sequence or (perm, b_vec) pair that cannot form a juggling pattern."""


class RepresentabilityError(SiteswapError, ValueError):
    """A height that the requested notation form cannot express."""


class BudgetExceededError(SiteswapError, RuntimeError):
    """The brute-force search space is larger than the configured node budget."""


class NoClosedFormError(SiteswapError, ValueError):
    """A closed form was requested for a query that has none."""


class CrossCheckError(SiteswapError, AssertionError):
    """Closed form and enumeration oracle disagree."""
