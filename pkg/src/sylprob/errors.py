class SylprobError(Exception):
    """Base class for errors raised by this package."""


class DegreeMismatch(SylprobError, ValueError):
    pass


class ParseError(SylprobError, ValueError):
    pass


class BudgetExceeded(SylprobError, RuntimeError):
    """A computation would exceed the configured enumeration or degree budget."""


class NotASubgroup(SylprobError, ValueError):
    pass


class NotNormal(SylprobError, ValueError):
    pass


class NotSoluble(SylprobError, ValueError):
    pass


class SearchFailed(SylprobError, RuntimeError):
    """A randomized search gave up; never silently replaced by a partial answer."""
