"""Exception hierarchy shared across the library and the CLI."""


class RamseyLabError(Exception):
    """Base class for all library-specific errors."""


class BudgetExhaustedError(RamseyLabError):
    """A bounded search ran out of its node/trial budget; the answer is unknown."""

    def __init__(self, message: str, nodes_explored: int = 0):
        super().__init__(message)
        self.nodes_explored = nodes_explored


class CapExceededError(RamseyLabError):
    """No value within the requested cap satisfied the query."""


class InvariantViolationError(RamseyLabError):
    """An internal postcondition failed; indicates a bug or a bad instance."""


class SearchExhaustedError(RamseyLabError):
    """A randomized search gave up; carries the best partial result found."""

    def __init__(self, message: str, best=None, best_girth=None, best_min_degree=None):
        super().__init__(message)
        self.best = best
        self.best_girth = best_girth
        self.best_min_degree = best_min_degree
