"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class MarketDataError(ValueError):
    """Malformed market input (generator spec, CSV file, or price vector)."""


class ConfigError(ValueError):
    """Invalid algorithm or experiment configuration."""


class SolverError(RuntimeError):
    """The dual Newton solve failed to converge.

    Should never fire when the step problem satisfies its preconditions;
    treat as a bug signal, not a recoverable condition.
    """

    def __init__(self, message, last_iterate=None, decrement=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.decrement = decrement


class ConvergenceError(RuntimeError):
    """The comparator solver ran out of iterations before certifying optimality."""

    def __init__(self, message, gap=None):
        super().__init__(message)
        self.gap = gap
