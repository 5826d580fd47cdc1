"""Exception types shared across the package."""


class ParameterError(ValueError):
    """(n, k) outside the admissible domain 1 <= k, 2k < n."""


class CoverDomainError(ValueError):
    """A cover was passed to an operation whose precondition it violates."""


class ResourceLimitError(RuntimeError):
    """An enumeration guard or solver budget was exceeded.

    ``lower`` and ``upper`` carry the best bounds known when the limit hit,
    if any were established.
    """

    def __init__(self, message, lower=None, upper=None, witness=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = witness


class InvariantViolation(RuntimeError):
    """Internal consistency check failed; always indicates a bug."""
