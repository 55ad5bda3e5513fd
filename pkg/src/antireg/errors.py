"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised for malformed arguments (empty sequences, n < 1, bad shapes)."""


class InvariantViolationError(RuntimeError):
    """An exact identity that must hold did not. Always an implementation bug."""


class NumericFailureError(RuntimeError):
    """The iterative eigensolver did not converge within its iteration cap."""

    def __init__(self, message, *, n=None, index=None, iterations=None):
        super().__init__(message)
        self.n = n
        self.index = index
        self.iterations = iterations
