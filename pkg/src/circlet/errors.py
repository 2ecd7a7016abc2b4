class CircletError(Exception):
    """Base class for every error raised by this package."""


class InvalidEdgeError(CircletError, ValueError):
    pass


class InvalidTourError(CircletError, ValueError):
    pass


class UnsupportedInstanceError(CircletError, ValueError):
    """The operation needs 4 | n (or some other structural property of n)."""


class DomainError(CircletError, ValueError):
    pass


class BudgetExceededError(CircletError):
    """An exhaustive routine was asked to run above its configured cap."""


class ParseError(CircletError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
