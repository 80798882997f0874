"""Exception hierarchy shared across the package."""


class PendencyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PendencyError):
    """A value violates a domain invariant (bad strength, bad rate, ...)."""


class ParseError(PendencyError):
    """An input file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ConfigError(PendencyError):
    """A configuration entry references something that does not exist."""


class InsufficientData(PendencyError):
    """Too few observations to fit a trend."""


class DegenerateFit(PendencyError):
    """Regression input has no usable spread on the x axis."""


class Infeasible(PendencyError):
    """No staffing level can satisfy the request."""


class HorizonExceeded(PendencyError):
    """Projection ran past its safety horizon without resolving."""
