"""
Custom exceptions for the library.

Every exception carries the process exit status the command line reports
for it, the way HTTP services attach a status code.
"""
from typing import Any, Optional

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NO_SOLUTION = 3
EXIT_USAGE = 64


class GenLambertException(Exception):
    """Base exception for all library errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_DOMAIN,
        details: Optional[dict[str, Any]] = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class DomainError(GenLambertException):
    """Raised when an argument lies outside the domain of the function."""

    def __init__(self, message: str = "Argument outside the domain", details: Optional[dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_DOMAIN, details=details)


class DegenerateInputError(GenLambertException):
    """Raised when parameters collapse the equation (shared upper/lower value, t = s, r = -1)."""

    def __init__(self, message: str = "Degenerate input", details: Optional[dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_DOMAIN, details=details)


class ConvergenceDomainError(GenLambertException):
    """Raised when a series is evaluated at or beyond its radius of convergence."""

    def __init__(
        self,
        message: str = "Argument outside the disc of convergence",
        radius: Optional[float] = None,
        details: Optional[dict[str, Any]] = None
    ):
        details = details or {}
        if radius is not None:
            details["radius"] = radius
        super().__init__(message=message, exit_code=EXIT_DOMAIN, details=details)


class DivergingSeriesError(GenLambertException):
    """Raised when series terms keep growing before the truncation order is reached."""

    def __init__(self, message: str = "Series terms are growing", details: Optional[dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_DOMAIN, details=details)


class InvalidBranchError(GenLambertException):
    """Raised when a branch index does not exist."""

    def __init__(self, message: str = "Invalid branch", details: Optional[dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_DOMAIN, details=details)


class NoSolutionError(GenLambertException):
    """Raised when a single value was requested but no real solution exists."""

    def __init__(self, message: str = "No real solution", details: Optional[dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_NO_SOLUTION, details=details)
