"""Custom exceptions for the weyl-forge toolkit."""

from typing import Any


class WeylForgeError(Exception):
    """Base exception for weyl-forge errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InputValidationError(WeylForgeError):
    """Raised when input values or documents are malformed."""

    pass


class DomainError(WeylForgeError):
    """Raised when an operation's mathematical precondition does not hold."""

    pass


class NumericalError(WeylForgeError):
    """Raised when a computation breaks down numerically."""

    pass
