"""Exceptions raised by the analysis library."""

from typing import Optional


class LeavittError(Exception):
    """Base class for every error raised by this package."""


class InputError(LeavittError):
    """Malformed user input: a graph file, a polynomial or a setting."""


class GraphFormatError(InputError):
    """A graph document or graph value failed validation."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PolynomialFormatError(InputError):
    """A polynomial string does not follow the polynomial syntax."""


class ConfigError(InputError):
    """An environment setting could not be coerced to its field type."""


class DomainError(LeavittError):
    """Well-formed input that lies outside an operation's domain."""


class UnknownVertexError(DomainError, KeyError):
    """A vertex name is not declared in the graph."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown vertex"


class PreconditionError(DomainError):
    """An operation was called with arguments violating its precondition."""


class ThresholdExceededError(DomainError):
    """The graph is too large for exhaustive enumeration."""


class UndecidedError(DomainError):
    """Irreducibility cannot be decided for this polynomial."""


class NotEnumerableError(DomainError):
    """The requested enumeration is infinite."""


class OracleLimitError(DomainError):
    """A brute-force oracle was given an instance above its size bound."""


class InvariantViolation(LeavittError, AssertionError):
    """A structural theorem failed to hold on a computed object."""


__all__ = [
    "ConfigError",
    "DomainError",
    "GraphFormatError",
    "InputError",
    "InvariantViolation",
    "LeavittError",
    "NotEnumerableError",
    "OracleLimitError",
    "PolynomialFormatError",
    "PreconditionError",
    "ThresholdExceededError",
    "UndecidedError",
    "UnknownVertexError",
]
