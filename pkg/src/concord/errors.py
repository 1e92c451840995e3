"""Exception types shared across the package."""

from __future__ import annotations


class ConcordError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatchError(ConcordError):
    """An alternative or value does not fit the declared variable space."""


class CapacityError(ConcordError):
    """The request exceeds a configured size cap and was refused up front."""


class IndeterminateError(ConcordError):
    """A search gave up (timeout) without reaching a verdict."""


class TrivialStakeholderError(ConcordError):
    """A stakeholder's statement set is inconsistent or unfalsifiable."""


class ParseError(ConcordError):
    """Text input rejected, with position information.

    Attributes:
        code: stable machine-readable reason, e.g. ``"bad-tuple-arity"``.
        line: 1-based line of the offending token.
        col: 1-based column of the offending token.
    """

    def __init__(self, code: str, line: int, col: int, message: str):
        super().__init__(f"{line}:{col}: {message} [{code}]")
        self.code = code
        self.line = line
        self.col = col
        self.message = message
