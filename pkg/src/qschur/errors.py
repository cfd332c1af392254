"""Exception hierarchy shared across the package.

Every error the library raises deliberately derives from QschurError, so
callers (in particular the command line driver) can map failures onto
stable exit codes without matching on message text.
"""

from __future__ import annotations

__all__ = [
    "QschurError",
    "DomainError",
    "DimensionMismatch",
    "ExactDivisionError",
    "ResourceLimit",
    "ConsistencyError",
    "ParseError",
]


class QschurError(Exception):
    """Base class for all deliberate errors raised by this package."""


class DomainError(QschurError):
    """An argument is outside the mathematical domain of the operation."""


class DimensionMismatch(QschurError):
    """Operands live in different algebras (size or degree disagree)."""


class ExactDivisionError(QschurError):
    """A division that must be exact over Z[v, v^-1] left a remainder."""


class ResourceLimit(QschurError):
    """The request exceeds a configured size cap (for example the
    symmetric-group degree the coset oracle is willing to enumerate)."""


class ConsistencyError(QschurError):
    """An internal cross-check failed; indicates a bug, never bad input."""


class ParseError(QschurError):
    """Input text (JSON element, option value) could not be understood."""
