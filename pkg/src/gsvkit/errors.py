"""Exception hierarchy shared by the whole package.

Precondition failures carry a short machine-readable ``reason`` slug so the
command line layer can report them without string matching.
"""

from __future__ import annotations


class GsvkitError(Exception):
    """Base class for all errors raised by gsvkit."""


class PolyParseError(GsvkitError, ValueError):
    """Syntax or vocabulary error in a polynomial expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class PreconditionError(GsvkitError):
    """An operation was called on data outside its domain of validity."""

    reason = "precondition"

    def __init__(self, message: str, **data):
        super().__init__(message)
        self.data = data


class SmoothGermError(PreconditionError):
    reason = "smooth-germ"


class NonIsolatedGermError(PreconditionError):
    reason = "non-isolated-germ"


class NotTangentError(PreconditionError):
    """The field does not leave the hypersurface invariant; carries the
    nonzero division remainder as evidence."""

    reason = "not-tangent"

    def __init__(self, message: str, remainder=None, **data):
        super().__init__(message, **data)
        self.remainder = remainder


class FieldDoesNotVanishError(PreconditionError):
    reason = "field-does-not-vanish"


class NonIsolatedRestrictionError(PreconditionError):
    """A quotient dimension required by an index formula is infinite."""

    reason = "non-isolated-restriction"


class NotQuasiHomogeneousError(PreconditionError):
    reason = "not-quasi-homogeneous-for-these-weights"


class UnsupportedDimensionError(PreconditionError):
    reason = "unsupported-dimension"


class InvalidDataError(PreconditionError):
    """User-supplied global data fails verification."""

    reason = "invalid-data"


class UnverifiedSingularPointError(InvalidDataError):
    reason = "unverified-singular-point"


class NonIsolatedPointError(InvalidDataError):
    reason = "non-isolated-point"


class ProblemFormatError(GsvkitError, ValueError):
    """Malformed problem file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class InternalInconsistencyError(GsvkitError):
    """Two routes that must agree produced different answers (a bug)."""
