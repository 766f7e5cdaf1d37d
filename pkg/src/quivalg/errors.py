"""Exception types shared across the package."""


class QuivalgError(Exception):
    """Base class for all package-specific errors."""


class IncomposableError(QuivalgError):
    """Raised when two paths are composed but endpoints do not match."""


class MalformedRelationError(QuivalgError):
    """Relation outside the square of the arrow ideal or not vertex-homogeneous."""


class NotFiniteDimensionalError(QuivalgError):
    """The quotient dimension failed to stabilize below the length cap."""


class DimensionMismatchError(QuivalgError):
    """A presented algebra's dimension disagrees with the reference dimension."""


class DecompositionInconclusiveError(QuivalgError):
    """The randomized idempotent splitting stalled before a full decomposition."""


class ParseError(QuivalgError):
    """Text input rejected; carries 1-based line and column positions."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class IncompletePresentationWarning(UserWarning):
    """The path search hit its length cap before closing multiplicatively."""
