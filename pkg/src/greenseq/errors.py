"""Exception types shared across the package."""


class GreenSeqError(Exception):
    """Base class for all greenseq errors."""


class NotSkewSymmetrizable(GreenSeqError):
    """The principal part admits no positive integer skew-symmetrizer."""


class ArithmeticOverflow(GreenSeqError, OverflowError):
    """An entry left the checked 64-bit range (see set_unbounded_entries)."""


class IndexOutOfRange(GreenSeqError, IndexError):
    """A mutation direction or vertex index is outside the principal part."""


class SizeLimit(GreenSeqError):
    """An exhaustive method was asked to run beyond its size bound."""


class NotSignCoherentInput(GreenSeqError):
    """The attached block must be column sign-coherent before checking."""


class NonNegativityViolation(GreenSeqError):
    """A block or scaling matrix required to be nonnegative has a negative entry."""


class InvalidInputSequence(GreenSeqError):
    """An input sequence fails the verdict required by the operation."""


class ShapeViolation(GreenSeqError):
    """Matrix shapes, splits, or sequence index patterns do not match the contract."""


class InternalSignViolation(GreenSeqError):
    """A C-matrix column was neither green nor red; this signals a bug, not bad input."""


class ParseError(GreenSeqError, ValueError):
    """Input text could not be parsed. Carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message)
        self.line = line
        self.column = column
