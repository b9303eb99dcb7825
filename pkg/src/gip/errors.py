"""Exception types raised by the library.

Everything derives from GipError so callers (notably the CLI) can map any
domain failure to a diagnostic and a nonzero exit status.
"""


class GipError(ValueError):
    """Base class for all validation and domain errors."""


class SumMismatch(GipError):
    """Block sizes do not add up to the matrix size."""


class ZeroBlock(GipError):
    """A block of size zero was supplied."""


class OutOfRange(GipError):
    """A row, column, or degree lies outside its admissible range."""


class SizeMismatch(GipError):
    """Two support patterns of different matrix sizes were combined."""


class LengthMismatch(GipError):
    """A sequence argument has the wrong length for the operation."""


class UnsupportedEntry(GipError):
    """A substitution assigns a matrix unit that lies outside the algebra."""


class ZeroDegreeVariable(GipError):
    """The operation requires a monomial without degree-0 variables."""


class NotAnIdentity(GipError):
    """The monomial is not an identity of the given algebra."""


class LabelMismatch(GipError):
    """Two permutations do not act on the same set of positions."""


class CapExceeded(GipError):
    """The monomial is longer than the configured search cap."""


class TargetNotIdentity(GipError):
    """The consequence target is not an identity of the algebra."""


class GeneratorNotIdentity(GipError):
    """A supplied generator is not an identity of the algebra."""
