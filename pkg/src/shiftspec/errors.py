"""Exception hierarchy shared by all shiftspec modules."""


class ShiftSpecError(Exception):
    """Base class for every error raised by this package."""


class MixedFieldError(ShiftSpecError):
    """Two operands belong to different field contexts."""


class MalformedLiteralError(ShiftSpecError, ValueError):
    """An element literal does not match the grammar ``[+-]?digits[/[+-]?digits]``."""


class ZeroDenominatorError(ShiftSpecError, ZeroDivisionError):
    """An element literal has a denominator equal to zero in its field."""


class ZeroRadicandError(ShiftSpecError, ValueError):
    """Root extraction was asked for radicand 0; callers handle that case themselves."""


class ZeroElementError(ShiftSpecError, ValueError):
    """The multiplicative order of 0 is undefined."""


class ZeroPolynomialError(ShiftSpecError, ValueError):
    """Root finding on the zero polynomial is undefined."""


class RootSearchOverflowError(ShiftSpecError):
    """A coefficient magnitude exceeded the documented factoring cutoff (2**63)."""


class NotAnEigenvalueError(ShiftSpecError):
    """A requested eigenvector value is outside the operator's spectrum."""


class VerificationError(ShiftSpecError):
    """A constructed object failed its own exactness check; indicates a bug."""


class ZeroEigenvalueError(ShiftSpecError, ValueError):
    """The wandering eigenvector construction only applies to nonzero values."""


class ZeroTailWeightError(ShiftSpecError, ValueError):
    """The wandering eigenvector construction requires an invertible tail weight."""


class WindowTooSmallError(ShiftSpecError, ValueError):
    """The requested window does not reach past the presentation boundary."""


class InstanceFormatError(ShiftSpecError):
    """An instance file is syntactically malformed (bad JSON, missing or mistyped fields)."""


class InstanceValidationError(ShiftSpecError):
    """An instance file parsed but violates a semantic invariant (ranges, lengths, primality)."""


class WrongInstanceKindError(ShiftSpecError):
    """A command received a finite instance where a co-finite one is required, or vice versa."""
