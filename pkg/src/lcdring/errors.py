"""Exception types shared across the package."""


class LcdringError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(LcdringError):
    """Field characteristic is not a prime number."""


class BadModulusError(LcdringError):
    """Modulus polynomial has the wrong shape or is reducible."""


class BadBetaError(LcdringError):
    """Residue exponent does not divide the unit group order."""


class EmptySetError(LcdringError):
    """The requested residue complement is empty (beta = 1)."""


class BadRankError(LcdringError):
    """Requested element index exceeds the size of the set."""


class NotSquareError(LcdringError):
    """Operation requires a square matrix."""


class RankDeficientError(LcdringError):
    """Matrix does not have full row rank."""


class MismatchError(LcdringError):
    """Operands disagree on field, length, or shape."""


class BadLError(LcdringError):
    """Galois parameter l is outside the valid range."""


class ZeroCodeError(LcdringError):
    """The zero code has no minimum distance."""


class CapExceededError(LcdringError):
    """Enumeration would exceed the configured budget."""


class SizeCapError(LcdringError):
    """Minor search dimension exceeds the configured budget."""


class ZeroScaleError(LcdringError):
    """Column scaling vectors must be nonzero everywhere."""


class NotAUnitError(LcdringError):
    """Ring element with a zero coordinate cannot be inverted."""


class SupportMismatchError(LcdringError):
    """Perturbation vector support differs from the certified index set."""


class FieldTooSmallError(LcdringError):
    """The construction needs more field elements than q provides."""


class DivisibilityError(LcdringError):
    """Required divisibility between field parameters fails."""


class BetaOneError(LcdringError):
    """beta = 1 leaves no valid scaling factors."""


class ParseError(LcdringError):
    """Code file is malformed."""


class ConsistencyError(LcdringError):
    """An internal cross-check failed; indicates a bug."""


class NonIntegralLogError(ConsistencyError):
    """A codeword count was not a power of q."""
