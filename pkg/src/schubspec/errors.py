"""Exception types shared across the package."""


class SchubspecError(Exception):
    """Base class for all package errors."""


class DuplicateEntryError(SchubspecError, ValueError):
    """A one-line word repeats a value."""


class OutOfRangeError(SchubspecError, ValueError):
    """A one-line word contains a value outside 1..n."""


class InvalidRemainderError(SchubspecError, ValueError):
    """Layer sizes are incompatible with the block width k."""


class GuardExceededError(SchubspecError, ValueError):
    """An enumeration was asked to run past its configured size guard."""


class NotCoprimeError(SchubspecError, ValueError):
    """The root index j is not coprime to the order k."""


class NotRationalIntegerError(SchubspecError, ArithmeticError):
    """A cyclotomic element expected to be a rational integer is not."""


class NotPerfectSquareError(SchubspecError, ArithmeticError):
    """An integer expected to be a perfect square is not."""


class InexactDivisionError(SchubspecError, ArithmeticError):
    """An exact ring division left a remainder."""


class NonIntegralResultError(SchubspecError, ArithmeticError):
    """A computation that must produce an integer produced a fraction."""


class EngineMismatchError(SchubspecError, AssertionError):
    """Two independent engines disagree on a value they must share."""


class DegenerateCompositionError(SchubspecError, ValueError):
    """A composition has too few layers for the requested fit."""


class AmbiguousTieError(SchubspecError, ArithmeticError):
    """A float comparison between irrational moduli is too close to call."""
