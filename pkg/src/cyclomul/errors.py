"""Exception types shared across the package."""


class CyclomulError(Exception):
    """Base class for all library-specific errors."""


class DimensionMismatch(CyclomulError):
    """Operands live in different rings (different n or ground field)."""


class OddDimensionRequired(CyclomulError):
    """The operation is only defined for odd vector dimension n."""


class NoSuchElement(CyclomulError):
    """No element with the requested multiplicative order exists."""


class WrongBasisType(CyclomulError):
    """Parameters do not describe the required normal-basis type."""


class NotFoldable(CyclomulError):
    """Vector is not palindromic, so it has no folded representation."""


class NotCoprime(CyclomulError):
    """Arguments are required to be coprime."""


class NoRoot(CyclomulError):
    """The field contains no element of the requested order."""


class OrderMismatch(CyclomulError):
    """The supplied root of unity does not match the vector dimension."""


class TooLarge(CyclomulError):
    """Problem size exceeds the desk-scale limits."""


class UnsupportedCombination(CyclomulError):
    """No multiplier is available for the requested parameters."""


class OracleUnavailable(CyclomulError):
    """Splitting-field verification would exceed the oracle size caps."""
