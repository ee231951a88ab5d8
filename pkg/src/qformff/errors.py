"""Exception types shared across the package."""


class QformError(Exception):
    """Base class for all qformff-specific errors."""


class FieldMismatchError(QformError):
    """Operands belong to different fields."""


class ZeroInputError(QformError):
    """A nonzero element or polynomial is required."""


class FieldTooLargeError(QformError):
    """Field order exceeds the packing or enumeration limit."""


class NotPrimeError(QformError):
    """Declared characteristic is not a prime number."""


class EvenCharacteristicError(QformError):
    """Fields of characteristic 2 are outside the supported domain."""


class ReducibleModulusError(QformError):
    """A defining or place polynomial failed its irreducibility check."""


class DegenerateFormError(QformError):
    """A diagonal form was given a zero coefficient."""


class BudgetExceededError(QformError):
    """An exhaustive search refused to exceed its candidate budget."""


class ParseError(QformError):
    """Malformed field, polynomial, rational function or form text."""


class InvariantError(QformError):
    """An internal consistency invariant was violated (CLI exit 2)."""
