"""Exception types shared across the package."""


class PolyadicError(Exception):
    """Base class for all library errors."""


class DomainError(PolyadicError):
    """Invalid mathematical input (maps to CLI exit code 2)."""


class NotPrime(DomainError):
    pass


class ReducibleModulus(DomainError):
    pass


class FieldTooLarge(DomainError):
    """Field size exceeds the documented machine-word desk-scale limit."""


class OrderNotDivisible(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class NotCosetClosed(DomainError):
    pass


class NotUnit(DomainError):
    pass


class CoefficientNotInBaseField(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class DuplicateRoot(DomainError):
    pass


class TrivialRing(DomainError):
    pass


class PartitionMismatch(DomainError):
    pass


class NotSquare(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class BudgetExceeded(PolyadicError):
    """Requested exhaustive enumeration does not fit the codeword budget."""
