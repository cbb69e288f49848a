"""Shared exception types."""


class AddmdsError(Exception):
    """Base class for library-specific failures."""


class NotPrime(AddmdsError):
    """Characteristic argument is not a prime number."""


class TowerTooLarge(AddmdsError):
    """Requested field exceeds the configured element bound."""


class TowerMismatch(AddmdsError):
    """Operands belong to different field towers."""


class InvalidSubfield(AddmdsError):
    """Subfield degree does not divide the extension degree."""


class NotInvertible(AddmdsError):
    """Linearized polynomial (or matrix) has no inverse."""


class NotMds(AddmdsError):
    """Operation requires an MDS code and the input is not one."""


class NonInvertibleMap(AddmdsError):
    """Equivalence move contains a non-invertible coordinate map."""


class BudgetExceeded(AddmdsError):
    """Enumeration would exceed the configured hard budget."""


class DimensionMismatch(AddmdsError):
    """Subspace dimensions do not fit the requested operation."""


class SpanFailure(AddmdsError):
    """Subspace collection does not span the ambient space."""


class FieldTooSmall(AddmdsError):
    """Base field is too small for the requested construction."""
