"""Exception hierarchy shared across the package."""


class OkbodiesError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(OkbodiesError):
    """Two divisor classes live over surfaces with different numbers of points."""


class NonIntegralClass(OkbodiesError):
    """An operation required integer coefficients but got proper fractions."""


class NotNef(OkbodiesError):
    """A class required to be nef (against the catalog) is not."""


class NotBig(OkbodiesError):
    """A class required to be big has volume zero."""


class NotPseudoEffective(OkbodiesError):
    """No consistent Zariski decomposition exists against the catalog."""


class CatalogInsufficient(OkbodiesError):
    """A computation touched the degree frontier of a non-stabilized catalog.

    The result would only be trustworthy with a larger degree bound; callers
    should regenerate the catalog with a bigger ``d_max``.
    """


class GramNotNegativeDefinite(OkbodiesError):
    """A candidate negative-part support has a degenerate Gram matrix."""


class IrrationalThreshold(OkbodiesError):
    """An exact rational answer was required but the threshold is a quadratic
    irrational; the offending algebraic number is attached as ``value``."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class WindowViolation(OkbodiesError):
    """A rational parameter lies outside the open window (1/sqrt(s+1), 1/sqrt(s))."""


class CharacteristicTooSmall(OkbodiesError):
    """The finite-field characteristic is too small for the requested degree."""


class MemoryCapExceeded(OkbodiesError):
    """Catalog expansion would exceed the configured entry cap."""
