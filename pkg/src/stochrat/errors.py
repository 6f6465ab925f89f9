"""Exception types raised by the library."""


class StochratError(ValueError):
    """Base class for all library errors."""


class NonOverlappingBudgets(StochratError):
    """The two budget lines do not cross in the strictly positive orthant."""


class OffBudgetLine(StochratError):
    """A bundle does not lie on the budget line it is claimed for."""


class Region3MassPresent(StochratError):
    """A population puts probability on a type that chooses the intersection point."""


class EmptySample(StochratError):
    """Sample weights have zero total mass."""


class InstanceTooLarge(StochratError):
    """Exhaustive enumeration was requested for a sample size that is too large."""
