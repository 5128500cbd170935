"""Exception types shared across the package."""


class UnitDiscError(ValueError):
    """A Blaschke zero lies outside the open unit disc."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient coefficient spaces."""


class CapTooSmall(RuntimeError):
    """A truncation cap was too small for the requested tolerance."""


class ContainmentError(ValueError):
    """A subspace expected to be contained in another is not."""


class ChainError(ValueError):
    """An inner-function chain fails its divisibility invariant."""
