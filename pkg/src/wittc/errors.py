"""Exception types shared across the package."""


class WittcError(ValueError):
    """Base class for all domain errors raised by this package."""


class FieldMismatchError(WittcError):
    """Operands live over different base fields."""


class DegenerateFormError(WittcError):
    """A Gram matrix that was required to be nondegenerate is singular."""


class NonUnitError(WittcError):
    """An element that was required to be invertible is not a unit."""


class CompositionError(WittcError):
    """Correspondences cannot be composed (object mismatch)."""


class ValidationError(WittcError):
    """A correspondence violates its structural invariants."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)
