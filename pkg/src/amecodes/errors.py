"""Exception types shared across the package."""


class AmeError(Exception):
    """Base class for all errors raised by :mod:`amecodes`."""


class FieldError(AmeError, ValueError):
    """Invalid finite-field request (non-prime-power order, inverse of zero...)."""


class ConstructionError(AmeError, ValueError):
    """An object cannot be built with the requested parameters."""


class NotMDSError(ConstructionError):
    """A generator matrix is not MDS.

    ``witness`` holds ``(rows, cols)`` of a singular square submatrix of the
    redundancy block ``A`` when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedError(AmeError, ValueError):
    """The operation is outside the supported parameter range (e.g. non-prime q)."""


class BudgetExceeded(AmeError, RuntimeError):
    """An exhaustive enumeration would exceed the configured work budget."""

    def __init__(self, what, needed, budget):
        super().__init__(f"{what}: needs ~{needed:.3g} operations, budget is {budget:.3g}")
        self.needed = needed
        self.budget = budget


DEFAULT_BUDGET = 10**8
