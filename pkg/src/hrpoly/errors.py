"""Exception hierarchy shared by every module.

All domain errors derive from :class:`DomainError` so the command line can
map them to a single exit status.
"""


class DomainError(ValueError):
    """An input violated a documented precondition."""


class StructureError(DomainError):
    """Two polynomials do not share variables and block structure."""


class PolynomialSyntaxError(DomainError):
    """Polynomial text could not be parsed."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotSymmetricError(DomainError):
    """A polynomial expected to be symmetric is not.

    ``transposition`` holds the pair of variable indices whose swap changes
    the polynomial.
    """

    def __init__(self, transposition):
        i, j = transposition
        super().__init__(f"not symmetric under swapping variables {i} and {j}")
        self.transposition = transposition


class PreconditionError(DomainError):
    """A mathematical hypothesis of an operation does not hold.

    ``witness`` carries whatever object demonstrates the failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedError(DomainError):
    """The request is outside what the desk-scale models can decide."""


class ImplementationError(AssertionError):
    """Two independent computations that must agree did not."""
