"""Exception types shared across the package."""


class DickeTriangleError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(DickeTriangleError, ValueError):
    """A parameter is non-finite or violates a precondition."""


class DomainError(DickeTriangleError, ValueError):
    """The requested quantity does not exist in this parameter regime."""


class NormalPhaseUnstableError(DomainError):
    """The normal phase is not the ground state at these parameters.

    Carries the quasi-momentum of the offending Bogoliubov branch.
    """

    def __init__(self, message, q):
        super().__init__(message)
        self.q = q


class BracketError(DomainError):
    """A bisection bracket does not contain the sought sign change."""


class NumericalInstabilityError(DickeTriangleError, RuntimeError):
    """A numerical routine detected that its result cannot be trusted."""


class ConvergenceError(DickeTriangleError, RuntimeError):
    """An iterative routine failed to converge within its budget."""
