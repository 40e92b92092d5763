"""Exception hierarchy.

Domain errors (bad input relative to a domain) and solver errors (numerical
routines that did not converge) are kept apart so the CLI can map them to
distinct exit codes.
"""


class MuDomainsError(Exception):
    pass


class DomainError(MuDomainsError, ValueError):
    """Input lies outside the set an operation is defined on."""


class SolverError(MuDomainsError, ArithmeticError):
    """A numerical routine failed to meet its residual contract."""


class DegenerateDenominator(DomainError):
    pass


class CoincidentPoints(DomainError):
    pass


class OutsideDomain(DomainError):
    pass


class NotOnBoundary(DomainError):
    pass


class UnknownStratum(MuDomainsError, KeyError):
    pass


class SolverFailure(SolverError):
    pass


class InterpolationFailure(SolverError):
    def __init__(self, message, best_residual=float("nan")):
        super().__init__(message)
        self.best_residual = best_residual


class InternalInconsistency(SolverError):
    """An identity that holds by construction was violated; indicates a bug."""


class MalformedInput(MuDomainsError, ValueError):
    """A payload does not match the expected schema."""
