"""Exception types shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class NumericalError(ArithmeticError):
    """A numerical procedure failed to converge or resolve its integrand.

    ``estimate`` carries the best value reached before giving up, if any.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class SingularityError(DomainError):
    """The requested angle sits on a known divergence of a cross section."""


class ForwardSingularity(SingularityError):
    """Evaluation at (or too close to) the forward direction theta = 0."""


class CausticDivergence(SingularityError):
    """Evaluation inside the exclusion zone around a classical fold caustic.

    The cross section diverges as ``|theta - theta_c| ** exponent`` with the
    integrable fold exponent -1/2.
    """

    def __init__(self, message, theta_caustic, exponent=-0.5):
        super().__init__(message)
        self.theta_caustic = theta_caustic
        self.exponent = exponent
