"""Exception types raised by the package."""


class DomainError(ValueError):
    """Input lies outside the domain of a map or operation."""


class ConvergenceError(RuntimeError):
    """An iterative routine hit its iteration cap.

    Attributes
    ----------
    residual : float
        Best residual reached before giving up.
    """

    def __init__(self, message, residual=float("nan")):
        super().__init__(f"{message} (best residual {residual:.3e})")
        self.residual = residual


class BracketError(RuntimeError):
    """A root could not be bracketed.

    ``profile`` holds the sampled ``(x, f(x))`` pairs that were inspected.
    """

    def __init__(self, message, profile=()):
        super().__init__(message)
        self.profile = list(profile)


class ResidualError(RuntimeError):
    """A computed object failed its a-posteriori residual check."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual
