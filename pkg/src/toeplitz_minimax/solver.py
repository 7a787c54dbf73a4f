"""The minimum-norm symbol of a self-adjoint Toeplitz matrix.

For a self-adjoint Toeplitz matrix ``A`` of size N+1, the bounded function of
least sup-norm whose Fourier coefficients ``-N..N`` reproduce ``A`` is unique:
an alternating step function of height ``c_A`` and order at most N. Its
height is the unique ``c`` at which the strip-mapped jet ``b(c)`` has
Caratheodory-Fejer norm exactly 1, and its arcs come from the extremal
Blaschke product at that ``c``.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .blaschke import CLUSTER_TOL, RationalInner, cf_extremal, cf_norm
from .exceptions import BracketError, DomainError, ResidualError
from .series import forward_map
from .stepfn import AlternatingStepFunction, step_from_blaschke
from .toeplitz import HermitianToeplitzSpec, operator_norm

DEFAULT_TOL = 1e-10
FOURIER_ACCEPT = 1e-7
DIAGONAL_THRESHOLD = 1e-14
PROFILE_POINTS = 64
MAX_EXPANSIONS = 10


@dataclass(frozen=True)
class MinimizerResult:
    """Minimum norm ``c_min``, its Blaschke product and step function, with residuals."""

    c_min: float
    omega: RationalInner
    step: AlternatingStepFunction
    order: int
    fourier_residual: float
    norm_ratio: float
    norm_residual: float = 0.0
    profile_monotone: bool = True
    extras: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {
            "c_min": self.c_min,
            "order": self.order,
            "ratio": self.norm_ratio,
            "omega": self.omega.to_json(),
            "step": self.step.to_json(),
            "residuals": {
                "fourier": self.fourier_residual,
                "norm_equation": self.norm_residual,
                "omega_boundary": self.omega.boundary_residual(),
            },
        }


def _as_spec(spec):
    return spec if isinstance(spec, HermitianToeplitzSpec) else HermitianToeplitzSpec(spec)


def norm_at(c, spec):
    """Caratheodory-Fejer norm of the strip-mapped jet at height ``c``.

    Greater than 1 below ``c_A``, less than 1 above it, and exactly 1 at it.
    """
    spec = _as_spec(spec)
    return cf_norm(forward_map(spec.coefficients, c))


def _lower_bracket(spec, a_norm):
    a0 = abs(spec.coefficients[0].real)
    return max(a0 * (1.0 + 1e-12) + 1e-300, a_norm)


def sample_profile(spec, lo, hi, points=PROFILE_POINTS):
    """``(c, norm_at(c))`` on a uniform grid over ``[lo, hi]``."""
    cs = np.linspace(lo, hi, points)
    return cs, np.array([norm_at(c, spec) for c in cs])


def _find_bracket(spec, tol):
    a_norm = operator_norm(spec.matrix())
    lo = _lower_bracket(spec, a_norm)
    hi = 3.0 * a_norm
    expansions = 0
    f_hi = norm_at(hi, spec) - 1.0
    while f_hi > 0:
        if expansions == MAX_EXPANSIONS:
            cs, vals = sample_profile(spec, lo, hi, 16)
            raise BracketError("norm_at never drops below 1 on the search interval", zip(cs, vals))
        hi *= 2.0
        f_hi = norm_at(hi, spec) - 1.0
        expansions += 1
    return a_norm, lo, hi


def _scan_bracket(cs, vals):
    """First adjacent pair of samples straddling 1."""
    above = vals >= 1.0
    idx = np.flatnonzero(above[:-1] & ~above[1:])
    if idx.size == 0:
        raise BracketError("sampled profile never crosses 1", zip(cs, vals))
    k = idx[0]
    return cs[k], cs[k + 1]


def _diagonal_result(spec):
    a0 = float(spec.coefficients[0].real)
    if a0 == 0.0:
        raise DomainError("zero matrix has no normalized minimizer")
    sign = 1.0 if a0 > 0 else -1.0
    # (1 + w) / (1 - w) = i sign for w = i sign, so Arg gives sign * pi/2
    omega = RationalInner([1j * sign], [1.0])
    step = AlternatingStepFunction.constant(a0)
    return MinimizerResult(
        c_min=abs(a0),
        omega=omega,
        step=step,
        order=0,
        fourier_residual=float(np.max(np.abs(spec.coefficients - step.fourier(np.arange(spec.order_n + 1))))),
        norm_ratio=1.0,
    )


def solve_min(spec, tol=DEFAULT_TOL, check_profile=True, cluster_tol=CLUSTER_TOL, accept=FOURIER_ACCEPT, grid=None):
    """Minimum sup-norm symbol of a self-adjoint Toeplitz matrix.

    Parameters
    ----------
    spec : HermitianToeplitzSpec or sequence of complex
        First column a_0..a_N.
    tol : float
        Target for ``|norm_at(c_min) - 1|``.
    check_profile : bool
        Sample ``norm_at`` over the bracket and fall back to a scan if it is
        not decreasing.
    accept : float
        Largest tolerated ``max |psi^(n) - a_n|``; exceeding it raises
        ``ResidualError``.
    grid : int, optional
        Initial phase-grid size for locating the jumps.

    Returns
    -------
    MinimizerResult
    """
    spec = _as_spec(spec)
    if not np.any(spec.coefficients):
        raise DomainError("zero matrix has no normalized minimizer")
    if spec.is_diagonal(DIAGONAL_THRESHOLD):
        return _diagonal_result(spec)

    a_norm, lo, hi = _find_bracket(spec, tol)
    monotone = True
    if check_profile:
        cs, vals = sample_profile(spec, lo, hi)
        monotone = bool(np.all(np.diff(vals) < 0))
        if not monotone:
            lo, hi = _scan_bracket(cs, vals)

    def g(c):
        return norm_at(c, spec) - 1.0

    if g(lo) < 0:
        raise BracketError("norm_at is already below 1 at the lower bracket", [(lo, g(lo) + 1.0)])
    c_min = brentq(g, lo, hi, xtol=1e-15 * hi, rtol=4 * np.finfo(float).eps, maxiter=500)
    b = forward_map(spec.coefficients, c_min)
    sigma, omega = cf_extremal(b, cluster_tol=cluster_tol)
    norm_residual = abs(sigma - 1.0)
    if norm_residual > tol:
        raise ResidualError("norm equation not solved to tolerance", norm_residual)
    step = step_from_blaschke(omega, c_min, grid=grid)
    n = spec.order_n
    residual = float(np.max(np.abs(step.fourier(np.arange(n + 1)) - spec.coefficients)))
    if residual > accept:
        raise ResidualError("minimizer does not reproduce the matrix entries", residual)
    return MinimizerResult(
        c_min=float(c_min),
        omega=omega,
        step=step,
        order=step.order,
        fourier_residual=residual,
        norm_ratio=float(c_min / a_norm),
        norm_residual=float(norm_residual),
        profile_monotone=monotone,
    )


def certificate(result, spec):
    """Summary report of a solve with the basic inequalities checked.

    ``ratio >= 1`` always, and ``ratio > 1`` whenever the matrix is not
    diagonal.
    """
    spec = _as_spec(spec)
    a_norm = operator_norm(spec.matrix())
    ratio = result.c_min / a_norm
    diagonal = spec.is_diagonal(DIAGONAL_THRESHOLD)
    report = {
        "c_min": result.c_min,
        "operator_norm": a_norm,
        "ratio": ratio,
        "fourier_residual": result.fourier_residual,
        "omega_boundary_residual": result.omega.boundary_residual(),
        "order": result.order,
        "diagonal": diagonal,
    }
    report["ratio_at_least_one"] = bool(ratio >= 1.0 - 1e-12)
    report["strict_for_nondiagonal"] = bool(diagonal or ratio > 1.0)
    report["ok"] = report["ratio_at_least_one"] and report["strict_for_nondiagonal"]
    return report
