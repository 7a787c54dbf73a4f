"""Estimator-style wrapper around the minimum-norm symbol solver."""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .blaschke import CLUSTER_TOL
from .solver import DEFAULT_TOL, FOURIER_ACCEPT, solve_min
from .toeplitz import HermitianToeplitzSpec
from .validation import check_positive


class MinimalSymbolSolver(BaseEstimator):
    """Fit the least sup-norm symbol of a self-adjoint Toeplitz matrix.

    Parameters
    ----------
    tol : float
        Target residual of the norm equation.
    accept : float
        Largest tolerated deviation between the minimizer's Fourier
        coefficients and the matrix entries.
    cluster_tol : float
        Relative width within which top singular values count as repeated.

    Attributes
    ----------
    c_min_ : float
    omega_ : RationalInner
    step_ : AlternatingStepFunction
    order_ : int
    result_ : MinimizerResult

    Examples
    --------
    >>> est = MinimalSymbolSolver().fit([0.0, 2 / (np.pi * 1j)])
    >>> round(est.c_min_, 12)
    1.0
    """

    def __init__(self, tol=DEFAULT_TOL, accept=FOURIER_ACCEPT, cluster_tol=CLUSTER_TOL):
        self.tol = tol
        self.accept = accept
        self.cluster_tol = cluster_tol

    def fit(self, X, y=None):
        """``X`` is the first column a_0..a_N (or a HermitianToeplitzSpec); ``y`` is ignored."""
        check_positive(self.tol, "tol")
        check_positive(self.accept, "accept")
        check_positive(self.cluster_tol, "cluster_tol")
        spec = X if isinstance(X, HermitianToeplitzSpec) else HermitianToeplitzSpec(X)
        res = solve_min(spec, tol=self.tol, cluster_tol=self.cluster_tol, accept=self.accept)
        self.spec_ = spec
        self.result_ = res
        self.c_min_ = res.c_min
        self.omega_ = res.omega
        self.step_ = res.step
        self.order_ = res.order
        return self

    def predict(self, theta):
        """Values of the fitted step function at angles ``theta`` (radians)."""
        check_is_fitted(self, "step_")
        return self.step_(np.asarray(theta, dtype=float))

    def transform(self, m):
        """Fourier coefficients of the fitted step function at integer indices ``m``."""
        check_is_fitted(self, "step_")
        return self.step_.fourier(np.asarray(m))
