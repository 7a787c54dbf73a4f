"""Finite Blaschke products and the Caratheodory-Fejer extremal problem.

Given a jet ``b_0..b_N``, the smallest sup-norm of a bounded analytic
function with that jet is the norm of the lower-triangular Toeplitz matrix
``B`` built from it, and the unique extremal is ``||B||`` times a Blaschke
product ``w = r / s`` of order at most N, where ``s`` is a maximizing vector
of ``B`` and ``B s = ||B|| r``.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, ResidualError
from .series import CoefficientJet
from .toeplitz import LINALG_TOL, lower_triangular_toeplitz, operator_norm, top_singular_subspace
from .validation import check_complex_vector

# relative cluster width for a repeated top singular value
CLUSTER_TOL = 1e-7
MIN_S0 = 1e-10


@dataclass(frozen=True)
class RationalInner:
    """Inner rational function ``r(z) / s(z)``.

    Coefficients are stored in increasing powers. ``s`` has no zeros in the
    closed unit disk; the canonical scaling has ``s_0 = 1``.
    """

    numerator: np.ndarray
    denominator: np.ndarray

    def __post_init__(self):
        r = check_complex_vector(self.numerator, "numerator").copy()
        s = check_complex_vector(self.denominator, "denominator").copy()
        if r.size != s.size:
            n = max(r.size, s.size)
            r = np.pad(r, (0, n - r.size))
            s = np.pad(s, (0, n - s.size))
        r.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "numerator", r)
        object.__setattr__(self, "denominator", s)

    @property
    def order(self):
        return self.numerator.size - 1

    @classmethod
    def from_zeros(cls, zeros, unimodular=1.0):
        """``unimodular * prod (z - z_j) / (1 - conj(z_j) z)``."""
        zeros = np.asarray(zeros, dtype=complex)
        if np.any(np.abs(zeros) >= 1):
            raise DomainError("Blaschke zeros must lie in the open unit disk")
        r = np.array([unimodular], dtype=complex)
        s = np.array([1.0], dtype=complex)
        for zj in zeros:
            r = np.convolve(r, [-zj, 1.0])
            s = np.convolve(s, [1.0, -np.conj(zj)])
        return cls(r, s)

    @classmethod
    def monomial(cls, n, unimodular=1.0):
        r = np.zeros(n + 1, dtype=complex)
        r[n] = unimodular
        s = np.zeros(n + 1, dtype=complex)
        s[0] = 1.0
        return cls(r, s)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return np.polynomial.polynomial.polyval(z, self.numerator) / np.polynomial.polynomial.polyval(
            z, self.denominator
        )

    def on_circle(self, theta):
        return self(np.exp(1j * np.asarray(theta, dtype=float)))

    def canonical(self):
        """Same function scaled so that ``s_0 = 1``."""
        s0 = self.denominator[0]
        if s0 == 0:
            return self
        return RationalInner(self.numerator / s0, self.denominator / s0)

    def zeros(self):
        """Zeros of the numerator (diagnostics only)."""
        r = np.trim_zeros(self.numerator, "b")
        if r.size <= 1:
            return np.array([], dtype=complex)
        return np.polynomial.polynomial.polyroots(r)

    def boundary_residual(self, grid=1024):
        """max | |w(e^{i theta})| - 1 | on a uniform grid."""
        theta = 2 * np.pi * np.arange(grid) / grid
        return float(np.max(np.abs(np.abs(self.on_circle(theta)) - 1.0)))

    def to_json(self):
        return {
            "order": self.order,
            "numerator": [[float(z.real), float(z.imag)] for z in self.numerator],
            "denominator": [[float(z.real), float(z.imag)] for z in self.denominator],
        }


def _as_jet(b):
    return b.coefficients if isinstance(b, CoefficientJet) else check_complex_vector(b, "b")


def cf_norm(b, tol=LINALG_TOL):
    """Norm of the lower-triangular Toeplitz matrix with first column ``b``."""
    return operator_norm(lower_triangular_toeplitz(_as_jet(b)), tol=tol)


def _lowest_degree_vector(basis):
    """Unit vector in span(basis) whose trailing d-1 entries vanish.

    In the top singular subspace of ``B`` for an order-n extremal, every
    vector is ``s * g`` with ``deg g <= N - n``; this picks ``g`` constant.
    """
    n1, d = basis.shape
    if d == 1:
        return basis[:, 0]
    _, _, vh = np.linalg.svd(basis[n1 - d + 1 :, :])
    vec = basis @ np.conj(vh[-1])
    return vec / np.linalg.norm(vec)


def cf_extremal(b, cluster_tol=CLUSTER_TOL, tol=LINALG_TOL):
    """Extremal Blaschke product for the Caratheodory-Fejer problem.

    Parameters
    ----------
    b : CoefficientJet or sequence of complex
        Prescribed Taylor coefficients b_0..b_N, not all zero.
    cluster_tol : float
        Singular values within this relative distance of the largest are
        treated as one repeated value; the order then drops accordingly.

    Returns
    -------
    (sigma, RationalInner)
        ``sigma = ||B||`` and ``w`` with ``sigma * w = b + O(z^{N+1})``.
    """
    b = _as_jet(b)
    if not np.any(b):
        raise DomainError("the zero jet has no normalized extremal")
    big_b = lower_triangular_toeplitz(b)
    sigma, basis = top_singular_subspace(big_b, cluster_tol=cluster_tol, tol=tol)
    s = _lowest_degree_vector(basis)
    order = b.size - basis.shape[1]
    r = big_b @ s / sigma
    s = s[: order + 1]
    r = r[: order + 1]
    if abs(s[0]) < MIN_S0 * np.linalg.norm(s):
        raise ResidualError("maximizing polynomial is ill-conditioned at 0", abs(s[0]))
    return sigma, RationalInner(r, s).canonical()


def jet_of(w, m):
    """Taylor coefficients of ``w`` at 0 through degree ``m`` by long division."""
    s = w.denominator
    if s[0] == 0:
        raise DomainError("denominator vanishes at 0")
    r = np.zeros(m + 1, dtype=complex)
    k = min(m + 1, w.numerator.size)
    r[:k] = w.numerator[:k]
    ss = np.zeros(m + 1, dtype=complex)
    k = min(m + 1, s.size)
    ss[:k] = s[:k]
    out = np.zeros(m + 1, dtype=complex)
    for n in range(m + 1):
        out[n] = (r[n] - np.dot(out[:n], ss[n:0:-1])) / ss[0]
    return CoefficientJet(out)


def blaschke_order(w, grid=4096, unimodular_tol=1e-6):
    """Winding number of ``w`` around the unit circle.

    Raises ``ResidualError`` when boundary values are not unimodular or the
    phase increment is not close to a multiple of ``2 pi``.
    """
    theta = 2 * np.pi * np.arange(grid + 1) / grid
    vals = w.on_circle(theta)
    dev = float(np.max(np.abs(np.abs(vals) - 1.0)))
    if dev > unimodular_tol:
        raise ResidualError("boundary values are not unimodular", dev)
    phase = np.unwrap(np.angle(vals))
    winding = (phase[-1] - phase[0]) / (2 * np.pi)
    n = int(round(winding))
    if abs(winding - n) > 0.1:
        raise ResidualError("winding number is not near an integer", abs(winding - n))
    return n
