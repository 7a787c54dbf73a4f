"""Alternating step functions on the unit circle.

An alternating step function of height ``c`` and order ``n`` takes the values
``+c`` and ``-c`` alternately on ``2n`` arcs partitioning the circle; order 0
is a constant. This module converts between such a function, its Fourier
coefficients, its Toeplitz compressions and its Blaschke product ``w``, tied
together by ``psi = (2c / pi) Arg((1 + w) / (1 - w))`` on the circle.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .blaschke import RationalInner, blaschke_order
from .exceptions import DomainError, ResidualError
from .toeplitz import HermitianToeplitzSpec
from .validation import as_angles, check_order, check_positive

TWO_PI = 2.0 * np.pi
# jumps closer than this to 2*pi are folded onto 0
WRAP_EPS = 1e-12


@dataclass(frozen=True)
class AlternatingStepFunction:
    """Height, sorted jump angles in ``[0, 2 pi)`` and the sign on ``(jumps[0], jumps[1])``."""

    height: float
    jumps: np.ndarray
    first_sign: int = 1

    def __post_init__(self):
        h = check_positive(self.height, "height")
        j = as_angles(self.jumps, "jumps").copy()
        if j.size % 2:
            raise DomainError(f"an alternating step function needs an even number of jumps, got {j.size}")
        if j.size and (j[0] < 0 or j[-1] >= TWO_PI):
            raise DomainError("jump angles must lie in [0, 2*pi) radians")
        if np.any(np.diff(j) <= 0):
            raise DomainError("jump angles must be strictly increasing")
        if self.first_sign not in (1, -1):
            raise DomainError(f"first_sign must be +1 or -1, got {self.first_sign!r}")
        j.setflags(write=False)
        object.__setattr__(self, "height", h)
        object.__setattr__(self, "jumps", j)
        object.__setattr__(self, "first_sign", int(self.first_sign))

    @classmethod
    def constant(cls, value):
        if value == 0:
            raise DomainError("an order-0 step function has nonzero height")
        return cls(abs(value), np.array([]), 1 if value > 0 else -1)

    @classmethod
    def from_arcs(cls, height, jumps, sign_at=None, value_at_sign=1):
        """Build from unsorted jump angles (any real numbers, reduced mod 2 pi).

        If ``sign_at`` is given, the function takes the value
        ``value_at_sign * height`` at that angle; otherwise the arc starting at
        the smallest reduced jump carries ``+height``.
        """
        j = np.sort(np.mod(as_angles(jumps, "jumps"), TWO_PI))
        j[j > TWO_PI - WRAP_EPS] = 0.0
        j = np.sort(j)
        psi = cls(height, j, 1)
        if sign_at is not None and psi(sign_at) != value_at_sign * psi.height:
            psi = cls(height, j, -1)
        return psi

    @property
    def order(self):
        return self.jumps.size // 2

    def arc_values(self):
        """Signed value on each arc ``(jumps[k], jumps[k+1])``, the last one wrapping."""
        n = self.jumps.size
        return self.first_sign * self.height * (-1.0) ** np.arange(n)

    def arc_ends(self):
        return np.append(self.jumps[1:], self.jumps[0] + TWO_PI) if self.jumps.size else self.jumps

    def positive_arcs(self):
        """``[(start, end), ...]`` of the arcs carrying ``+height``; ``end`` may exceed 2 pi."""
        vals = self.arc_values()
        return [(float(a), float(b)) for a, b, v in zip(self.jumps, self.arc_ends(), vals) if v > 0]

    def __call__(self, theta):
        theta = np.mod(np.asarray(theta, dtype=float), TWO_PI)
        if self.order == 0:
            return np.full_like(theta, self.first_sign * self.height)[()]
        d = np.abs(theta[..., None] - self.jumps)
        if np.any(np.minimum(d, TWO_PI - d) < 1e-15):
            raise DomainError("a step function is undefined at its jumps")
        k = np.searchsorted(self.jumps, theta, side="right") - 1
        # k == -1 means theta precedes jumps[0]: it sits on the wrapping last arc
        k = np.where(k < 0, self.jumps.size - 1, k)
        return self.arc_values()[k][()]

    eval = __call__

    def fourier(self, m):
        """Fourier coefficient ``(1/2pi) int psi(e^{it}) e^{-imt} dt`` (array-aware in ``m``)."""
        m = np.asarray(m)
        if self.order == 0:
            return np.where(m == 0, self.first_sign * self.height, 0.0).astype(complex)[()]
        v = self.arc_values()
        a = self.jumps
        b = self.arc_ends()
        mm = m[..., None]
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = v * (np.exp(-1j * mm * a) - np.exp(-1j * mm * b)) / (2j * np.pi * mm)
        out = terms.sum(axis=-1)
        mean = np.sum(v * (b - a)) / TWO_PI
        return np.where(m == 0, mean, out)[()]

    def labeled_arcs(self):
        """``(alpha, beta)`` with ``0 <= alpha_1 < beta_1 < ... < beta_N < alpha_1 + 2 pi``.

        ``psi = +height`` on each ``(alpha_n, beta_n)``.
        """
        j = self.jumps
        if self.first_sign == 1:
            return j[0::2].copy(), j[1::2].copy()
        beta = np.append(j[2::2], j[0] + TWO_PI)
        return j[1::2].copy(), beta

    def to_json(self):
        return {"height": self.height, "jumps_radians": [float(x) for x in self.jumps], "first_sign": self.first_sign}


def fourier(psi, m):
    return psi.fourier(m)


def toeplitz_of(psi, n):
    """Compression to polynomials of degree <= n: coefficients psi^(0..n)."""
    n = check_order(n, "n")
    return HermitianToeplitzSpec(np.atleast_1d(psi.fourier(np.arange(n + 1))))


def arc_polynomials(psi):
    """``(p, q)`` in increasing powers, with the half-sum phase factors.

    ``p(z) = e^{-i alpha/2} prod (z - e^{i alpha_n})`` and likewise ``q`` for
    the beta's, where alpha and beta are the sums of the labeled angles.
    """
    alpha, beta = psi.labeled_arcs()
    p = np.polynomial.polynomial.polyfromroots(np.exp(1j * alpha)) * np.exp(-0.5j * alpha.sum())
    q = np.polynomial.polynomial.polyfromroots(np.exp(1j * beta)) * np.exp(-0.5j * beta.sum())
    return p, q


def blaschke_from_arcs(psi, min_gap=1e-12):
    """Blaschke product ``w = (q - ip) / (q + ip)`` of order ``psi.order``.

    ``w`` is normalized so that ``|(1 + w(0)) / (1 - w(0))| = 1``, which
    singles it out among all order-N products reproducing ``psi``.
    """
    if psi.order < 1:
        raise DomainError("blaschke_from_arcs needs order >= 1")
    gaps = np.diff(np.append(psi.jumps, psi.jumps[0] + TWO_PI))
    if np.min(gaps) <= min_gap:
        raise DomainError("coincident jumps")
    p, q = arc_polynomials(psi)
    return RationalInner(q - 1j * p, q + 1j * p).canonical()


def _phase_grid(w, n_points):
    theta = TWO_PI * np.arange(n_points) / n_points
    vals = w.on_circle(theta)
    # start where w is far from +-1 so no jump sits on the seam
    k0 = int(np.argmax(np.abs(vals.imag)))
    theta = theta[k0] + TWO_PI * np.arange(n_points + 1) / n_points
    vals = np.roll(vals, -k0)
    vals = np.append(vals, vals[0])
    return theta, np.unwrap(np.angle(vals))


def step_from_blaschke(w, c, grid=None, xtol=1e-13):
    """Alternating step function ``(2c/pi) Arg((1 + w) / (1 - w))`` of a Blaschke product.

    Jumps are the ``2n`` points where ``w = +-1``. The argument of ``w`` is
    strictly increasing, so each is bracketed on a phase grid and then
    refined by Brent's method to ``xtol`` radians.
    """
    c = check_positive(c, "c")
    n = blaschke_order(w)
    if n < 1:
        raise DomainError("step_from_blaschke needs order >= 1; a constant w gives a constant step")
    n_points = grid or max(2048, 512 * n)
    for _ in range(8):
        theta, phase = _phase_grid(w, n_points)
        steps = np.diff(phase)
        if np.all(steps > -1e-12) and np.max(steps) < np.pi / 4:
            break
        n_points *= 4
    else:
        raise ResidualError("boundary phase is not monotone on the grid", float(np.min(steps)))
    lo = int(np.floor(phase[0] / np.pi)) + 1
    levels = np.pi * np.arange(lo, lo + 2 * n)
    jumps = []
    for level in levels:
        i = int(np.searchsorted(phase, level)) - 1
        t0, ref = theta[i], w.on_circle(theta[i])

        def f(t, i=i, ref=ref, level=level):
            return phase[i] + np.angle(w.on_circle(t) / ref) - level

        fa, fb = f(t0), f(theta[i + 1])
        # a level that lands on a grid node can round to the wrong side of it
        if fb <= 0.0:
            jumps.append(theta[i + 1])
        elif fa >= 0.0:
            jumps.append(t0)
        else:
            jumps.append(brentq(f, t0, theta[i + 1], xtol=xtol, rtol=4 * np.finfo(float).eps))
    jumps = np.mod(np.array(jumps), TWO_PI)
    jumps[jumps > TWO_PI - WRAP_EPS] = 0.0
    jumps = np.sort(jumps)
    mid = 0.5 * (jumps[0] + jumps[1])
    first_sign = 1 if w.on_circle(mid).imag > 0 else -1
    return AlternatingStepFunction(c, jumps, first_sign)
