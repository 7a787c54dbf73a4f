"""Truncated power series (jets) and the strip-map coefficient correspondence.

A symbol's analytic half ``h(z) = a_0/2 + a_1 z + ... + a_N z^N + O(z^{N+1})``
is sent to ``b = i tan(pi h / (2c))``, the jet of a self-map of the disk, and
back via ``h = (c / (pi i)) Log((1 + b) / (1 - b))``. Both directions are
exact modulo ``z^{N+1}``; coefficient ``n`` of one side depends only on
``c`` and coefficients ``0..n`` of the other.
"""

import cmath

import numpy as np

from .exceptions import DomainError
from .validation import check_complex_vector, check_positive


class CoefficientJet:
    """Taylor coefficients c_0..c_N of a germ at 0, truncated at degree N.

    Arithmetic between jets of different degree truncates to the smaller one.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        c = check_complex_vector(coefficients, "coefficients").copy()
        c.setflags(write=False)
        self.coefficients = c

    @classmethod
    def variable(cls, degree):
        """The jet of ``z``."""
        c = np.zeros(degree + 1, dtype=complex)
        if degree >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def constant(cls, value, degree):
        c = np.zeros(degree + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @property
    def degree(self):
        return self.coefficients.size - 1

    def __len__(self):
        return self.coefficients.size

    def __getitem__(self, k):
        return self.coefficients[k]

    def __repr__(self):
        return f"CoefficientJet({np.array2string(self.coefficients, precision=6)})"

    def _coerce(self, other):
        if isinstance(other, CoefficientJet):
            n = min(len(self), len(other))
            return self.coefficients[:n], other.coefficients[:n]
        c = np.zeros_like(self.coefficients)
        c[0] = other
        return self.coefficients, c

    def __add__(self, other):
        x, y = self._coerce(other)
        return CoefficientJet(x + y)

    __radd__ = __add__

    def __neg__(self):
        return CoefficientJet(-self.coefficients)

    def __sub__(self, other):
        x, y = self._coerce(other)
        return CoefficientJet(x - y)

    def __rsub__(self, other):
        x, y = self._coerce(other)
        return CoefficientJet(y - x)

    def __mul__(self, other):
        if not isinstance(other, CoefficientJet):
            return CoefficientJet(self.coefficients * other)
        x, y = self._coerce(other)
        return CoefficientJet(np.convolve(x, y)[: x.size])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, CoefficientJet):
            return CoefficientJet(self.coefficients / other)
        x, y = self._coerce(other)
        return CoefficientJet(_series_divide(x, y))

    def __rtruediv__(self, other):
        x, y = self._coerce(other)
        return CoefficientJet(_series_divide(y, x))

    def compose(self, inner):
        """``self o inner``; ``inner`` must have zero constant term."""
        if not isinstance(inner, CoefficientJet):
            raise TypeError("inner must be a CoefficientJet")
        if inner.coefficients[0] != 0:
            raise DomainError("composition needs an inner jet with zero constant term")
        n = min(len(self), len(inner))
        u = CoefficientJet(inner.coefficients[:n])
        out = CoefficientJet.constant(self.coefficients[n - 1], n - 1)
        for k in range(n - 2, -1, -1):
            out = out * u + self.coefficients[k]
        return out

    def derivative(self):
        """Derivative, padded with a trailing zero so the degree is kept."""
        k = np.arange(1, len(self))
        return CoefficientJet(np.append(self.coefficients[1:] * k, 0.0))

    def integral(self, constant=0.0):
        """Antiderivative, truncated to the same degree."""
        k = np.arange(1, len(self))
        return CoefficientJet(np.concatenate([[constant], self.coefficients[:-1] / k]))

    def truncate(self, degree):
        return CoefficientJet(self.coefficients[: degree + 1])

    def to_json(self):
        return [[float(z.real), float(z.imag)] for z in self.coefficients]


def _series_divide(x, y):
    if y[0] == 0:
        raise DomainError("division by a jet with zero constant term")
    q = np.zeros_like(x)
    for n in range(x.size):
        q[n] = (x[n] - np.dot(q[:n], y[n:0:-1])) / y[0]
    return q


def tan_jet(u):
    """``tan o u`` for a jet with zero constant term.

    Uses ``t' = (1 + t^2) u'`` one coefficient at a time.
    """
    if u.coefficients[0] != 0:
        raise DomainError("tan_jet needs a zero constant term; use the addition formula")
    c = u.coefficients
    n = c.size
    t = np.zeros(n, dtype=complex)
    du = c[1:] * np.arange(1, n)  # coefficients of u'
    for m in range(1, n):
        # coefficient m-1 of (1 + t^2) u'
        sq = np.convolve(t[:m], t[:m])[:m]
        sq[0] += 1.0
        t[m] = np.dot(sq, du[m - 1 :: -1][:m]) / m
    return CoefficientJet(t)


def log1p_jet(v):
    """``log(1 + v)`` for a jet with zero constant term."""
    if v.coefficients[0] != 0:
        raise DomainError("log1p_jet needs a zero constant term")
    return (v.derivative() / (1.0 + v)).integral()


def log_jet(g):
    """Principal ``Log`` of a jet with nonzero constant term."""
    g0 = g.coefficients[0]
    if g0 == 0:
        raise DomainError("Log of a jet needs a nonzero constant term")
    return log1p_jet((g - g0) / g0) + cmath.log(g0)


def _analytic_half(a):
    """Jet of h = a_0/2 + a_1 z + ... + a_N z^N."""
    h = np.array(a, dtype=complex)
    h[0] = h[0] / 2.0
    return CoefficientJet(h)


def forward_map(a, c):
    """Jet of ``b = i tan(pi h / (2c))`` from symbol coefficients a_0..a_N.

    Parameters
    ----------
    a : sequence of complex
        a_0 (real for a self-adjoint problem) followed by a_1..a_N.
    c : float
        Strip height; must exceed ``|Re a_0|`` so ``b`` stays in the disk.

    Returns
    -------
    CoefficientJet
    """
    a = check_complex_vector(a, "a")
    c = check_positive(c, "c")
    if not abs(a[0].real) < c:
        raise DomainError(f"c = {c!r} must exceed |a_0| = {abs(a[0].real)!r}")
    scale = np.pi / (2.0 * c)
    h = _analytic_half(a)
    x0 = scale * h.coefficients[0]
    tau = cmath.tan(x0)
    tu = tan_jet(scale * (h - h.coefficients[0]))
    # tan(x0 + u) = (tau + tan u) / (1 - tau tan u)
    return 1j * ((tu + tau) / (1.0 - tau * tu))


def inverse_map(b, c):
    """Symbol coefficients a_0..a_N from the jet ``b`` (inverse of :func:`forward_map`).

    ``a_0`` is twice the constant term of ``h``; for a jet coming from a
    self-adjoint problem it is real up to rounding.
    """
    if not isinstance(b, CoefficientJet):
        b = CoefficientJet(b)
    c = check_positive(c, "c")
    if not abs(b.coefficients[0]) < 1:
        raise DomainError(f"|b_0| must be < 1, got {abs(b.coefficients[0])!r}")
    h = log_jet((1.0 + b) / (1.0 - b)) * (c / (np.pi * 1j))
    a = h.coefficients.copy()
    a[0] *= 2.0
    return a


def low_order_closed_forms(a, c):
    """b_0..b_3 by the explicit low-order formulas (requires N >= 3).

    The square on ``a_1`` in ``b_2`` and the factor ``2i`` on the
    ``a_1 a_2`` term of ``b_3`` are what the Taylor expansion gives.
    """
    a0, a1, a2, a3 = (complex(x) for x in np.asarray(a, dtype=complex)[:4])
    x = np.pi * a0 / (4.0 * c)
    t = cmath.tan(x)
    sec2 = 1.0 / cmath.cos(x) ** 2
    k = np.pi / (2.0 * c)
    b0 = 1j * t
    b1 = 1j * k * a1 * sec2
    b2 = 1j * k * a2 * sec2 + 1j * k**2 * a1**2 * sec2 * t
    b3 = 1j * k * a3 * sec2 + 2j * k**2 * a1 * a2 * sec2 * t + 1j * k**3 * a1**3 / 3.0 * (2.0 * sec2 * t**2 + sec2**2)
    return np.array([b0, b1, b2, b3])
