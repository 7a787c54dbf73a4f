"""Recovering step functions and arc sets from finitely many Fourier coefficients.

An alternating step function of order at most N is the unique minimum-norm
symbol of its own (N+1)-square Toeplitz compression, so solving the minimum
problem for ``psi^(0..N)`` recovers ``psi`` and with it every higher
coefficient. Applied to ``2 chi_E - 1`` this reconstructs a union ``E`` of at
most N disjoint closed arcs from ``chi_E^(0..N)``.
"""

import numpy as np

from .exceptions import DomainError, ResidualError
from .solver import FOURIER_ACCEPT, solve_min
from .toeplitz import HermitianToeplitzSpec
from .validation import check_complex_vector, check_order

ARC_GAP_TOL = 1e-9


def extend_coefficients(a, m, accept=FOURIER_ACCEPT):
    """Fourier coefficient ``m`` of the order-<=N step function with coefficients ``a``.

    Raises ``ResidualError`` when no such step function reproduces ``a``.
    """
    spec = HermitianToeplitzSpec(a)
    m = int(m)
    if abs(m) <= spec.order_n:
        raise DomainError(f"m must exceed N = {spec.order_n} in absolute value, got {m}")
    result = solve_min(spec, accept=accept)
    return complex(result.step.fourier(m))


def recover_step(a, accept=FOURIER_ACCEPT):
    """The step function behind ``a`` together with the solver's result."""
    result = solve_min(HermitianToeplitzSpec(a), accept=accept)
    return result.step, result


def indicator_moments(arcs, n):
    """``chi_E^(0..n)`` for ``E`` the union of the given ``(start, end)`` arcs."""
    out = np.zeros(n + 1, dtype=complex)
    m = np.arange(1, n + 1)
    for start, end in arcs:
        out[0] += (end - start) / (2 * np.pi)
        out[1:] += (np.exp(-1j * m * start) - np.exp(-1j * m * end)) / (2j * np.pi * m)
    return out


def recover_set(moments, n=None, height_tol=1e-7, accept=FOURIER_ACCEPT):
    """Arcs of ``E`` from its indicator moments ``chi_E^(0..N)``.

    Parameters
    ----------
    moments : sequence of complex, length N+1
    n : int, optional
        N; inferred from ``len(moments)`` if omitted.

    Returns
    -------
    list of (start, end)
        Start in ``[0, 2 pi)`` and ``start < end < start + 2 pi``, sorted by start.
    """
    chi = check_complex_vector(moments, "moments")
    if n is None:
        n = chi.size - 1
    n = check_order(n, "n", minimum=1)
    if chi.size != n + 1:
        raise DomainError(f"expected {n + 1} moments, got {chi.size}")
    a = 2.0 * chi
    a[0] -= 1.0
    if abs(a[0].imag) > 1e-12:
        raise ResidualError("chi_E^(0) must be real", abs(a[0].imag))
    a[0] = a[0].real
    if np.all(np.abs(a[1:]) < 1e-14):
        raise DomainError("moments describe the empty set or the full circle (order 0)")
    result = solve_min(HermitianToeplitzSpec(a), accept=accept)
    if abs(result.c_min - 1.0) > height_tol:
        raise ResidualError("moments are not those of a union of at most N arcs", abs(result.c_min - 1.0))
    arcs = result.step.positive_arcs()
    gaps = np.diff(np.append(result.step.jumps, result.step.jumps[0] + 2 * np.pi))
    if np.min(gaps) <= ARC_GAP_TOL:
        raise ResidualError("recovered arcs are not disjoint", float(np.min(gaps)))
    return sorted(arcs)
