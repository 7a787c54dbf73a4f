"""Input validation helpers shared by the public API and the estimator."""

import numbers

import numpy as np

from .exceptions import DomainError


def check_complex_vector(values, name="values", min_length=1):
    """Return ``values`` as a 1-D complex array, rejecting NaN/inf."""
    arr = np.asarray(values, dtype=complex)
    if arr.ndim != 1:
        raise DomainError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size < min_length:
        raise DomainError(f"{name} needs at least {min_length} entries, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr


def check_square(m, name="matrix"):
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DomainError(f"{name} must be square, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise DomainError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr


def check_positive(value, name="value"):
    if not isinstance(value, numbers.Real) or not np.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be a positive finite real, got {value!r}")
    return float(value)


def check_order(n, name="n", minimum=0):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {n!r}")
    return int(n)


def check_hermitian_coefficients(coefficients, imag_tol=1e-12):
    """Validate one-sided coefficients a_0..a_N of a self-adjoint Toeplitz matrix.

    The diagonal entry must be real up to ``imag_tol``; it is returned with the
    imaginary part dropped.
    """
    a = check_complex_vector(coefficients, "coefficients")
    if abs(a[0].imag) > imag_tol * max(1.0, abs(a[0])):
        raise DomainError(f"a_0 must be real for a self-adjoint matrix, got {a[0]!r}")
    a = a.copy()
    a[0] = a[0].real
    return a


def as_angles(values, name="angles"):
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise DomainError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr
