"""Toeplitz matrix assembly, operator norms and maximizing vectors.

Matrices here are tiny (at most a few dozen rows), so the singular value
decomposition is a plain one-sided Jacobi sweep, which is accurate to
working precision at these sizes.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceError, DomainError
from .validation import check_complex_vector, check_hermitian_coefficients, check_square

LINALG_TOL = 1e-12
MAX_SWEEPS = 60


@dataclass(frozen=True)
class HermitianToeplitzSpec:
    """Self-adjoint Toeplitz matrix given by its first column a_0..a_N.

    The matrix is ``A[j, k] = a_{j-k}`` with ``a_{-n} = conj(a_n)``.
    """

    coefficients: np.ndarray

    def __post_init__(self):
        a = check_hermitian_coefficients(self.coefficients)
        a.setflags(write=False)
        object.__setattr__(self, "coefficients", a)

    @property
    def order_n(self):
        return self.coefficients.size - 1

    def two_sided(self):
        """Coefficients a_{-N}..a_N."""
        a = self.coefficients
        return np.concatenate([np.conj(a[:0:-1]), a])

    def matrix(self):
        return build_toeplitz(self.two_sided())

    def is_diagonal(self, threshold=1e-14):
        return bool(np.all(np.abs(self.coefficients[1:]) < threshold))

    def scaled(self, t):
        return HermitianToeplitzSpec(t * self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, HermitianToeplitzSpec):
            return NotImplemented
        return np.array_equal(self.coefficients, other.coefficients)

    def __hash__(self):
        return hash(self.coefficients.tobytes())


def build_toeplitz(two_sided):
    """Assemble the Toeplitz matrix with entries ``a_{j-k}``.

    Parameters
    ----------
    two_sided : sequence of complex, length 2N+1
        Coefficients ordered a_{-N}, ..., a_0, ..., a_N.

    Returns
    -------
    ndarray, shape (N+1, N+1)
    """
    a = check_complex_vector(two_sided, "two_sided")
    if a.size % 2 == 0:
        raise DomainError(f"two-sided coefficient list must have odd length, got {a.size}")
    n = a.size // 2
    j = np.arange(n + 1)
    # a_{j-k} sits at offset n + j - k in the two-sided list
    return a[n + j[:, None] - j[None, :]]


def lower_triangular_toeplitz(first_column):
    """Lower-triangular Toeplitz matrix whose first column is ``first_column``."""
    b = check_complex_vector(first_column, "first_column")
    n = b.size
    j = np.arange(n)
    diff = j[:, None] - j[None, :]
    out = np.zeros((n, n), dtype=complex)
    mask = diff >= 0
    out[mask] = b[diff[mask]]
    return out


def jacobi_svd(m, tol=LINALG_TOL, max_sweeps=MAX_SWEEPS):
    """One-sided (Hestenes) Jacobi SVD of a square complex matrix.

    Returns ``(u, sigma, v)`` with ``m = u @ diag(sigma) @ v.conj().T`` and
    ``sigma`` sorted in decreasing order. Columns of ``u`` belonging to zero
    singular values are left as zero vectors.
    """
    a = check_square(m)
    n = a.shape[1]
    # rows 0..n-1 carry the working matrix, rows n..2n-1 accumulate v
    w = np.vstack([a, np.eye(n, dtype=complex)])
    off = np.inf
    for _ in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                ap, aq = w[:n, p], w[:n, q]
                alpha = np.vdot(ap, ap).real
                beta = np.vdot(aq, aq).real
                gamma = np.vdot(ap, aq)
                g = abs(gamma)
                if g == 0.0:
                    continue
                scale = np.sqrt(alpha * beta)
                off = max(off, g / scale)
                if g <= tol * scale:
                    continue
                phase = gamma / g
                zeta = (beta - alpha) / (2.0 * g)
                t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                # rotate (p, q * conj(phase)) as a real pair, then restore the phase
                wp = w[:, p].copy()
                wq = w[:, q] * np.conj(phase)
                w[:, p] = c * wp - s * wq
                w[:, q] = (s * wp + c * wq) * phase
        if off <= tol:
            break
    else:
        raise ConvergenceError("Jacobi SVD did not converge", off)
    a, v = w[:n], w[n:]
    sigma = np.linalg.norm(a, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    a = a[:, order]
    v = v[:, order]
    u = np.zeros_like(a)
    nz = sigma > 0
    u[:, nz] = a[:, nz] / sigma[nz]
    return u, sigma, v


def singular_values(m, tol=LINALG_TOL):
    return jacobi_svd(m, tol=tol)[1]


def operator_norm(m, tol=LINALG_TOL):
    """Largest singular value of a square matrix."""
    return float(singular_values(m, tol=tol)[0])


def canonical_phase(vec, threshold=1e-12):
    """Rotate ``vec`` so its first entry above ``threshold`` is real positive."""
    vec = np.asarray(vec, dtype=complex)
    scale = np.max(np.abs(vec)) if vec.size else 0.0
    if scale == 0:
        return vec
    idx = np.flatnonzero(np.abs(vec) > threshold * scale)[0]
    return vec * (abs(vec[idx]) / vec[idx])


def max_singular_pair(m, tol=LINALG_TOL):
    """Largest singular value and a unit right singular vector.

    When the top singular value is repeated any maximizing vector is valid;
    the one returned is the first Jacobi column, rotated by
    :func:`canonical_phase` so the result is reproducible.

    Returns
    -------
    sigma : float
    v : ndarray of complex, unit 2-norm
    """
    m = check_square(m)
    _, sigma, v = jacobi_svd(m, tol=tol)
    top = canonical_phase(v[:, 0])
    top = top / np.linalg.norm(top)
    residual = abs(np.linalg.norm(m @ top) - sigma[0])
    if residual > max(1e3 * tol, 1e-9) * max(1.0, sigma[0]):
        raise ConvergenceError("maximizing vector failed its residual check", residual)
    return float(sigma[0]), top


def top_singular_subspace(m, cluster_tol=1e-7, tol=LINALG_TOL):
    """Right singular vectors whose singular values are within
    ``cluster_tol * sigma_max`` of the largest one.

    Returns ``(sigma_max, basis)`` with ``basis`` of shape (n, d).
    """
    _, sigma, v = jacobi_svd(m, tol=tol)
    if sigma[0] == 0:
        return 0.0, v
    d = int(np.sum(sigma >= sigma[0] * (1.0 - cluster_tol)))
    return float(sigma[0]), v[:, :d]
