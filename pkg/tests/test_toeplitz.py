import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from toeplitz_minimax.exceptions import DomainError
from toeplitz_minimax.toeplitz import (
    HermitianToeplitzSpec,
    build_toeplitz,
    canonical_phase,
    jacobi_svd,
    lower_triangular_toeplitz,
    max_singular_pair,
    operator_norm,
    singular_values,
    top_singular_subspace,
)

finite = st.floats(-10, 10, allow_nan=False)
complex_entries = st.builds(complex, finite, finite)


def power_iteration_norm(m, iters=2000):
    x = np.ones(m.shape[1], dtype=complex)
    for _ in range(iters):
        y = m.conj().T @ (m @ x)
        nrm = np.linalg.norm(y)
        if nrm == 0:
            return 0.0
        x = y / nrm
    return float(np.linalg.norm(m @ x))


def test_build_matches_scipy():
    a = np.array([1, 2 - 1j, 0.5j, 3])
    spec = HermitianToeplitzSpec(a)
    expected = scipy.linalg.toeplitz(a, np.conj(a))
    np.testing.assert_allclose(spec.matrix(), expected)
    np.testing.assert_allclose(spec.matrix(), spec.matrix().conj().T)


def test_build_rejects_even_length():
    with pytest.raises(DomainError):
        build_toeplitz([1, 2])


def test_spec_rejects_complex_diagonal():
    with pytest.raises(DomainError):
        HermitianToeplitzSpec([1 + 1j, 2])


def test_spec_equality_and_hash():
    a = HermitianToeplitzSpec([1.0, 2j])
    b = HermitianToeplitzSpec(np.array([1.0, 2j]))
    assert a == b and hash(a) == hash(b)
    assert a.scaled(2.0) == HermitianToeplitzSpec([2.0, 4j])
    assert HermitianToeplitzSpec([3.0, 0, 1e-16]).is_diagonal()


def test_lower_triangular():
    b = np.array([1, 2, 3j])
    expected = scipy.linalg.toeplitz(b, np.zeros(3))
    np.testing.assert_allclose(lower_triangular_toeplitz(b), expected)


@settings(max_examples=60, deadline=None)
@given(arrays(complex, st.integers(1, 7).map(lambda n: (n, n)), elements=complex_entries))
def test_jacobi_against_lapack(m):
    u, sigma, v = jacobi_svd(m)
    expected = np.linalg.svd(m, compute_uv=False)
    np.testing.assert_allclose(sigma, expected, atol=1e-11 * max(1.0, expected[0]))
    np.testing.assert_allclose(u @ np.diag(sigma) @ v.conj().T, m, atol=1e-10 * max(1.0, expected[0]))
    np.testing.assert_allclose(v.conj().T @ v, np.eye(m.shape[0]), atol=1e-10)


def test_norm_against_power_iteration():
    rng = np.random.default_rng(1)
    for n in range(1, 8):
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        assert operator_norm(m) == pytest.approx(power_iteration_norm(m), rel=1e-9)


def test_zero_matrix():
    assert operator_norm(np.zeros((3, 3))) == 0.0
    np.testing.assert_array_equal(singular_values(np.zeros((2, 2))), [0, 0])


def test_max_singular_pair_residual():
    rng = np.random.default_rng(2)
    m = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    sigma, v = max_singular_pair(m)
    assert np.linalg.norm(v) == pytest.approx(1.0)
    assert np.linalg.norm(m @ v) == pytest.approx(sigma, rel=1e-12)
    first = v[np.flatnonzero(np.abs(v) > 1e-12)[0]]
    assert first.imag == pytest.approx(0.0, abs=1e-14) and first.real > 0


def test_canonical_phase():
    v = np.array([0, 1j, 2])
    out = canonical_phase(v)
    assert out[1] == pytest.approx(1.0)
    np.testing.assert_array_equal(canonical_phase(np.zeros(2)), np.zeros(2))


def test_top_subspace_of_unitary_is_everything():
    q, _ = np.linalg.qr(np.random.default_rng(3).standard_normal((4, 4)))
    sigma, basis = top_singular_subspace(2 * q)
    assert sigma == pytest.approx(2.0)
    assert basis.shape == (4, 4)


def test_top_subspace_multiplicity():
    m = np.diag([3.0, 3.0, 1.0])
    sigma, basis = top_singular_subspace(m)
    assert sigma == 3.0 and basis.shape == (3, 2)
    assert np.allclose(basis[2], 0)
