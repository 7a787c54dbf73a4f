import numpy as np
import pytest
from generators import matched_jump_error, random_step
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from toeplitz_minimax.blaschke import RationalInner
from toeplitz_minimax.exceptions import DomainError
from toeplitz_minimax.stepfn import (
    AlternatingStepFunction,
    arc_polynomials,
    blaschke_from_arcs,
    step_from_blaschke,
    toeplitz_of,
)

PI = np.pi


def quad_fourier(psi, m):
    """Fourier coefficient by adaptive quadrature over each arc."""
    total = 0.0
    for a, b, v in zip(psi.jumps, psi.arc_ends(), psi.arc_values()):
        re = quad(lambda t: np.cos(m * t), a, b, limit=200)[0]
        im = quad(lambda t: -np.sin(m * t), a, b, limit=200)[0]
        total += v * complex(re, im)
    return total / (2 * PI)


def test_validation():
    with pytest.raises(DomainError):
        AlternatingStepFunction(1.0, np.array([0.0, 1.0, 2.0]))
    with pytest.raises(DomainError):
        AlternatingStepFunction(1.0, np.array([1.0, 0.5]))
    with pytest.raises(DomainError):
        AlternatingStepFunction(1.0, np.array([0.0, 7.0]))
    with pytest.raises(DomainError):
        AlternatingStepFunction(0.0, np.array([0.0, 1.0]))
    with pytest.raises(DomainError):
        AlternatingStepFunction(1.0, np.array([0.0, 1.0]), 0)


def test_evaluation_and_wrap():
    psi = AlternatingStepFunction(2.0, np.array([1.0, 4.0]), -1)
    assert psi(2.0) == -2.0
    assert psi(5.0) == 2.0
    assert psi(0.5) == 2.0  # before the first jump: last arc wraps
    with pytest.raises(DomainError):
        psi(1.0)
    np.testing.assert_array_equal(psi(np.array([2.0, 5.0])), [-2.0, 2.0])


def test_from_arcs_orientation():
    psi = AlternatingStepFunction.from_arcs(1.0, [2 * PI - 0.5, 0.5], sign_at=0.0)
    assert psi(0.0) == 1.0 and psi(PI) == -1.0


def test_constant():
    psi = AlternatingStepFunction.constant(-3.0)
    assert psi.order == 0 and psi(1.0) == -3.0
    assert psi.fourier(0) == -3.0 and psi.fourier(2) == 0


def test_fourier_against_quadrature():
    rng = np.random.default_rng(7)
    for _ in range(5):
        psi = random_step(rng)
        for m in (-3, 0, 1, 2, 5):
            assert psi.fourier(m) == pytest.approx(quad_fourier(psi, m), abs=1e-10)


def test_fourier_is_conjugate_symmetric():
    psi = random_step(np.random.default_rng(8))
    m = np.arange(1, 6)
    np.testing.assert_allclose(psi.fourier(-m), np.conj(psi.fourier(m)), atol=1e-15)


def test_equal_arcs_order2_compression():
    psi = AlternatingStepFunction(1.0, np.array([0, PI / 2, PI, 3 * PI / 2]), 1)
    a = toeplitz_of(psi, 2).coefficients
    np.testing.assert_allclose(a, [0, 0, 2 / (PI * 1j)], atol=1e-15)


def test_constant_compression_is_diagonal():
    spec = toeplitz_of(AlternatingStepFunction.constant(2.0), 3)
    np.testing.assert_allclose(spec.matrix(), 2 * np.eye(4))


def test_half_circle_gives_z():
    psi = AlternatingStepFunction(1.0, np.array([0.0, PI]), 1)
    w = blaschke_from_arcs(psi)
    z = np.exp(1j * np.linspace(0, 2 * PI, 50))
    np.testing.assert_allclose(w(z), z, atol=1e-14)


def test_labeled_arcs():
    psi = AlternatingStepFunction(1.0, np.array([0.5, 1.0, 2.0, 3.0]), -1)
    alpha, beta = psi.labeled_arcs()
    np.testing.assert_allclose(alpha, [1.0, 3.0])
    np.testing.assert_allclose(beta, [2.0, 0.5 + 2 * PI])


def test_arc_polynomials_degree():
    psi = random_step(np.random.default_rng(9))
    p, q = arc_polynomials(psi)
    assert abs((q - 1j * p)[-1]) > 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_blaschke_round_trip(seed):
    psi = random_step(np.random.default_rng(seed))
    w = blaschke_from_arcs(psi)
    back = step_from_blaschke(w, psi.height)
    assert matched_jump_error(back.jumps, psi.jumps) < 1e-9
    mid = 0.5 * (psi.jumps[0] + psi.jumps[1])
    assert back(mid) == psi(mid)


def test_step_from_blaschke_rejects_constant():
    with pytest.raises(DomainError):
        step_from_blaschke(RationalInner([1j], [1.0]), 1.0)
