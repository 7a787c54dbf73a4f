import numpy as np
import pytest
from generators import arc_set_error, order_one_step, random_arcs

from toeplitz_minimax.exceptions import DomainError, ResidualError
from toeplitz_minimax.moments import extend_coefficients, indicator_moments, recover_set, recover_step
from toeplitz_minimax.stepfn import AlternatingStepFunction, toeplitz_of

PI = np.pi


def test_indicator_moments_of_half_circle():
    chi = indicator_moments([(0.0, PI)], 2)
    np.testing.assert_allclose(chi, [0.5, 1 / (PI * 1j), 0], atol=1e-15)


def test_recover_half_circle():
    arcs = recover_set(indicator_moments([(0.0, PI)], 1))
    assert arc_set_error(arcs, [(0.0, PI)]) < 1e-9


def test_recover_fewer_arcs_than_n():
    target = [(0.4, 1.5), (3.0, 4.2)]
    assert arc_set_error(recover_set(indicator_moments(target, 3)), target) < 1e-7


def test_recover_rejects_full_circle():
    with pytest.raises(DomainError):
        recover_set([1.0, 0.0, 0.0])


def test_recover_rejects_non_indicator():
    # moments of 0.5 * chi: not the moments of any set
    with pytest.raises(ResidualError):
        recover_set(0.5 * indicator_moments([(0.3, 2.0)], 2))


def test_extend_z2_step():
    psi = AlternatingStepFunction(1.0, np.array([0, PI / 2, PI, 3 * PI / 2]), 1)
    assert extend_coefficients(toeplitz_of(psi, 2).coefficients, 6) == pytest.approx(2 / (3 * PI * 1j), abs=1e-9)
    with pytest.raises(DomainError):
        extend_coefficients([0.0, 1.0], 1)


def test_recover_step_order_one():
    psi = order_one_step(2.5)
    step, res = recover_step(toeplitz_of(psi, 1).coefficients)
    assert step.fourier(3) == pytest.approx(psi.fourier(3), abs=1e-9)


def test_random_sets():
    rng = np.random.default_rng(11)
    for _ in range(5):
        arcs = random_arcs(rng)
        assert arc_set_error(recover_set(indicator_moments(arcs, 3)), arcs) < 1e-6
