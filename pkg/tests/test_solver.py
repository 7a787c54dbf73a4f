import numpy as np
import pytest
from generators import matched_jump_error, order_one_step, random_spec, random_step
from hypothesis import given, settings
from hypothesis import strategies as st

from toeplitz_minimax.exceptions import DomainError
from toeplitz_minimax.solver import certificate, norm_at, solve_min
from toeplitz_minimax.stepfn import toeplitz_of
from toeplitz_minimax.toeplitz import HermitianToeplitzSpec

PI = np.pi


def test_half_circle_spec():
    res = solve_min([0.0, 2 / (PI * 1j)])
    assert res.c_min == pytest.approx(1.0, abs=1e-12)
    assert res.norm_ratio == pytest.approx(PI / 2, abs=1e-9)
    assert res.order == 1


def test_diagonal_spec():
    res = solve_min([-0.7, 0.0, 0.0])
    assert res.order == 0 and res.c_min == pytest.approx(0.7)
    assert res.step(1.0) == pytest.approx(-0.7)
    assert res.norm_ratio == 1.0


def test_zero_spec():
    with pytest.raises(DomainError, match="zero matrix"):
        solve_min([0.0, 0.0])


def test_norm_at_straddles_one():
    spec = toeplitz_of(order_one_step(2.0), 2)
    res = solve_min(spec)
    assert norm_at(res.c_min * 0.9, spec) > 1 > norm_at(res.c_min * 1.1, spec)


def test_extension_matches_closed_form():
    psi = order_one_step(2.0)
    res = solve_min(toeplitz_of(psi, 1))
    for m in (2, 3):
        assert res.step.fourier(m) == pytest.approx(psi.fourier(m), abs=1e-9)


def test_lower_order_minimizer():
    """An order-1 step function seen through a 4x4 compression."""
    psi = order_one_step(1.3)
    res = solve_min(toeplitz_of(psi, 3))
    assert res.order == 1
    assert matched_jump_error(res.step.jumps, psi.jumps) < 1e-8


def test_certificate_and_json():
    spec = HermitianToeplitzSpec([0.1, 0.3 - 0.2j, 0.05j])
    res = solve_min(spec)
    cert = certificate(res, spec)
    assert cert["ok"] and cert["ratio"] > 1
    doc = res.to_json()
    assert set(doc) == {"c_min", "order", "ratio", "omega", "step", "residuals"}


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_spec_ratio_bounds(seed):
    """1 <= c_A / ||A|| <= c_N, and the minimizer reproduces the entries."""
    spec = random_spec(np.random.default_rng(seed), max_n=3)
    res = solve_min(spec)
    assert res.fourier_residual < 1e-7
    assert 1.0 <= res.norm_ratio < 2.0
    assert res.order <= spec.order_n


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_step_round_trip(seed):
    psi = random_step(np.random.default_rng(seed))
    res = solve_min(toeplitz_of(psi, psi.order))
    assert res.c_min == pytest.approx(psi.height, rel=1e-9)
    assert matched_jump_error(res.step.jumps, psi.jumps) < 1e-7
