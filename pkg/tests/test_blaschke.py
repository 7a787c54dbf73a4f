import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toeplitz_minimax.blaschke import RationalInner, blaschke_order, cf_extremal, cf_norm, jet_of
from toeplitz_minimax.exceptions import DomainError, ResidualError


def random_zeros(rng, n, rmax=0.8):
    r = rmax * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, n))


def test_from_zeros_is_inner():
    w = RationalInner.from_zeros([0.3, -0.5j, 0.1 + 0.2j], np.exp(0.7j))
    assert w.order == 3
    assert w.boundary_residual() < 1e-14
    np.testing.assert_allclose(np.sort_complex(w.zeros()), np.sort_complex([0.3, -0.5j, 0.1 + 0.2j]), atol=1e-12)
    with pytest.raises(DomainError):
        RationalInner.from_zeros([1.2])


def test_monomial_and_order():
    w = RationalInner.monomial(4)
    assert blaschke_order(w) == 4
    assert w(0.5) == pytest.approx(0.5**4)
    with pytest.raises(ResidualError):
        blaschke_order(RationalInner([0.5, 0.0], [1.0, 0.0]))


def test_jet_of_geometric():
    w = RationalInner([0.0, 1.0], [1.0, -0.5])  # z / (1 - z/2)
    np.testing.assert_allclose(jet_of(w, 4).coefficients, [0, 1, 0.5, 0.25, 0.125])


def test_cf_norm_matches_lapack():
    b = np.array([0.2, -0.5j, 0.3, 0.1 + 0.1j])
    big_b = np.array([[b[i - j] if i >= j else 0 for j in range(4)] for i in range(4)])
    assert cf_norm(b) == pytest.approx(np.linalg.norm(big_b, 2), rel=1e-12)


def test_cf_extremal_rejects_zero():
    with pytest.raises(DomainError):
        cf_extremal([0.0, 0.0])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.integers(0, 2), st.floats(0.3, 3.0))
def test_extremal_recovers_synthetic_product(seed, n, extra, scale):
    """sigma * w has jet b; CF must hand back sigma and w for N = n + extra."""
    rng = np.random.default_rng(seed)
    w = RationalInner.from_zeros(random_zeros(rng, n), np.exp(2j * np.pi * rng.uniform()))
    big_n = n + extra
    b = scale * jet_of(w, big_n).coefficients
    sigma, got = cf_extremal(b)
    assert sigma == pytest.approx(scale, rel=1e-9)
    assert got.order == n
    theta = np.linspace(0, 2 * np.pi, 257)
    np.testing.assert_allclose(got.on_circle(theta), w.on_circle(theta), atol=1e-7)
    assert got.denominator[0] == pytest.approx(1.0, abs=1e-15)


def test_constant_jet_gives_constant_product():
    sigma, w = cf_extremal([0.5j, 0.0, 0.0])
    assert sigma == pytest.approx(0.5)
    assert w.order == 0
    assert w(0.3) == pytest.approx(1j)
