import numpy as np
import pytest

from dsegap import ParameterError, gauss_chebyshev2, gauss_legendre


def test_two_point_rule_is_analytic():
    rule = gauss_legendre(2, -1.0, 1.0)
    assert rule.nodes == pytest.approx([-0.5773502691896258, 0.5773502691896258], abs=1e-15)
    assert rule.weights == pytest.approx([1.0, 1.0], abs=1e-15)


def test_one_point_rule_is_midpoint():
    rule = gauss_legendre(1, 0.0, 2.0)
    assert rule.nodes == pytest.approx([1.0], abs=1e-15)
    assert rule.weights == pytest.approx([2.0], abs=1e-15)


def test_five_point_rule_integrates_x8_exactly():
    # oracle: closed-form monomial integral over [-1, 1] is 2/9
    rule = gauss_legendre(5, -1.0, 1.0)
    assert rule.integrate(rule.nodes**8) == pytest.approx(2.0 / 9.0, rel=1e-12)


@pytest.mark.parametrize("order", [1, 2, 3, 5, 8, 13, 40])
def test_exactness_up_to_degree_2m_minus_1(order):
    rng = np.random.default_rng(order)
    a, b = -0.7, 1.9
    rule = gauss_legendre(order, a, b)
    for _ in range(5):
        deg = int(rng.integers(0, 2 * order))
        coeffs = rng.uniform(-1.0, 1.0, size=deg + 1)
        vals = np.polynomial.polynomial.polyval(rule.nodes, coeffs)
        exact = sum(c * (b ** (k + 1) - a ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs))
        scale = max(1.0, abs(exact))
        assert abs(rule.integrate(vals) - exact) / scale < 1e-10


@pytest.mark.parametrize("order", [2, 7, 50, 150])
def test_weight_sum_and_node_bounds(order):
    a, b = 0.25, 5.5
    rule = gauss_legendre(order, a, b)
    assert np.sum(rule.weights) == pytest.approx(b - a, rel=1e-12)
    assert np.all(rule.weights > 0)
    assert np.all(np.diff(rule.nodes) > 0)
    assert rule.nodes[0] > a and rule.nodes[-1] < b


@pytest.mark.parametrize("order", [1, 2, 10, 64, 200])
def test_matches_numpy_leggauss(order):
    # independent route: companion-matrix eigenvalue implementation
    ours = gauss_legendre(order, -1.0, 1.0)
    ref_x, ref_w = np.polynomial.legendre.leggauss(order)
    assert np.max(np.abs(ours.nodes - ref_x)) < 1e-13
    assert np.max(np.abs(ours.weights - ref_w)) < 1e-13


def test_gauss_legendre_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        gauss_legendre(0, -1.0, 1.0)
    with pytest.raises(ParameterError):
        gauss_legendre(4, 1.0, 1.0)
    with pytest.raises(ParameterError):
        gauss_legendre(4, 2.0, -2.0)


def test_chebyshev2_order_one():
    rule = gauss_chebyshev2(1)
    assert rule.nodes == pytest.approx([0.0], abs=1e-15)
    assert rule.weights == pytest.approx([np.pi / 2.0], rel=1e-15)


def test_chebyshev2_integrates_semicircle_weight():
    # oracle: int_{-1}^{1} sqrt(1-z^2) dz = pi/2
    rule = gauss_chebyshev2(32)
    assert rule.integrate(np.ones(32)) == pytest.approx(np.pi / 2.0, rel=1e-12)
    # odd integrand vanishes by symmetry
    assert abs(rule.integrate(rule.nodes)) < 1e-14


@pytest.mark.parametrize("order", [2, 5, 16, 33])
def test_chebyshev2_polynomial_moments(order):
    # int z^2 sqrt(1-z^2) = pi/8, int z^4 sqrt(1-z^2) = pi/16
    rule = gauss_chebyshev2(order)
    assert rule.integrate(rule.nodes**2) == pytest.approx(np.pi / 8.0, rel=1e-12)
    if 2 * order - 1 >= 4:
        assert rule.integrate(rule.nodes**4) == pytest.approx(np.pi / 16.0, rel=1e-12)
    assert np.all(rule.nodes > -1.0) and np.all(rule.nodes < 1.0)
    assert np.all(np.diff(rule.nodes) > 0)


def test_chebyshev2_rejects_bad_order():
    with pytest.raises(ParameterError):
        gauss_chebyshev2(0)
