"""Adaptive integration engine basics."""

import math

import numpy as np
import pytest

from qlaplace import DomainError, QuadratureConfig, QuadratureError, integrate, integrate_half_line
from qlaplace.quadrature import dyadic_breakpoints


def test_polynomial_exact():
    assert integrate(lambda t: 3.0 * t**2, 0.0, 2.0) == pytest.approx(8.0, rel=1e-13)


def test_oscillatory():
    val = integrate(np.sin, 0.0, 10.0)
    assert val == pytest.approx(1.0 - math.cos(10.0), rel=1e-11)


def test_kink():
    val = integrate(lambda t: np.abs(t - 0.3), 0.0, 1.0)
    exact = 0.3**2 / 2 + 0.7**2 / 2
    assert val == pytest.approx(exact, rel=1e-10)


def test_small_scale_feature_with_breakpoints():
    # sharp bump at 1e-6 scale inside a unit interval
    val = integrate(
        lambda t: np.exp(-t / 1e-6) / 1e-6,
        0.0,
        1.0,
        breakpoints=dyadic_breakpoints(0.0, 1.0),
    )
    assert val == pytest.approx(1.0, rel=1e-9)


def test_half_line():
    assert integrate_half_line(lambda t: np.exp(-t)) == pytest.approx(1.0, rel=1e-11)
    assert integrate_half_line(lambda t: np.exp(-t / 7.0), scale=7.0) == pytest.approx(7.0, rel=1e-11)


def test_scalar_only_callable_fallback():
    val = integrate(lambda t: float(t) ** 2, 0.0, 1.0)
    assert val == pytest.approx(1.0 / 3.0, rel=1e-12)


def test_empty_and_reversed_interval():
    assert integrate(lambda t: t, 1.0, 1.0) == 0.0
    with pytest.raises(DomainError):
        integrate(lambda t: t, 2.0, 1.0)


def test_non_finite_sample():
    with pytest.raises(QuadratureError):
        integrate(lambda t: np.where(t < 0.5, np.inf, 1.0), 0.0, 1.0)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_unreachable_tolerance_near_pole():
    with pytest.raises(QuadratureError):
        integrate(lambda t: 1.0 / (t - 0.5342817), 0.0, 1.0)


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(rel_tol=-1.0)
    with pytest.raises(DomainError):
        QuadratureConfig(max_depth=0)
