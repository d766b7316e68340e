import logging
import math

import numpy as np
import pytest

from hypersum.errors import SingularityError
from hypersum.kronrod import (
    GAUSS_WEIGHTS,
    KRONROD_WEIGHTS,
    NODES,
    integrate_interval,
    panel,
)


def test_rule_weights_integrate_constants():
    assert KRONROD_WEIGHTS.sum() == pytest.approx(2.0, rel=1e-15)
    assert GAUSS_WEIGHTS.sum() == pytest.approx(2.0, rel=1e-15)
    assert np.all(np.diff(NODES) > 0)


def test_single_panel_is_exact_for_high_degree_polynomials():
    value, _ = panel(lambda x: x**20, 0.0, 1.0)
    assert value == pytest.approx(1.0 / 21.0, rel=1e-14)


def test_sine_over_half_period():
    result = integrate_interval(np.sin, 0.0, math.pi, 1e-12)
    assert result.value == pytest.approx(2.0, abs=1e-12)
    assert result.evaluations % 15 == 0


def test_reversed_limits_flip_sign():
    forward = integrate_interval(np.exp, 0.0, 1.0, 1e-12).value
    backward = integrate_interval(np.exp, 1.0, 0.0, 1e-12).value
    assert backward == pytest.approx(-forward, rel=1e-14)
    assert forward == pytest.approx(math.e - 1.0, rel=1e-13)


def test_empty_interval():
    assert integrate_interval(np.exp, 2.0, 2.0, 1e-10).value == 0.0


def test_peaked_integrand_is_refined():
    result = integrate_interval(lambda x: 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-10)
    assert result.value == pytest.approx(2.0 * 100.0 * math.atan(100.0), rel=1e-11)
    assert result.panels > 1


def test_initial_panels_on_oscillatory_integrand():
    result = integrate_interval(
        lambda x: np.cos(40.0 * x), 0.0, 10.0, 1e-12, initial_panels=40
    )
    assert result.value == pytest.approx(math.sin(400.0) / 40.0, abs=1e-12)


def test_non_finite_integrand_raises():
    with pytest.raises(SingularityError):
        integrate_interval(lambda x: np.full_like(x, np.nan), 0.0, 1.0, 1e-8)


def test_roundoff_floor_stops_refinement_quietly(caplog):
    # x^0.05 has an unbounded derivative at 0
    with caplog.at_level(logging.WARNING, logger="hypersum.kronrod"):
        result = integrate_interval(lambda x: x**0.05, 0.0, 1.0, 1e-13)
    assert result.value == pytest.approx(1.0 / 1.05, rel=1e-12)
    assert not caplog.records


def test_unresolved_singularity_still_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="hypersum.kronrod"):
        integrate_interval(lambda x: x**-0.9, 0.0, 1.0, 1e-12, max_depth=20)
    assert "maximum depth" in caplog.text
