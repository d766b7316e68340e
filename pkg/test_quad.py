"""Tests for the hyperbolic integral families: quadrature, series forms and
closed forms agreeing with each other."""

import math

import mpmath
import numpy as np
import pytest
from scipy import integrate as scipy_integrate

from hypersum.errors import DecayError, DomainError, SingularityError
from hypersum.quad import (
    Family,
    IntegralSpec,
    closed_form,
    closed_forms,
    hyp2f1_neg1_integral,
    integrate,
    series_form,
    truncation_point,
)
from hypersum.specfun import ConjugatePair

SERIES_FORM_POINTS = [
    IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.5, 0.3, 1.0, 1.5),
    IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.5, 0.3, 1.0, 1.5),
    IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.5, 0.3, 1.0, 1.2),
    IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.3, 0.5, 1.0, 1.2),
    IntegralSpec(Family.SINH_COSH_OVER_SINH_V, 0.5, 0.3, 1.0, 1.2),
    IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.5, 0.3, 1.0, 1.5),
    IntegralSpec(Family.COSH_COSH_OVER_SINH_V, 0.3, 0.2, 2.0, 0.4),
    IntegralSpec(Family.COS_OVER_COSH_PI, 0.7),
]

CLOSED_FORM_POINTS = [
    IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.3, 0.4, 1.0, 1.0),
    IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.6, 0.9, 1.3, 1.7),
    IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.3, 0.4, 1.0, 1.0),
    IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.7, 0.4, 1.2, 1.6),
    IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.5, 0.5, 1.0, 2.0),
    IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.8, 1.5, 1.5, 2.0),
    IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.3, 0.2, 1.0, 1.0),
    IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.4, 0.0, 1.0, 1.0),
    IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.6, 0.3, 1.1, 1.4),
    IntegralSpec(Family.SINH_COSH_OVER_SINH_V, 0.3, 0.2, 1.0, 1.0),
    IntegralSpec(Family.SINH_COSH_OVER_SINH_V, 0.3, 0.0, 1.0, 1.0),
    IntegralSpec(Family.SINH_COSH_OVER_SINH_V, 0.2, 0.4, 1.5, 0.7),
    IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.3, 0.2, 1.0, 1.0),
    IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.3, 0.0, 1.0, 1.0),
    IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.3, 0.2, 1.0, 1.5),
    IntegralSpec(Family.COSH_COSH_OVER_SINH_V, 0.3, 0.0, 2.0, 0.5),
    IntegralSpec(Family.COSH_COSH_OVER_SINH_V, 0.3, 0.2, 2.0, 0.6),
    IntegralSpec(Family.COS_OVER_COSH_PI, 1.3),
]


def test_sech_squared_integrates_to_one():
    spec = IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.0, 0.0, 1.0, 2.0)
    assert integrate(spec).value == pytest.approx(1.0, abs=1e-10)
    assert closed_form(spec) == pytest.approx(1.0, rel=1e-13)


def test_secant_spot_value():
    spec = IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 1.0, 2.0, 2.0, 2.0)
    expected = math.pi * math.sqrt(2.0) / 8.0
    assert integrate(spec).value == pytest.approx(expected, abs=1e-10)
    assert closed_form(spec, "secant") == pytest.approx(expected, rel=1e-13)


def test_cotangent_spot_value():
    spec = IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.5, 0.5, 1.0, 2.0)
    assert closed_form(spec, "cotangent") == pytest.approx(0.5, abs=1e-15)
    assert integrate(spec).value == pytest.approx(0.5, abs=1e-10)


@pytest.mark.parametrize("a", [0.0, 0.7, 2.5, -1.2])
def test_ramanujan_integral(a):
    spec = IntegralSpec(Family.COS_OVER_COSH_PI, a)
    expected = 0.5 / math.cosh(a)
    assert integrate(spec).value == pytest.approx(expected, abs=1e-10)
    assert closed_form(spec) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize(
    "spec, integrand",
    [
        (
            IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.4, 0.7, 1.0, 1.5),
            lambda x: np.sinh(0.4 * x) * np.sinh(0.7 * x) / np.cosh(x) ** 1.5,
        ),
        (
            IntegralSpec(Family.COSH_COSH_OVER_COSH_V, -0.3, 0.6, 2.0, 1.0),
            lambda x: np.cosh(-0.3 * x) * np.cosh(0.6 * x) / np.cosh(2.0 * x),
        ),
        (
            IntegralSpec(Family.SINH_COSH_OVER_COSH_V, -0.5, 0.2, 1.0, 2.0),
            lambda x: np.sinh(-0.5 * x) * np.cosh(0.2 * x) / np.cosh(x) ** 2,
        ),
    ],
)
def test_quadrature_against_scipy(spec, integrand):
    expected, _ = scipy_integrate.quad(
        integrand, 0.0, 60.0, epsabs=1e-13, epsrel=1e-13, limit=200
    )
    result = integrate(spec)
    assert result.value == pytest.approx(expected, abs=1e-9)
    assert result.abs_error_estimate < 1e-9


def test_origin_singularity_is_integrable():
    spec = IntegralSpec(Family.COSH_COSH_OVER_SINH_V, 0.0, 0.0, 1.0, 0.5)
    expected = float(
        mpmath.quad(lambda x: mpmath.sinh(x) ** -0.5, [0, 1, mpmath.inf])
    )
    assert integrate(spec).value == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("spec", SERIES_FORM_POINTS, ids=str)
def test_series_form_matches_quadrature(spec):
    value, result = series_form(spec).evaluate()
    assert value == pytest.approx(integrate(spec).value, rel=1e-8, abs=1e-10)
    assert result.terms_used > 0


@pytest.mark.parametrize("spec", CLOSED_FORM_POINTS, ids=str)
def test_every_closed_form_matches_quadrature(spec):
    expected = integrate(spec).value
    forms = closed_forms(spec)
    assert forms
    for name, value in forms.items():
        assert value == pytest.approx(expected, rel=1e-8, abs=1e-10), name


def test_series_form_uses_conjugate_pair_when_b_dominates():
    spec = IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.3, 0.5, 1.0, 1.2)
    params = series_form(spec).spec.numerators + series_form(spec).spec.denominators
    assert any(isinstance(x, ConjugatePair) for x in params)


def test_series_form_argument_follows_denominator():
    over_cosh = series_form(IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.5, 0.3, 1, 1))
    over_sinh = series_form(IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.5, 0.3, 1, 1))
    assert over_cosh.spec.z == -1.0
    assert over_sinh.spec.z == 1.0
    assert over_cosh.spec.p == 6
    assert over_cosh.spec.q == 5


def test_unit_v_sinh_sinh_over_sinh_uses_digamma_limit():
    spec = IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 0.3, 0.4, 1.0, 1.0)
    forms = closed_forms(spec)
    assert forms["gamma_cos_weighted"] == pytest.approx(forms["digamma_limit"])


def test_hyp2f1_neg1_integral():
    assert hyp2f1_neg1_integral(1.0, 1.0) == pytest.approx(math.log(2.0), rel=1e-13)
    for a, b in [(0.5, 0.3), (1.7, 2.5), (-0.4, 0.8)]:
        expected = float(mpmath.hyp2f1(a, b, 1 + b, -1))
        assert hyp2f1_neg1_integral(a, b) == pytest.approx(expected, rel=1e-11)
    with pytest.raises(DomainError):
        hyp2f1_neg1_integral(1.0, 0.0)


def test_slow_decay_raises():
    with pytest.raises(DecayError):
        integrate(IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 1.0, 1.0, 1.0, 2.0))
    with pytest.raises(DecayError):
        series_form(IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 2.0, 1.0, 1.0, 2.5))


def test_origin_divergence_raises():
    with pytest.raises(SingularityError):
        integrate(IntegralSpec(Family.SINH_SINH_OVER_SINH_V, 1.0, 1.0, 4.0, 3.5))


def test_nonpositive_denominator_scale_raises():
    with pytest.raises(DomainError):
        integrate(IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.1, 0.1, 0.0, 1.0))


def test_vanishing_integrand():
    spec = IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.0, 1.0, 2.0, 1.0)
    assert spec.vanishes
    assert integrate(spec).value == 0.0
    assert all(value == 0.0 for value in closed_forms(spec).values())


def test_inapplicable_closed_form_raises():
    spec = IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.3, 0.4, 1.0, 1.5)
    with pytest.raises(DomainError):
        closed_form(spec, "secant")


def test_odd_sign_of_sinh_scale():
    positive = IntegralSpec(Family.SINH_COSH_OVER_COSH_V, 0.4, 0.2, 1.0, 1.5)
    negative = IntegralSpec(Family.SINH_COSH_OVER_COSH_V, -0.4, 0.2, 1.0, 1.5)
    assert integrate(negative).value == pytest.approx(-integrate(positive).value)


def test_truncation_point_grows_as_tolerance_shrinks():
    spec = IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.3, 0.2, 1.0, 1.0)
    assert truncation_point(spec, 1e-12) > truncation_point(spec, 1e-6)
    assert integrate(spec, 1e-8).truncation_point == truncation_point(spec, 1e-8)


def test_family_parses_from_name():
    spec = IntegralSpec("CoshCoshOverSinhV", 0.1, 0.2, 1.0, 0.5)
    assert spec.family is Family.COSH_COSH_OVER_SINH_V
    assert spec.family.over_sinh
    assert spec.origin_exponent == -0.5
    with pytest.raises(ValueError):
        IntegralSpec("TanhOverCosh", 1.0)


@pytest.mark.parametrize(
    "family", [Family.SINH_SINH_OVER_COSH_V, Family.COSH_COSH_OVER_COSH_V]
)
@pytest.mark.parametrize("a, b", [(0.3, 0.7), (-0.4, 0.9), (1.1, 0.2)])
def test_symmetric_families_swap_scales(family, a, b):
    forward = integrate(IntegralSpec(family, a, b, 1.5, 1.6)).value
    swapped = integrate(IntegralSpec(family, b, a, 1.5, 1.6)).value
    assert swapped == pytest.approx(forward, rel=1e-12)


@pytest.mark.parametrize(
    "spec",
    [
        IntegralSpec(Family.SINH_SINH_OVER_COSH_V, 0.4, 0.7, 1.0, 1.5),
        IntegralSpec(Family.SINH_COSH_OVER_SINH_V, 0.5, 0.3, 1.0, 1.2),
        IntegralSpec(Family.COSH_COSH_OVER_COSH_V, 0.3, 0.2, 1.0, 1.0),
        IntegralSpec(Family.COS_OVER_COSH_PI, 0.7),
    ],
    ids=str,
)
def test_doubling_truncation_stays_within_error_estimate(spec):
    result = integrate(spec)
    extended = integrate(spec, truncation=2.0 * result.truncation_point)
    assert extended.truncation_point == 2.0 * result.truncation_point
    assert abs(extended.value - result.value) <= result.abs_error_estimate
