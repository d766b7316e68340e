"""Tests for pFq evaluation, convergence classes and the two accelerators."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.errors import (
    DivergentError,
    DomainError,
    NonConvergedError,
    NotAlternatingError,
    PoleError,
)
from hypersum.hyperseries import (
    ConvergenceTag,
    HypergeometricSpec,
    classify,
    euler_accelerated_sum,
    eval_series,
    hyp,
    richardson_tail_sum,
    series_terms,
)
from hypersum.specfun import ConjugatePair, gamma_ratio


def test_alternating_harmonic_series_is_log2():
    result = eval_series(HypergeometricSpec((1.0, 1.0), (2.0,), -1.0))
    assert result.value == pytest.approx(math.log(2.0), rel=1e-12)
    assert result.accelerated
    assert result.method == "euler"


@pytest.mark.parametrize(
    "a, b, c",
    [(0.3, 0.7, 1.9), (1.5, 0.5, 2.5), (-0.4, 2.2, 1.3), (1.2, 0.5, 1.5)],
)
def test_2f1_at_minus_one_against_mpmath(a, b, c):
    expected = float(mpmath.hyp2f1(a, b, c, -1))
    value = eval_series(HypergeometricSpec((a, b), (c,), -1.0)).value
    assert value == pytest.approx(expected, rel=1e-10)


def test_conditionally_convergent_series_uses_euler():
    spec = HypergeometricSpec((1.2, 0.5), (1.5,), -1.0)
    result = eval_series(spec)
    assert result.convergence.tag is ConvergenceTag.CONDITIONALLY_CONVERGENT
    assert result.method == "euler"


def test_gauss_sum_at_one_uses_richardson():
    a, b, c = 0.3, 0.4, 1.9
    expected = gamma_ratio([c, c - a - b], [c - a, c - b])
    result = eval_series(HypergeometricSpec((a, b), (c,), 1.0))
    assert result.value == pytest.approx(expected, rel=1e-9)
    assert result.method == "richardson"


def test_basel_sum_needs_acceleration():
    spec = HypergeometricSpec((1.0, 1.0, 1.0), (2.0, 2.0), 1.0)
    assert eval_series(spec).value == pytest.approx(math.pi**2 / 6, rel=1e-10)
    with pytest.raises(NonConvergedError):
        eval_series(spec, accelerate=False)


def test_acceleration_agrees_with_direct_summation():
    spec = HypergeometricSpec((1.0, 0.5, 0.5), (2.5, 2.5), -1.0)
    direct = eval_series(spec, accelerate=False)
    euler = eval_series(spec, accelerate=True)
    assert direct.method == "direct"
    assert euler.method == "euler"
    assert euler.value == pytest.approx(direct.value, abs=1e-11)


def test_conjugate_pair_series_is_real_and_correct():
    spec = HypergeometricSpec((ConjugatePair(0.5, 1.0),), (1.5,), 0.5)
    expected = mpmath.hyp2f1(mpmath.mpc(0.5, 1), mpmath.mpc(0.5, -1), 1.5, 0.5)
    real = float(expected.real)
    assert abs(float(expected.imag)) < 1e-12
    assert eval_series(spec).value == pytest.approx(real, rel=1e-12)
    assert hyp([0.5 + 1j], [1.5], 0.5) == pytest.approx(real, rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(
    st.floats(min_value=-1.9, max_value=1.9),
    st.floats(min_value=-1.9, max_value=1.9),
    st.floats(min_value=0.5, max_value=3.0),
    st.floats(min_value=-0.7, max_value=0.7),
)
def test_inside_disk_against_mpmath(a, b, c, z):
    expected = float(mpmath.hyp2f1(a, b, c, z))
    value = eval_series(HypergeometricSpec((a, b), (c,), z)).value
    assert value == pytest.approx(expected, rel=1e-10, abs=1e-11)


def test_entire_series():
    assert eval_series(HypergeometricSpec((), (), 1.5)).value == pytest.approx(
        math.exp(1.5), rel=1e-13
    )
    one_f_one = eval_series(HypergeometricSpec((1.0,), (2.0,), 2.0))
    assert one_f_one.value == pytest.approx((math.exp(2.0) - 1.0) / 2.0, rel=1e-13)
    assert one_f_one.convergence.tag is ConvergenceTag.ENTIRE_ARGUMENT


def test_zero_argument():
    result = eval_series(HypergeometricSpec((3.0, 4.0), (5.0,), 0.0))
    assert result.value == 1.0
    assert result.terms_used == 1


def test_terminating_series_outside_the_disk():
    result = eval_series(HypergeometricSpec((-3.0, 2.0), (1.0,), 2.0))
    assert result.value == pytest.approx(-7.0, abs=1e-12)
    assert result.terms_used == 4
    assert result.method == "terminating"


def horner(coefficients, z):
    value = 0.0
    for c in reversed(coefficients):
        value = value * z + c
    return value


def test_polynomial_series_match_horner_on_seeded_grid():
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = int(rng.integers(1, 12))
        a, d = (float(x) for x in rng.uniform(0.2, 3.0, 2))
        b, e = (float(x) for x in rng.uniform(0.5, 3.0, 2))
        z = float(rng.uniform(-3.0, 3.0))
        coefficients = [1.0]
        for k in range(m):
            ratio = (k - m) * (a + k) * (d + k) / ((b + k) * (e + k) * (k + 1))
            coefficients.append(coefficients[-1] * ratio)
        scale = sum(abs(c) * abs(z) ** k for k, c in enumerate(coefficients))

        result = eval_series(HypergeometricSpec((-float(m), a, d), (b, e), z))
        assert result.method == "terminating"
        assert result.terms_used <= m + 1
        assert abs(result.value - horner(coefficients, z)) <= 1e-13 * scale


def test_tightening_tolerance_is_self_consistent():
    rng = np.random.default_rng(11)
    for _ in range(50):
        p = int(rng.integers(1, 3))
        q = p + int(rng.integers(0, 2))
        nums = tuple(float(x) for x in rng.uniform(0.2, 3.0, p))
        dens = tuple(float(x) for x in rng.uniform(0.5, 3.0, q))
        spec = HypergeometricSpec(nums, dens, float(rng.uniform(-1.0, 1.0)))
        loose = eval_series(spec, tol=1e-10).value
        tight = eval_series(spec, tol=1e-14).value
        assert tight == pytest.approx(loose, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize(
    "nums, dens, z",
    [
        ((1.0, 1.0), (1.0,), 2.0),
        ((1.0, 1.0), (1.0,), 1.0),
        ((2.0, 1.0), (1.0,), -1.0),
    ],
)
def test_divergent_series_raise(nums, dens, z):
    with pytest.raises(DivergentError):
        eval_series(HypergeometricSpec(nums, dens, z))


@pytest.mark.parametrize(
    "nums, dens, z, tag",
    [
        ((1.0,), (2.0,), 5.0, ConvergenceTag.ENTIRE_ARGUMENT),
        ((1.0, 1.0), (2.0,), 0.5, ConvergenceTag.INSIDE_DISK),
        ((1.0, 1.0), (2.5,), 1.0, ConvergenceTag.ABSOLUTELY_CONVERGENT_ON_CIRCLE),
        ((1.0, 1.0), (1.5,), -1.0, ConvergenceTag.CONDITIONALLY_CONVERGENT),
        ((1.0, 1.0), (1.5,), 1.0, ConvergenceTag.DIVERGENT),
        ((1.0, 1.0), (2.0,), 1.5, ConvergenceTag.DIVERGENT),
    ],
)
def test_classify(nums, dens, z, tag):
    assert classify(HypergeometricSpec(nums, dens, z)).tag is tag


def test_term_cap_raises_with_partial_result():
    with pytest.raises(NonConvergedError) as info:
        eval_series(HypergeometricSpec((1.0, 1.0), (2.0,), 0.999), max_terms=10)
    assert info.value.partial is not None
    assert info.value.partial.terms_used == 10


def test_invalid_tolerance():
    with pytest.raises(DomainError):
        eval_series(HypergeometricSpec((1.0,), (2.0,), 0.5), tol=0.0)


def test_euler_transform_on_alternating_harmonic_terms():
    terms = [(-1.0) ** k / (k + 1) for k in range(60)]
    value, error = euler_accelerated_sum(terms)
    assert value == pytest.approx(math.log(2.0), abs=1e-13)
    assert error < 1e-13
    assert type(value) is float
    assert type(error) is float


def test_euler_transform_adds_head_directly():
    tail = [(-1.0) ** k / (k + 1) for k in range(60)]
    value, _ = euler_accelerated_sum([2.0, 2.0, *tail], start=2)
    assert value == pytest.approx(4.0 + math.log(2.0), abs=1e-13)


def test_euler_transform_rejects_non_alternating_tail():
    with pytest.raises(NotAlternatingError):
        euler_accelerated_sum([1.0, 0.5, 0.25])


def test_richardson_on_basel_partial_sums():
    sizes = [64 * 2**i for i in range(8)]
    k = np.arange(1, sizes[-1] + 1, dtype=float)
    cumulative = np.cumsum(1.0 / k**2)
    partial_sums = [float(cumulative[n - 1]) for n in sizes]
    value, error, _ = richardson_tail_sum(partial_sums, sizes, omega=1.0)
    assert value == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert error < 1e-10


def test_richardson_preconditions():
    with pytest.raises(DomainError):
        richardson_tail_sum([1.0, 2.0, 3.0], [10, 20, 40], omega=0.0)
    with pytest.raises(DomainError):
        richardson_tail_sum([1.0, 2.0, 3.0], [10, 30, 90], omega=1.0)
    with pytest.raises(DomainError):
        richardson_tail_sum([1.0, 2.0], [10, 20], omega=1.0)


def test_counts_and_omega_with_conjugate_pairs():
    spec = HypergeometricSpec((ConjugatePair(0.5, 1.0), 1.0), (2.0, 3.0), -1.0)
    assert spec.p == 3
    assert spec.q == 2
    assert spec.omega == pytest.approx(5.0 - 2.0)


def test_reduced_cancels_equal_parameters():
    spec = HypergeometricSpec((1.0, 2.0, 3.0), (2.0, 4.0), 0.5).reduced()
    assert spec.numerators == (1.0, 3.0)
    assert spec.denominators == (4.0,)
    pair = HypergeometricSpec((ConjugatePair(2.0), 1.0), (2.0, 5.0), 0.5).reduced()
    assert pair.numerators == (2.0, 1.0)
    assert pair.denominators == (5.0,)


def test_invalid_specs():
    with pytest.raises(PoleError):
        HypergeometricSpec((1.0,), (-2.0,), 0.5)
    with pytest.raises(DomainError):
        HypergeometricSpec((1.0, 1.0, 1.0), (2.0,), 0.5)


def test_series_terms_and_str():
    spec = HypergeometricSpec((1.0, 1.0), (2.0,), -1.0)
    assert list(series_terms(spec, 3)) == pytest.approx([1.0, -0.5, 1.0 / 3.0])
    assert str(spec) == "2F1(1, 1; 2; -1)"
