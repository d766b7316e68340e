import dataclasses
import math

import pytest

from hypersum.config import load_boxes
from hypersum.errors import DomainError
from hypersum.harness import sample_domain
from hypersum.identities import (
    EvalContext,
    Kind,
    ParamPoint,
    Status,
    beta_derivative,
    check,
    get,
    registry,
    select,
)
from hypersum.specfun import lowercase_beta_derivative


def test_registry_size_and_unique_ids():
    ids = [identity.id for identity in registry()]
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)


def test_registry_covers_every_kind():
    kinds = {identity.kind for identity in registry()}
    assert kinds == set(Kind)


def test_every_identity_has_a_sampling_box():
    boxes = load_boxes()
    for identity in registry():
        box = boxes[identity.id]
        assert set(identity.params) <= set(box), identity.id


def test_select_by_glob():
    theorems = select("thm*")
    assert len(theorems) == 11
    assert [i.id for i in theorems][:2] == ["thm1_6F5_neg1", "thm2_6F5_pos1"]
    assert select(None) == list(registry())
    assert select("no_such_identity*") == []


def test_get_unknown_identity():
    with pytest.raises(DomainError):
        get("no_such_identity")


def test_thm10_spot_value():
    record = check(get("thm10_3F2_neg1_sec_beta"), ParamPoint(a=1.0, b=2.0))
    assert record.passed
    assert record.integral is not None
    assert record.integral_residual < 1e-6


def test_thm10_closed_forms_agree():
    ctx = EvalContext()
    for a, b in [(1.0, 2.0), (0.3, 1.1), (-0.7, 0.9), (1.8, 1.9)]:
        p = ParamPoint(a=a, b=b)
        sec_beta = get("thm10_3F2_neg1_sec_beta").rhs(p, ctx)
        digamma = get("thm10_3F2_neg1_digamma").rhs(p, ctx)
        assert sec_beta == pytest.approx(digamma, rel=1e-10, abs=1e-12)


def test_thm10_closed_forms_agree_on_seeded_points():
    ctx = EvalContext()
    sec_beta = get("thm10_3F2_neg1_sec_beta")
    digamma = get("thm10_3F2_neg1_digamma")
    points = sample_domain(sec_beta, 2024, 100)
    assert len(points) == 100
    for p in points:
        assert sec_beta.rhs(p, ctx) == pytest.approx(
            digamma.rhs(p, ctx), rel=1e-10, abs=1e-12
        )


def test_well_poised_4f3_specialises_to_3f2():
    # d = (1+a)/2 cancels a numerator against a denominator, leaving c = b
    ctx = EvalContext()
    three = get("kummer_type_3f2_neg1")
    four = get("classical_4f3_neg1")
    for p in sample_domain(three, 42, 25):
        q = ParamPoint(a=p.a, c=p.b, d=(1.0 + p.a) / 2.0)
        assert four.rhs(q, ctx) == pytest.approx(three.rhs(p, ctx), rel=1e-12)
        assert four.lhs(q, ctx).value == pytest.approx(
            three.lhs(p, ctx).value, rel=1e-9, abs=1e-12
        )


@pytest.mark.parametrize("identity_id", ["thm1_6F5_neg1", "thm2_6F5_pos1"])
def test_theorems_are_continuous_through_equal_scales(identity_id):
    identity = get(identity_id)
    below, above = (
        check(identity, ParamPoint(a=0.4, b=0.4 * (1.0 + s), c=2.0, v=1.5))
        for s in (-1e-4, 1e-4)
    )
    assert below.passed and above.passed
    assert abs(below.lhs - above.lhs) < 1e-2
    assert abs(below.rhs - above.rhs) < 1e-2


def test_digamma_difference_spot_value():
    record = check(get("digamma_diff_3f2"), ParamPoint(a=1.0, b=2.0))
    assert record.rhs == pytest.approx(2.0, rel=1e-13)
    assert record.lhs == pytest.approx(2.0, rel=1e-10)


def test_trigamma_at_one_is_basel():
    record = check(get("trigamma_3f2"), ParamPoint(x=1.0))
    assert record.rhs == pytest.approx(math.pi**2 / 6, rel=1e-13)
    assert record.passed


def test_vanishing_well_poised_3f2():
    record = check(get("vanishing_3f2"), ParamPoint(a=0.6, b=-0.5))
    assert record.rhs == 0.0
    assert abs(record.lhs) < 1e-8
    assert record.passed


def test_dixon_domain():
    dixon = get("dixon_3f2")
    assert dixon.domain(ParamPoint(a=1.0, b=0.3, c=0.2))
    assert not dixon.domain(ParamPoint(a=1.0, b=2.0, c=2.0))
    assert not dixon.domain(ParamPoint(a=1.0, b=0.3))
    assert check(dixon, ParamPoint(a=1.0, b=0.3, c=0.2)).passed


@pytest.mark.parametrize("x", [0.3, 1.0, 2.5, 6.0])
def test_beta_derivative_by_finite_differences(x):
    assert beta_derivative(x) == pytest.approx(lowercase_beta_derivative(x), rel=1e-8)


def test_check_outside_domain_raises():
    with pytest.raises(DomainError):
        check(get("thm10_3F2_neg1_sec_beta"), ParamPoint(a=2.0, b=1.0))


def test_relative_residual_definition():
    record = check(get("beta_diff_3f2_neg1"), ParamPoint(a=0.4, b=1.7))
    assert record.abs_residual == abs(record.lhs - record.rhs)
    assert record.rel_residual == record.abs_residual / (1.0 + abs(record.rhs))
    assert record.status is Status.PASS


def test_threshold_overrides_identity_tolerance():
    p = ParamPoint(a=0.4, b=1.7)
    strict = check(get("beta_diff_3f2_neg1"), p, threshold=1e-300)
    expected = Status.PASS if strict.rel_residual <= 1e-300 else Status.FAIL
    assert strict.status is expected
    assert check(get("beta_diff_3f2_neg1"), p, threshold=1.0).passed


@pytest.mark.parametrize("identity_id", ["tan_form", "sec_form", "sec_squared_form"])
@pytest.mark.parametrize("z", [-1.4, -1.0, -0.3, 0.3, 1.0, 1.4])
def test_trigonometric_forms(identity_id, z):
    record = check(get(identity_id), ParamPoint(z=z), threshold=1e-9)
    assert record.passed, record


def test_trigonometric_forms_stop_at_half_period():
    assert not get("tan_form").domain(ParamPoint(z=math.pi / 2))


def test_integral_representation_of_2f1():
    record = check(get("hyp2f1_neg1_integral"), ParamPoint(a=1.0, b=1.0))
    assert record.lhs == pytest.approx(math.log(2.0), rel=1e-12)
    assert record.rhs == pytest.approx(math.log(2.0), rel=1e-12)


def test_incomplete_beta_form():
    assert check(get("incomplete_beta_2f1"), ParamPoint(a=0.5, b=2.0, z=0.5)).passed
    assert check(get("incomplete_beta_2f1"), ParamPoint(a=0.3, b=1.5, z=1.0)).passed


def test_reduction_with_three_legs():
    p = ParamPoint(a=0.5, b=0.3, c=1.0, v=1.2)
    record = check(get("red2_7F6_neg1"), p)
    assert record.passed
    assert record.regime == "real"
    assert record.integral_residual is not None


def test_sinh_cosh_regime_follows_scales():
    identity = get("unit_v_sinh_cosh_over_sinh")
    assert identity.regime(ParamPoint(a=0.5, b=0.3, c=2.0)) == "real"
    assert identity.regime(ParamPoint(a=0.3, b=0.5, c=2.0)) == "conjugate"
    assert check(identity, ParamPoint(a=0.3, b=0.5, c=2.0)).passed


def test_integral_identities_expose_decay():
    identity = get("triangle_cosh_cosh_over_cosh_v")
    p = ParamPoint(a=0.3, b=0.2, c=1.0, v=1.5)
    assert identity.decay(p) == pytest.approx(1.0)
    assert identity.omega(p) == pytest.approx(-0.5)
    assert check(identity, p).passed


def test_record_serialisation():
    record = check(get("trigamma_3f2"), ParamPoint(x=2.0), index=3)
    data = record.as_dict()
    assert data["identity_id"] == "trigamma_3f2"
    assert data["index"] == 3
    assert data["point"] == {"x": 2.0}
    assert data["status"] == "pass"


def test_reduction_checks_each_2f1_against_its_integral():
    p = ParamPoint(a=0.3, b=0.2, c=3.0, v=0.8)
    record = check(get("red2_7F6_neg1"), p)
    assert record.passed
    assert record.constituent_residual is not None
    assert record.constituent_residual <= 1e-8
    assert record.as_dict()["constituent_residual"] == record.constituent_residual


def test_constituent_mismatch_fails_the_record():
    broken = dataclasses.replace(
        get("trigamma_3f2"), constituents=lambda p, ctx: [(1.0, 1.0), (1.0, 1.1)]
    )
    record = check(broken, ParamPoint(x=1.0))
    assert record.status is Status.FAIL
    assert record.constituent_residual == pytest.approx(0.1 / 2.1)
    assert check(get("trigamma_3f2"), ParamPoint(x=1.0)).constituent_residual is None
