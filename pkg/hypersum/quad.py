"""Hyperbolic integrals on (0, ∞) and their series and closed-form evaluations.

Every family has the shape

    ∫₀^∞ f(ax) g(bx) / h(cx)^v dx,   f, g ∈ {sinh, cosh},  h ∈ {cosh, sinh}

plus the oscillatory cos(2ax)/cosh(πx). Each integral can be evaluated three
ways: adaptive quadrature (``integrate``), a prefactor times a
hypergeometric series at z = ±1 (``series_form``) and elementary or Γ-function
closed forms (``closed_form`` / ``closed_forms``).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from hypersum.errors import DecayError, DomainError, SingularityError
from hypersum.hyperseries import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    HypergeometricSpec,
    Parameter,
    SeriesResult,
    eval_series,
)
from hypersum.kronrod import integrate_interval
from hypersum.specfun import (
    ConjugatePair,
    digamma,
    gamma_ratio,
    lowercase_beta,
)

logger = logging.getLogger(__name__)

DEFAULT_QUAD_TOL = 1e-10

_LOG2 = math.log(2.0)
_SAME_TOL = 1e-12
_UNIT_V_TOL = 1e-8
_HYP2F1_TOL = 1e-13
_MAX_INITIAL_PANELS = 400


class Family(str, Enum):
    SINH_SINH_OVER_COSH_V = "SinhSinhOverCoshV"
    SINH_SINH_OVER_SINH_V = "SinhSinhOverSinhV"
    SINH_COSH_OVER_COSH_V = "SinhCoshOverCoshV"
    SINH_COSH_OVER_SINH_V = "SinhCoshOverSinhV"
    COSH_COSH_OVER_COSH_V = "CoshCoshOverCoshV"
    COSH_COSH_OVER_SINH_V = "CoshCoshOverSinhV"
    COS_OVER_COSH_PI = "CosOverCoshPi"

    @property
    def numerators(self) -> tuple[str, str]:
        return _NUMERATOR_KINDS[self]

    @property
    def over_sinh(self) -> bool:
        return self.value.endswith("OverSinhV")


_NUMERATOR_KINDS = {
    Family.SINH_SINH_OVER_COSH_V: ("sinh", "sinh"),
    Family.SINH_SINH_OVER_SINH_V: ("sinh", "sinh"),
    Family.SINH_COSH_OVER_COSH_V: ("sinh", "cosh"),
    Family.SINH_COSH_OVER_SINH_V: ("sinh", "cosh"),
    Family.COSH_COSH_OVER_COSH_V: ("cosh", "cosh"),
    Family.COSH_COSH_OVER_SINH_V: ("cosh", "cosh"),
    Family.COS_OVER_COSH_PI: ("cos", "cos"),
}


@dataclass(frozen=True)
class IntegralSpec:
    """One member of an integral family.

    ``a`` and ``b`` scale the two numerator factors, ``c`` the denominator and
    ``v`` is the denominator power. CosOverCoshPi reads only ``a``.
    """

    family: Family
    a: float
    b: float = 0.0
    c: float = 1.0
    v: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        for name in ("a", "b", "c", "v"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def decay(self) -> float:
        """Exponential decay rate of the integrand at infinity."""
        if self.family is Family.COS_OVER_COSH_PI:
            return math.pi
        return self.v * self.c - abs(self.a) - abs(self.b)

    @property
    def origin_exponent(self) -> float:
        """e such that the integrand behaves like x^e near the origin."""
        if self.family is Family.COS_OVER_COSH_PI:
            return 0.0
        sinh_factors = self.family.numerators.count("sinh")
        return sinh_factors - self.v if self.family.over_sinh else float(sinh_factors)

    @property
    def vanishes(self) -> bool:
        """True when a sinh numerator factor has zero scale."""
        if self.family is Family.COS_OVER_COSH_PI:
            return False
        kinds = self.family.numerators
        return (kinds[0] == "sinh" and self.a == 0.0) or (
            kinds[1] == "sinh" and self.b == 0.0
        )


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int
    truncation_point: float


@dataclass(frozen=True)
class SeriesForm:
    """An integral written as ``prefactor * pFq(spec)``."""

    prefactor: float
    spec: HypergeometricSpec

    def evaluate(
        self, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS
    ) -> tuple[float, SeriesResult]:
        result = eval_series(self.spec, tol, max_terms)
        return self.prefactor * result.value, result


def _validate(spec: IntegralSpec) -> None:
    if spec.family is Family.COS_OVER_COSH_PI:
        return
    if not spec.c > 0:
        raise DomainError(f"{spec.family.value}: c must be positive, got {spec.c}")
    if not spec.decay > 0:
        raise DecayError(
            f"{spec.family.value}: vc - |a| - |b| = {spec.decay:.6g} must be positive"
        )
    if not spec.vanishes and spec.origin_exponent <= -1.0:
        raise SingularityError(
            f"{spec.family.value}: integrand ~ x^{spec.origin_exponent:g} at the origin"
        )


def _log_sinh(k: float, x: np.ndarray) -> np.ndarray:
    return k * x + np.log(-np.expm1(-2.0 * k * x)) - _LOG2


def _log_cosh(k: float, x: np.ndarray) -> np.ndarray:
    return k * x + np.log1p(np.exp(-2.0 * k * x)) - _LOG2


def _integrand(spec: IntegralSpec) -> Callable[[np.ndarray], np.ndarray]:
    if spec.family is Family.COS_OVER_COSH_PI:
        a = spec.a

        def oscillatory(x: np.ndarray) -> np.ndarray:
            return np.cos(2.0 * a * x) * np.exp(-_log_cosh(math.pi, x))

        return oscillatory

    factors = list(zip(spec.family.numerators, (spec.a, spec.b)))
    sign = 1.0
    for kind, k in factors:
        if kind == "sinh" and k < 0:
            sign = -sign
    log_denominator = _log_sinh if spec.family.over_sinh else _log_cosh
    c, v = spec.c, spec.v

    def hyperbolic(x: np.ndarray) -> np.ndarray:
        log_mag = -v * log_denominator(c, x)
        for kind, k in factors:
            log_mag = log_mag + (
                _log_sinh(abs(k), x) if kind == "sinh" else _log_cosh(abs(k), x)
            )
        return sign * np.exp(log_mag)

    return hyperbolic


def truncation_point(spec: IntegralSpec, tol: float) -> float:
    """X beyond which the integrand's tail is below tol/10."""
    target = tol / 10.0
    if spec.family is Family.COS_OVER_COSH_PI:
        return max(1.0, math.log(2.0 / (math.pi * target)) / math.pi)
    delta = spec.decay
    # cosh(cx) >= e^{cx}/2; sinh(cx) >= e^{cx}(1 - e^{-2})/2 for x >= 1/c
    base = 2.0 / (1.0 - math.exp(-2.0)) if spec.family.over_sinh else 2.0
    bound = spec.v * math.log(base) - math.log(delta * target)
    return max(1.0 / spec.c, bound / delta)


def integrate(
    spec: IntegralSpec,
    tol: float = DEFAULT_QUAD_TOL,
    *,
    truncation: float | None = None,
) -> QuadratureResult:
    """Adaptive Gauss-Kronrod quadrature of ``spec`` on [0, X].

    Args:
        spec: integral to evaluate
        tol: absolute error target
        truncation: override for the truncation point X
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    _validate(spec)
    if spec.vanishes:
        return QuadratureResult(0.0, 0.0, 0, 0.0)

    X = truncation if truncation is not None else truncation_point(spec, tol)
    f = _integrand(spec)
    segment_tol = 0.45 * tol

    if spec.family is Family.COS_OVER_COSH_PI:
        rate = max(1.0, 2.0 * abs(spec.a) / math.pi)
        panels = min(_MAX_INITIAL_PANELS, max(4, math.ceil(X * rate)))
        body = integrate_interval(f, 0.0, X, 2 * segment_tol, initial_panels=panels)
        logger.debug("%s: %d panels to X=%.4g", spec, body.panels, X)
        return QuadratureResult(
            body.value, body.abs_error + tol / 10.0, body.evaluations, X
        )

    split = min(X, 1.0 / spec.c)
    e = spec.origin_exponent
    if e < 0:
        power = 1.0 / (e + 1.0)

        def near_origin(u: np.ndarray) -> np.ndarray:
            return f(u**power) * power * u ** (power - 1.0)

        head = integrate_interval(near_origin, 0.0, split ** (e + 1.0), segment_tol)
    else:
        head = integrate_interval(f, 0.0, split, segment_tol)

    scale = max(spec.c, abs(spec.a), abs(spec.b))
    panels = min(_MAX_INITIAL_PANELS, max(2, math.ceil((X - split) * scale / 4.0)))
    tail = integrate_interval(f, split, X, segment_tol, initial_panels=panels)
    logger.debug(
        "%s: %d + %d panels to X=%.4g", spec, head.panels, tail.panels, X
    )
    return QuadratureResult(
        head.value + tail.value,
        head.abs_error + tail.abs_error + tol / 10.0,
        head.evaluations + tail.evaluations,
        X,
    )


def hyp2f1_neg1_integral(a: float, b: float) -> float:
    """₂F₁(a, b; 1+b; -1) = b ∫₀¹ t^(b-1) (1+t)^(-a) dt for b > 0."""
    if not b > 0:
        raise DomainError(f"hyp2f1_neg1_integral needs b > 0, got {b!r}")
    if b < 1.0:
        # u = t^b absorbs the t^(b-1) factor
        def substituted(u: np.ndarray) -> np.ndarray:
            return np.power(1.0 + np.power(u, 1.0 / b), -a)

        return integrate_interval(substituted, 0.0, 1.0, _HYP2F1_TOL).value

    def direct(t: np.ndarray) -> np.ndarray:
        return b * np.power(t, b - 1.0) * np.power(1.0 + t, -a)

    return integrate_interval(direct, 0.0, 1.0, _HYP2F1_TOL).value


# --------------------------------------------------------------------------
# Series forms


def _shifted_pair(centre: float, radius_sq: float, scale: float) -> list[Parameter]:
    """centre ∓ √(radius_sq)/scale as two scalars or a conjugate pair."""
    if radius_sq > 0:
        r = math.sqrt(radius_sq) / scale
        return [centre - r, centre + r]
    return [ConjugatePair(centre, math.sqrt(-radius_sq) / scale)]


def _four_products(spec: IntegralSpec) -> float:
    vc, a, b = spec.v * spec.c, spec.a, spec.b
    return (vc - a - b) * (vc + a + b) * (vc - a + b) * (vc + a - b)


def _sigmas(spec: IntegralSpec) -> list[float]:
    h, ra, rb = spec.v / 2.0, spec.a / (2.0 * spec.c), spec.b / (2.0 * spec.c)
    return [h - ra - rb, h - ra + rb, h + ra + rb, h + ra - rb]


def series_form(spec: IntegralSpec) -> SeriesForm:
    """Prefactor and pFq(±1) whose product equals the integral."""
    _validate(spec)
    family = spec.family
    if family is Family.COS_OVER_COSH_PI:
        ratio = spec.a / math.pi
        return SeriesForm(
            2.0 * math.pi / (math.pi**2 + 4.0 * spec.a**2),
            HypergeometricSpec(
                (1.0, 1.5, ConjugatePair(0.5, abs(ratio))),
                (0.5, ConjugatePair(1.5, abs(ratio))),
                -1.0,
            ),
        )

    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    z = 1.0 if family.over_sinh else -1.0
    denominator = _four_products(spec)
    sigmas = _sigmas(spec)
    upper_sigmas = [1.0 + s for s in sigmas]
    kinds = family.numerators

    if kinds == ("sinh", "sinh"):
        prefactor = 2.0 ** (v + 1.0) * v * a * b * c / denominator
        nums: list[Parameter] = [v, 1.0 + v / 2.0, *sigmas]
        dens: list[Parameter] = [v / 2.0, *upper_sigmas]
    elif kinds == ("sinh", "cosh"):
        prefactor = 2.0**v * (v * v * a * c * c - a**3 + a * b * b) / denominator
        lower = _shifted_pair(v / 2.0, a * a - b * b, 2.0 * c)
        upper = _shifted_pair(1.0 + v / 2.0, a * a - b * b, 2.0 * c)
        nums = [v, *upper, *sigmas]
        dens = [*lower, *upper_sigmas]
    else:
        prefactor = 2.0**v * (v**3 * c**3 - a * a * v * c - b * b * v * c) / denominator
        lam = math.sqrt(a * a + b * b) / (2.0 * c)
        nums = [v, 1.0 + v / 2.0, 1.0 + v / 2.0 - lam, 1.0 + v / 2.0 + lam, *sigmas]
        dens = [v / 2.0, v / 2.0 - lam, v / 2.0 + lam, *upper_sigmas]

    return SeriesForm(prefactor, HypergeometricSpec(tuple(nums), tuple(dens), z))


# --------------------------------------------------------------------------
# Closed forms


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= _SAME_TOL * max(1.0, abs(x), abs(y))


def _gamma_pairs(spec: IntegralSpec) -> tuple[float, float]:
    """Γ((vc+a+b)/2c)Γ((vc-a-b)/2c)/Γ(v) and Γ((vc+a-b)/2c)Γ((vc-a+b)/2c)/Γ(v)."""
    vc, a, b, c, v = spec.v * spec.c, spec.a, spec.b, spec.c, spec.v
    same = gamma_ratio([(vc + a + b) / (2 * c), (vc - a - b) / (2 * c)], [v])
    mixed = gamma_ratio([(vc + a - b) / (2 * c), (vc - a + b) / (2 * c)], [v])
    return same, mixed


def _product_prefactor(spec: IntegralSpec) -> float:
    return 2.0 ** (spec.v - 3.0) / spec.c


def _gamma_difference(spec: IntegralSpec) -> float:
    same, mixed = _gamma_pairs(spec)
    return _product_prefactor(spec) * (same - mixed)


def _gamma_sum(spec: IntegralSpec) -> float:
    same, mixed = _gamma_pairs(spec)
    return _product_prefactor(spec) * (same + mixed)


def _sinh_sinh_unit_v_limit(spec: IntegralSpec) -> float:
    """v → 1 limit of the cos-weighted Γ difference (0/0 at v = 1)."""
    a, b, c = spec.a, spec.b, spec.c
    p = (a + b) / (2 * c)
    q = (a - b) / (2 * c)
    return (
        digamma(0.5 + q) + digamma(0.5 - q) - digamma(0.5 + p) - digamma(0.5 - p)
    ) / (4.0 * c)


def _gamma_cos_weighted(spec: IntegralSpec) -> float:
    if abs(spec.v - 1.0) < _UNIT_V_TOL:
        return _sinh_sinh_unit_v_limit(spec)
    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    same, mixed = _gamma_pairs(spec)
    bracket = same * math.cos((a + b) * math.pi / (2 * c)) - mixed * math.cos(
        (a - b) * math.pi / (2 * c)
    )
    return _product_prefactor(spec) * bracket / math.cos(v * math.pi / 2)


def _gamma_sin_weighted(spec: IntegralSpec) -> float:
    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    denominator = math.sin(v * math.pi / 2)
    if abs(denominator) < 1e-12:
        raise DomainError("sin(v*pi/2) vanishes: v must not be an even integer")
    same, mixed = _gamma_pairs(spec)
    bracket = same * math.sin((a + b) * math.pi / (2 * c)) + mixed * math.sin(
        (a - b) * math.pi / (2 * c)
    )
    return _product_prefactor(spec) * bracket / denominator


def _gamma_cos_weighted_sum(spec: IntegralSpec) -> float:
    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    denominator = math.cos(v * math.pi / 2)
    if abs(denominator) < 1e-12:
        raise DomainError("cos(v*pi/2) vanishes: v must not be an odd integer")
    same, mixed = _gamma_pairs(spec)
    bracket = same * math.cos((a + b) * math.pi / (2 * c)) + mixed * math.cos(
        (a - b) * math.pi / (2 * c)
    )
    return _product_prefactor(spec) * bracket / denominator


def _hyp2f1_bracket(spec: IntegralSpec) -> float:
    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    vc = v * c
    total = 0.0
    for shift, sign in ((-a - b, 1.0), (a + b, -1.0), (-a + b, 1.0), (a - b, -1.0)):
        s = vc + shift
        total += sign / s * hyp2f1_neg1_integral(v, s / (2 * c))
    return 2.0 ** (v - 2.0) * total


def _single_gamma(spec: IntegralSpec) -> float:
    a, c, v = spec.a, spec.c, spec.v
    p, q = v / 2 - a / (2 * c), v / 2 + a / (2 * c)
    return 2.0 ** (v - 2.0) / c * gamma_ratio([p, q], [v])


def _single_gamma_sin(spec: IntegralSpec) -> float:
    a, c, v = spec.a, spec.c, spec.v
    denominator = math.sin(v * math.pi / 2)
    if abs(denominator) < 1e-12:
        raise DomainError("sin(v*pi/2) vanishes: v must not be an even integer")
    return _single_gamma(spec) * math.sin(a * math.pi / (2 * c)) / denominator


def _single_gamma_cos(spec: IntegralSpec) -> float:
    a, c, v = spec.a, spec.c, spec.v
    denominator = math.cos(v * math.pi / 2)
    if abs(denominator) < 1e-12:
        raise DomainError("cos(v*pi/2) vanishes: v must not be an odd integer")
    return _single_gamma(spec) * math.cos(a * math.pi / (2 * c)) / denominator


def _sec(x: float) -> float:
    return 1.0 / math.cos(x)


# Unit-v two-factor forms. ``d`` is the denominator scale, ``s`` the second
# numerator scale.


def _cos_pair_sum(a: float, s: float, d: float) -> float:
    return math.cos(s * math.pi / d) + math.cos(a * math.pi / d)


def _beta_pair(a: float, s: float, d: float) -> float:
    return lowercase_beta((a + d + s) / (2 * d)) + lowercase_beta((a + d - s) / (2 * d))


def _sec_difference(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    plus, minus = math.pi * (a + s) / (2 * d), math.pi * (a - s) / (2 * d)
    return math.pi / (4 * d) * (_sec(plus) - _sec(minus))


def _sin_sin_quotient(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    return (
        math.pi
        / d
        * math.sin(a * math.pi / (2 * d))
        * math.sin(s * math.pi / (2 * d))
        / _cos_pair_sum(a, s, d)
    )


def _tan_sum(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    plus, minus = math.pi * (a + s) / (2 * d), math.pi * (a - s) / (2 * d)
    return math.pi / (4 * d) * (math.tan(plus) + math.tan(minus))


def _sin_quotient(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    return math.pi / (2 * d) * math.sin(a * math.pi / d) / _cos_pair_sum(a, s, d)


def _sec_sum(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    plus, minus = math.pi * (a + s) / (2 * d), math.pi * (a - s) / (2 * d)
    return math.pi / (4 * d) * (_sec(plus) + _sec(minus))


def _cos_cos_quotient(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    return (
        math.pi
        / d
        * math.cos(a * math.pi / (2 * d))
        * math.cos(s * math.pi / (2 * d))
        / _cos_pair_sum(a, s, d)
    )


def _sec_sum_minus_beta(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    return _sec_sum(spec) - _beta_pair(a, s, d) / (2 * d)


def _cos_cos_quotient_minus_beta(spec: IntegralSpec) -> float:
    a, s, d = spec.a, spec.b, spec.c
    return _cos_cos_quotient(spec) - _beta_pair(a, s, d) / (2 * d)


# Single-factor elementary forms, denominator scale c.


def _secant_v2(spec: IntegralSpec) -> float:
    a, d = spec.a, spec.c
    return a * math.pi / (2 * d * d) * _sec(math.pi * a / (2 * d))


def _tangent(spec: IntegralSpec) -> float:
    a, d = spec.a, spec.c
    return math.pi / (2 * d) * math.tan(math.pi * a / (2 * d))


def _secant(spec: IntegralSpec) -> float:
    a, d = spec.a, spec.c
    return math.pi / (2 * d) * _sec(math.pi * a / (2 * d))


def _sec_minus_beta(spec: IntegralSpec) -> float:
    a, d = spec.a, spec.c
    return _secant(spec) - lowercase_beta((a + d) / (2 * d)) / d


def _sec_minus_digamma(spec: IntegralSpec) -> float:
    a, d = spec.a, spec.c
    return _secant(spec) - (
        digamma((a + 3 * d) / (4 * d)) - digamma((a + d) / (4 * d))
    ) / (2 * d)


def _four_digamma(spec: IntegralSpec) -> float:
    a, d = spec.a, spec.c
    return (
        digamma((3 * d - a) / (4 * d))
        - digamma((d - a) / (4 * d))
        - digamma((3 * d + a) / (4 * d))
        + digamma((d + a) / (4 * d))
    ) / (4 * d)


def _cotangent(spec: IntegralSpec) -> float:
    alpha = spec.a / spec.c
    if alpha == 0.0:
        return 0.0
    return (1.0 - alpha * math.pi / math.tan(alpha * math.pi)) / (2 * spec.c)


def _digamma_difference(spec: IntegralSpec) -> float:
    alpha = spec.a / spec.c
    return alpha / 2 * (digamma(1 + alpha) - digamma(1 - alpha)) / spec.c


def _half_sech(spec: IntegralSpec) -> float:
    return 0.5 / math.cosh(spec.a)


ClosedForm = Callable[[IntegralSpec], float]


def _applicable_forms(spec: IntegralSpec) -> list[tuple[str, ClosedForm]]:
    """Named closed forms valid at ``spec``; the family's general form first."""
    family = spec.family
    unit_v = _close(spec.v, 1.0)
    v_two = _close(spec.v, 2.0)
    single = spec.b == 0.0
    forms: list[tuple[str, ClosedForm]] = []

    if family is Family.COS_OVER_COSH_PI:
        forms.append(("half_sech", _half_sech))
    elif family is Family.SINH_SINH_OVER_COSH_V:
        forms.append(("gamma_difference", _gamma_difference))
        if unit_v:
            forms += [
                ("sec_difference", _sec_difference),
                ("sin_sin_quotient", _sin_sin_quotient),
            ]
        if v_two and _close(spec.b, spec.c):
            forms.append(("secant", _secant_v2))
    elif family is Family.SINH_SINH_OVER_SINH_V:
        forms.append(("gamma_cos_weighted", _gamma_cos_weighted))
        if abs(spec.v - 1.0) < _UNIT_V_TOL:
            forms.append(("digamma_limit", _sinh_sinh_unit_v_limit))
        if v_two and _close(spec.b, spec.c):
            forms.append(("tangent", _tangent))
        if v_two and _close(spec.a, spec.b):
            forms += [
                ("cotangent", _cotangent),
                ("digamma_difference", _digamma_difference),
            ]
    elif family is Family.SINH_COSH_OVER_COSH_V:
        forms.append(("hyp2f1_bracket", _hyp2f1_bracket))
        if unit_v:
            forms += [
                ("sec_sum_minus_beta", _sec_sum_minus_beta),
                ("cos_cos_quotient_minus_beta", _cos_cos_quotient_minus_beta),
            ]
            if single:
                forms += [
                    ("sec_minus_beta", _sec_minus_beta),
                    ("sec_minus_digamma", _sec_minus_digamma),
                    ("four_digamma", _four_digamma),
                ]
    elif family is Family.SINH_COSH_OVER_SINH_V:
        forms.append(("gamma_sin_weighted", _gamma_sin_weighted))
        if single:
            forms.append(("single_gamma_sin", _single_gamma_sin))
        if unit_v:
            forms += [("tan_sum", _tan_sum), ("sin_quotient", _sin_quotient)]
            if single:
                forms.append(("tangent", _tangent))
    elif family is Family.COSH_COSH_OVER_COSH_V:
        forms.append(("gamma_sum", _gamma_sum))
        if single:
            forms.append(("single_gamma", _single_gamma))
        if unit_v:
            forms += [("sec_sum", _sec_sum), ("cos_cos_quotient", _cos_cos_quotient)]
            if single:
                forms.append(("secant", _secant))
    elif family is Family.COSH_COSH_OVER_SINH_V:
        forms.append(("gamma_cos_weighted_sum", _gamma_cos_weighted_sum))
        if single:
            forms.append(("single_gamma_cos", _single_gamma_cos))
    return forms


def closed_forms(spec: IntegralSpec) -> dict[str, float]:
    """Every applicable named closed form evaluated at ``spec``."""
    _validate(spec)
    if spec.vanishes:
        return {name: 0.0 for name, _ in _applicable_forms(spec)}
    return {name: form(spec) for name, form in _applicable_forms(spec)}


def closed_form(spec: IntegralSpec, form: str | None = None) -> float:
    """The family's general closed form, or the named one."""
    _validate(spec)
    forms = _applicable_forms(spec)
    if form is None:
        name, chosen = forms[0]
    else:
        lookup = dict(forms)
        if form not in lookup:
            raise DomainError(
                f"closed form {form!r} does not apply to {spec}; "
                f"available: {', '.join(lookup)}"
            )
        name, chosen = form, lookup[form]
    if spec.vanishes:
        return 0.0
    logger.debug("%s: closed form %s", spec, name)
    return chosen(spec)
