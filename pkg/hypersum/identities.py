"""Registry of hypergeometric identities and the check that verifies one point.

Each identity pairs a left-hand side (usually a pFq series), a right-hand
side (a closed form) and, where a defining integral exists, an independent
quadrature leg. ``check`` evaluates all legs at one ParamPoint and reports
the residuals as a VerificationRecord.
"""

from __future__ import annotations

import fnmatch
import logging
import math
from dataclasses import asdict, dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Union

from hypersum.errors import DomainError, HypersumError
from hypersum.hyperseries import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    HypergeometricSpec,
    SeriesResult,
    eval_series,
)
from hypersum.quad import (
    DEFAULT_QUAD_TOL,
    Family,
    IntegralSpec,
    closed_form,
    hyp2f1_neg1_integral,
    integrate,
    series_form,
)
from hypersum.specfun import (
    ConjugatePair,
    digamma,
    gamma_ratio,
    incomplete_beta,
    lowercase_beta,
    trigamma,
)

logger = logging.getLogger(__name__)

SERIES_TOLERANCE = 1e-8
QUADRATURE_TOLERANCE = 1e-6
REDUCTION_TOLERANCE = 1e-7
CONSTITUENT_TOLERANCE = 1e-8
POLE_MARGIN = 0.02

_FD_STEP = 1e-5
PARAM_NAMES = ("a", "b", "c", "d", "e", "v", "x", "z")


@dataclass(frozen=True)
class ParamPoint:
    """Free parameters of one identity; unused fields stay None."""

    a: float | None = None
    b: float | None = None
    c: float | None = None
    d: float | None = None
    e: float | None = None
    v: float | None = None
    x: float | None = None
    z: float | None = None

    def values(self, *names: str) -> tuple[float, ...]:
        out = []
        for name in names:
            value = getattr(self, name)
            if value is None:
                raise DomainError(f"parameter {name!r} is required but not set")
            out.append(float(value))
        return tuple(out)

    def as_dict(self) -> dict[str, float]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def __str__(self) -> str:
        return ", ".join(f"{k}={v:.6g}" for k, v in self.as_dict().items())


@dataclass(frozen=True)
class EvalContext:
    series_tol: float = DEFAULT_TOL
    quad_tol: float = DEFAULT_QUAD_TOL
    max_terms: int = DEFAULT_MAX_TERMS


@dataclass(frozen=True)
class Leg:
    """One evaluated side of an identity."""

    value: float
    terms_used: int = 0


Recipe = Callable[[ParamPoint, EvalContext], Union[Leg, float]]
Predicate = Callable[[ParamPoint], bool]
SpecOf = Callable[[ParamPoint], IntegralSpec]
# (series value, integral value) pairs for the pieces of a composite right side
Constituents = Callable[[ParamPoint, EvalContext], list[tuple[float, float]]]


class Kind(str, Enum):
    CLASSICAL = "classical"
    THEOREM = "theorem"
    REDUCTION = "reduction"
    INTEGRAL = "integral"
    SPECIAL = "special"


@dataclass(frozen=True)
class Identity:
    id: str
    params: tuple[str, ...]
    lhs: Recipe
    rhs: Recipe
    domain: Predicate
    provenance: str
    kind: Kind = Kind.CLASSICAL
    tolerance: float = SERIES_TOLERANCE
    integral: Recipe | None = None
    integral_tolerance: float = QUADRATURE_TOLERANCE
    omega: Callable[[ParamPoint], float | None] | None = None
    decay: Callable[[ParamPoint], float] | None = None
    regime: Callable[[ParamPoint], str] | None = None
    constituents: Constituents | None = None
    constituent_tolerance: float = CONSTITUENT_TOLERANCE


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED_NONCONVERGED = "skipped_nonconverged"
    SKIPPED_DOMAIN = "skipped_domain"


@dataclass(frozen=True)
class VerificationRecord:
    identity_id: str
    point: ParamPoint
    lhs: float
    rhs: float
    integral: float | None
    abs_residual: float
    rel_residual: float
    terms_used: int
    status: Status
    integral_residual: float | None = None
    constituent_residual: float | None = None
    index: int = 0
    regime: str | None = None
    message: str | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def as_dict(self) -> dict[str, object]:
        return {
            "identity_id": self.identity_id,
            "index": self.index,
            "point": self.point.as_dict(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "integral": self.integral,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "integral_residual": self.integral_residual,
            "constituent_residual": self.constituent_residual,
            "terms_used": self.terms_used,
            "status": self.status.value,
            "regime": self.regime,
            "message": self.message,
        }


# --------------------------------------------------------------------------
# Domain helpers. Every excluded hyperplane is kept at least POLE_MARGIN away.


def _off_poles(*xs: float) -> bool:
    for x in xs:
        nearest = round(x)
        if nearest <= 0 and abs(x - nearest) < POLE_MARGIN:
            return False
    return True


def _off_odd(x: float) -> bool:
    """x keeps away from the odd integers (zeros of cos(xπ/2))."""
    half = (x - 1.0) / 2.0
    return 2.0 * abs(half - round(half)) >= POLE_MARGIN


def _off_even(x: float) -> bool:
    """x keeps away from the even integers (zeros of sin(xπ/2))."""
    half = x / 2.0
    return 2.0 * abs(half - round(half)) >= POLE_MARGIN


def _nonzero(*xs: float) -> bool:
    return all(abs(x) >= POLE_MARGIN for x in xs)


def _apart(x: float, y: float) -> bool:
    return abs(x - y) >= POLE_MARGIN


def _clear_denominators(spec: HypergeometricSpec) -> bool:
    for beta in spec.denominators:
        if isinstance(beta, ConjugatePair):
            if beta.is_real and not _off_poles(beta.re):
                return False
        elif not _off_poles(beta):
            return False
    return True


def _summable(spec: HypergeometricSpec) -> bool:
    if spec.terminating_degree is not None or abs(spec.z) < 1.0:
        return True
    return spec.omega > (0.0 if spec.z > 0 else -1.0)


def _series_ok(build: Callable[[], HypergeometricSpec]) -> bool:
    try:
        spec = build()
    except HypersumError:
        return False
    return _clear_denominators(spec) and _summable(spec)


def _guarded(predicate: Predicate) -> Predicate:
    """Missing parameters or construction errors make a point out of domain."""

    def guarded(p: ParamPoint) -> bool:
        try:
            return bool(predicate(p))
        except (HypersumError, ZeroDivisionError, ValueError):
            return False

    return guarded


# --------------------------------------------------------------------------
# Recipe helpers


def _series(spec: HypergeometricSpec, ctx: EvalContext) -> SeriesResult:
    return eval_series(spec, ctx.series_tol, ctx.max_terms)


def _leg(result: SeriesResult, factor: float = 1.0) -> Leg:
    return Leg(factor * result.value, result.terms_used)


def _pfq(
    nums: tuple[float | ConjugatePair, ...],
    dens: tuple[float | ConjugatePair, ...],
    z: float,
) -> HypergeometricSpec:
    return HypergeometricSpec(nums, dens, z)


def _unpack(value: Leg | float) -> Leg:
    return value if isinstance(value, Leg) else Leg(float(value))


# --------------------------------------------------------------------------
# Classical summation theorems


def _dixon_spec(p: ParamPoint) -> HypergeometricSpec:
    a, b, c = p.values("a", "b", "c")
    return _pfq((a, b, c), (1 + a - b, 1 + a - c), 1.0)


def _dixon_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c = p.values("a", "b", "c")
    return gamma_ratio(
        [1 + a - b, 1 + a - c, 1 + a / 2, 1 + a / 2 - b - c],
        [1 + a / 2 - b, 1 + a / 2 - c, 1 + a, 1 + a - b - c],
    )


def _dixon_domain(p: ParamPoint) -> bool:
    a, b, c = p.values("a", "b", "c")
    return (
        a - 2 * b - 2 * c > -2
        and _off_poles(1 + a - b, 1 + a - c, 1 + a / 2, 1 + a / 2 - b - c)
        and _series_ok(lambda: _dixon_spec(p))
    )


def _well_poised_3f2(p: ParamPoint, z: float) -> HypergeometricSpec:
    a, b = p.values("a", "b")
    return _pfq((a, 1 + a / 2, b), (a / 2, 1 + a - b), z)


def _kummer_type_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    return gamma_ratio([1 + a - b, (1 + a) / 2], [(1 + a) / 2 - b, 1 + a])


def _split_lhs_spec(p: ParamPoint) -> HypergeometricSpec:
    a, b, c, z = p.values("a", "b", "c", "z")
    return _pfq((a, b, c), (1 + b, 1 + c), z)


def _split_rhs(p: ParamPoint, ctx: EvalContext) -> Leg:
    a, b, c, z = p.values("a", "b", "c", "z")
    first = _series(_pfq((a, b), (1 + b,), z), ctx)
    second = _series(_pfq((a, c), (1 + c,), z), ctx)
    value = (c * first.value - b * second.value) / (c - b)
    return Leg(value, first.terms_used + second.terms_used)


def _split_domain(p: ParamPoint) -> bool:
    a, b, c, z = p.values("a", "b", "c", "z")
    return (
        _apart(b, c)
        and _series_ok(lambda: _split_lhs_spec(p))
        and _series_ok(lambda: _pfq((a, b), (1 + b,), z))
        and _series_ok(lambda: _pfq((a, c), (1 + c,), z))
    )


def _split_omega(p: ParamPoint) -> float | None:
    a, z = p.values("a", "z")
    # the 2F1 pieces converge more slowly than the 3F2
    return 1.0 - a if abs(z) == 1.0 else None


def _gauss_combined_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c = p.values("a", "b", "c")
    bracket = gamma_ratio([b], [1 + b - a]) - gamma_ratio([c], [1 + c - a])
    return b * c / (c - b) * gamma_ratio([1 - a], []) * bracket


def _gauss_combined_domain(p: ParamPoint) -> bool:
    a, b, c = p.values("a", "b", "c")
    return (
        a < 1
        and _apart(b, c)
        and _off_poles(1 - a, b, c)
        and _series_ok(lambda: _pfq((a, b, c), (1 + b, 1 + c), 1.0))
    )


def _classical_4f3(p: ParamPoint, z: float) -> HypergeometricSpec:
    a, c, d = p.values("a", "c", "d")
    return _pfq((a, 1 + a / 2, c, d), (a / 2, 1 + a - c, 1 + a - d), z)


def _classical_4f3_neg1_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, c, d = p.values("a", "c", "d")
    return gamma_ratio([1 + a - c, 1 + a - d], [1 + a, 1 + a - c - d])


def _classical_4f3_pos1_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, c, d = p.values("a", "c", "d")
    h = (1 + a) / 2
    return gamma_ratio(
        [1 + a - c, 1 + a - d, h, h - c - d],
        [1 + a, h - d, h - c, 1 + a - c - d],
    )


def _classical_5f4_spec(p: ParamPoint) -> HypergeometricSpec:
    a, c, d, e = p.values("a", "c", "d", "e")
    return _pfq(
        (a, 1 + a / 2, c, d, e), (a / 2, 1 + a - c, 1 + a - d, 1 + a - e), 1.0
    )


def _classical_5f4_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, c, d, e = p.values("a", "c", "d", "e")
    return gamma_ratio(
        [1 + a - c, 1 + a - d, 1 + a - e, 1 + a - c - d - e],
        [1 + a, 1 + a - d - e, 1 + a - c - e, 1 + a - c - d],
    )


# Digamma, trigamma and lowercase-beta sums


def _two_point_3f2(p: ParamPoint, z: float) -> HypergeometricSpec:
    a, b = p.values("a", "b")
    return _pfq((1.0, a, b), (1 + a, 1 + b), z)


def _squared_3f2(x: float, z: float) -> HypergeometricSpec:
    return _pfq((1.0, x, x), (1 + x, 1 + x), z)


def beta_derivative(x: float, h: float = _FD_STEP) -> float:
    """β′(x) by a central difference with one Richardson step."""

    def central(step: float) -> float:
        return (lowercase_beta(x + step) - lowercase_beta(x - step)) / (2.0 * step)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


# Trigonometric functions as hypergeometric series


def _tan_series(z: float) -> HypergeometricSpec:
    t = z / math.pi
    return _pfq((1.0, 0.5 - t, 0.5 + t), (1.5 - t, 1.5 + t), 1.0)


def _sec_series(z: float) -> HypergeometricSpec:
    t = z / math.pi
    return _pfq((1.0, 1.5, 0.5 - t, 0.5 + t), (0.5, 1.5 - t, 1.5 + t), -1.0)


def _sec_squared_lhs(p: ParamPoint, ctx: EvalContext) -> Leg:
    (z,) = p.values("z")
    t = z / math.pi
    minus = _series(_squared_3f2(0.5 - t, 1.0), ctx)
    plus = _series(_squared_3f2(0.5 + t, 1.0), ctx)
    value = 4.0 / (2 * z - math.pi) ** 2 * minus.value + 4.0 / (
        2 * z + math.pi
    ) ** 2 * plus.value
    return Leg(value, minus.terms_used + plus.terms_used)


def _inside_half_period(p: ParamPoint) -> bool:
    (z,) = p.values("z")
    return abs(z) <= math.pi / 2 - POLE_MARGIN


# --------------------------------------------------------------------------
# Summation theorems from the hyperbolic integrals. The series of theorem N
# is the pFq in the series form of the matching integral family; a theorem's
# right-hand side is transcribed on its own, and its integral leg divides
# the quadrature value by the series prefactor.


def _family_spec(family: Family) -> SpecOf:
    def spec_of(p: ParamPoint) -> IntegralSpec:
        a, b, c, v = p.values("a", "b", "c", "v")
        return IntegralSpec(family, a, b, c, v)

    return spec_of


def _unit_family_spec(family: Family) -> SpecOf:
    """Theorems written with b as the denominator scale and c as the second
    numerator scale, at v = 1."""

    def spec_of(p: ParamPoint) -> IntegralSpec:
        a, b, c = p.values("a", "b", "c")
        return IntegralSpec(family, a, c, b, 1.0)

    return spec_of


def _four_products(p: ParamPoint) -> float:
    a, b, c, v = p.values("a", "b", "c", "v")
    vc = v * c
    return (vc * vc - (a + b) ** 2) * (vc * vc - (a - b) ** 2)


def _unit_four_products(p: ParamPoint) -> float:
    a, b, c = p.values("a", "b", "c")
    return (b - a - c) * (b + a + c) * (b - a + c) * (b + a - c)


def _gamma_pair_products(p: ParamPoint) -> tuple[float, float]:
    a, b, c, v = p.values("a", "b", "c", "v")
    vc = v * c
    same = gamma_ratio([(vc + a + b) / (2 * c), (vc - a - b) / (2 * c)], [v])
    mixed = gamma_ratio([(vc + a - b) / (2 * c), (vc - a + b) / (2 * c)], [v])
    return same, mixed


def _thm1_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c, v = p.values("a", "b", "c", "v")
    same, mixed = _gamma_pair_products(p)
    return _four_products(p) / (16 * v * a * b * c * c) * (same - mixed)


def _thm2_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c, v = p.values("a", "b", "c", "v")
    same, mixed = _gamma_pair_products(p)
    bracket = (
        same * math.cos((a + b) * math.pi / (2 * c))
        - mixed * math.cos((a - b) * math.pi / (2 * c))
    ) / math.cos(v * math.pi / 2)
    return _four_products(p) / (16 * v * a * b * c * c) * bracket


def _thm3_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c = p.values("a", "b", "c")
    quotient = (
        math.sin(a * math.pi / (2 * b))
        * math.sin(c * math.pi / (2 * b))
        / (math.cos(c * math.pi / b) + math.cos(a * math.pi / b))
    )
    return math.pi * _unit_four_products(p) / (4 * a * c * b * b) * quotient


def _thm4_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c, v = p.values("a", "b", "c", "v")
    same, mixed = _gamma_pair_products(p)
    bracket = (
        same * math.sin((a + b) * math.pi / (2 * c))
        + mixed * math.sin((a - b) * math.pi / (2 * c))
    ) / math.sin(v * math.pi / 2)
    weight = v * v * a * c**3 - a**3 * c + a * b * b * c
    return _four_products(p) / (8 * weight) * bracket


def _unit_weight(p: ParamPoint) -> float:
    a, b, c = p.values("a", "b", "c")
    return a * b**3 - a**3 * b + a * b * c * c


def _cos_sum(p: ParamPoint) -> float:
    a, b, c = p.values("a", "b", "c")
    return math.cos(c * math.pi / b) + math.cos(a * math.pi / b)


def _thm5_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c = p.values("a", "b", "c")
    return (
        math.pi
        * _unit_four_products(p)
        / (4 * _unit_weight(p))
        * math.sin(a * math.pi / b)
        / _cos_sum(p)
    )


def _thm6_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c = p.values("a", "b", "c")
    products, weight = _unit_four_products(p), _unit_weight(p)
    trig = (
        math.cos(a * math.pi / (2 * b)) * math.cos(c * math.pi / (2 * b)) / _cos_sum(p)
    )
    betas = lowercase_beta((a + b + c) / (2 * b)) + lowercase_beta(
        (a + b - c) / (2 * b)
    )
    return math.pi * products / (2 * weight) * trig - products / (4 * weight) * betas


def _thm7_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c, v = p.values("a", "b", "c", "v")
    same, mixed = _gamma_pair_products(p)
    weight = v**3 * c**4 - a * a * v * c * c - b * b * v * c * c
    return _four_products(p) / (8 * weight) * (same + mixed)


def _thm8_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c, v = p.values("a", "b", "c", "v")
    same, mixed = _gamma_pair_products(p)
    bracket = (
        same * math.cos((a + b) * math.pi / (2 * c))
        + mixed * math.cos((a - b) * math.pi / (2 * c))
    ) / math.cos(v * math.pi / 2)
    weight = v**3 * c**4 - a * a * v * c * c - b * b * v * c * c
    return _four_products(p) / (8 * weight) * bracket


def _thm9_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, c = p.values("a", "b", "c")
    trig = (
        math.cos(a * math.pi / (2 * b)) * math.cos(c * math.pi / (2 * b)) / _cos_sum(p)
    )
    weight = b**4 - a * a * b * b - c * c * b * b
    return math.pi * _unit_four_products(p) / (2 * weight) * trig


def _thm10_spec(p: ParamPoint) -> HypergeometricSpec:
    a, b = p.values("a", "b")
    r = a / (2 * b)
    return _pfq((1.0, 0.5 - r, 0.5 + r), (1.5 - r, 1.5 + r), -1.0)


def _thm10_sec_beta(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    bracket = math.pi / 2 / math.cos(math.pi * a / (2 * b)) - lowercase_beta(
        (a + b) / (2 * b)
    )
    return (b * b - a * a) / (2 * a * b) * bracket


def _thm10_digamma(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    q = 4 * b
    bracket = (
        digamma((3 * b - a) / q)
        - digamma((b - a) / q)
        - digamma((3 * b + a) / q)
        + digamma((b + a) / q)
    )
    return (b * b - a * a) / (8 * a * b) * bracket


def _thm10_domain(p: ParamPoint) -> bool:
    a, b = p.values("a", "b")
    return (
        b > 0
        and b - abs(a) >= POLE_MARGIN * b
        and _nonzero(a)
        and _series_ok(lambda: _thm10_spec(p))
    )


def _thm10_integral(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    spec = IntegralSpec(Family.SINH_COSH_OVER_COSH_V, a, 0.0, b, 1.0)
    return integrate(spec, ctx.quad_tol).value / series_form(spec).prefactor


# Reduction formulas


def _red1_lhs(p: ParamPoint, ctx: EvalContext) -> Leg:
    a, b = p.values("a", "b")
    r = a / (2 * b)
    spec = _pfq((2.0, 2.0, 0.5 + r, 0.5 - r), (1.0, 2.5 + r, 2.5 - r), 1.0)
    return _leg(_series(spec, ctx))


def _red1_rhs(p: ParamPoint, ctx: EvalContext) -> Leg:
    a, b = p.values("a", "b")
    r = a / (2 * b)
    inner = _series(_pfq((1.0, 0.5 - r, 0.5 + r), (1.5 - r, 1.5 + r), 1.0), ctx)
    return _leg(inner, (9 * b * b - a * a) / (8 * b * b))


def _red1_integral(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    spec = IntegralSpec(Family.SINH_SINH_OVER_SINH_V, a, b, b, 2.0)
    return integrate(spec, ctx.quad_tol).value / series_form(spec).prefactor


def _red1_domain(p: ParamPoint) -> bool:
    a, b = p.values("a", "b")
    return b > 0 and b - abs(a) >= POLE_MARGIN * b and _nonzero(a)


def _red2_shifts(p: ParamPoint) -> tuple[tuple[float, float], ...]:
    a, b, c, v = p.values("a", "b", "c", "v")
    vc = v * c
    return (
        (vc - a - b, 1.0),
        (vc + a + b, -1.0),
        (vc - a + b, 1.0),
        (vc + a - b, -1.0),
    )


def _red2_bracket(p: ParamPoint, hyp2f1: Callable[[float, float], Leg]) -> Leg:
    a, b, c, v = p.values("a", "b", "c", "v")
    total = 0.0
    terms = 0
    for s, sign in _red2_shifts(p):
        piece = hyp2f1(v, s / (2 * c))
        total += sign / s * piece.value
        terms += piece.terms_used
    weight = 4 * (v * v * a * c * c - a**3 + a * b * b)
    return Leg(_four_products(p) / weight * total, terms)


def _red2_series_2f1(ctx: EvalContext) -> Callable[[float, float], Leg]:
    def by_series(alpha: float, beta: float) -> Leg:
        return _leg(_series(_pfq((alpha, beta), (1 + beta,), -1.0), ctx))

    return by_series


def _red2_rhs(p: ParamPoint, ctx: EvalContext) -> Leg:
    return _red2_bracket(p, _red2_series_2f1(ctx))


def _red2_integral(p: ParamPoint, ctx: EvalContext) -> Leg:
    return _red2_bracket(p, lambda alpha, beta: Leg(hyp2f1_neg1_integral(alpha, beta)))


def _red2_constituents(p: ParamPoint, ctx: EvalContext) -> list[tuple[float, float]]:
    c, v = p.values("c", "v")
    by_series = _red2_series_2f1(ctx)
    pairs = []
    for s, _ in _red2_shifts(p):
        beta = s / (2 * c)
        pairs.append((by_series(v, beta).value, hyp2f1_neg1_integral(v, beta)))
    return pairs


# --------------------------------------------------------------------------
# Integral identities


def _integral_ok(spec: IntegralSpec) -> bool:
    if spec.family is Family.COS_OVER_COSH_PI:
        return True
    if not (spec.c > 0 and spec.decay > 0):
        return False
    if spec.origin_exponent <= -1.0 + POLE_MARGIN:
        return False
    if spec.family is Family.SINH_COSH_OVER_SINH_V and not _off_even(spec.v):
        return False
    if spec.family in (
        Family.SINH_SINH_OVER_SINH_V,
        Family.COSH_COSH_OVER_SINH_V,
    ) and not _off_odd(spec.v):
        return False
    return _series_ok(lambda: series_form(spec).spec)


def _integral_domain(spec_of: SpecOf, extra: Predicate | None = None) -> Predicate:
    def domain(p: ParamPoint) -> bool:
        if extra is not None and not extra(p):
            return False
        return _integral_ok(spec_of(p))

    return _guarded(domain)


def _bare_series(spec_of: SpecOf) -> Recipe:
    def recipe(p: ParamPoint, ctx: EvalContext) -> Leg:
        return _leg(_series(series_form(spec_of(p)).spec, ctx))

    return recipe


def _prefactor_series(spec_of: SpecOf, reduce: bool = False) -> Recipe:
    def recipe(p: ParamPoint, ctx: EvalContext) -> Leg:
        form = series_form(spec_of(p))
        spec = form.spec.reduced() if reduce else form.spec
        return _leg(_series(spec, ctx), form.prefactor)

    return recipe


def _closed(spec_of: SpecOf, form: str | None = None) -> Recipe:
    def recipe(p: ParamPoint, ctx: EvalContext) -> float:
        return closed_form(spec_of(p), form)

    return recipe


def _quadrature(spec_of: SpecOf) -> Recipe:
    def recipe(p: ParamPoint, ctx: EvalContext) -> float:
        return integrate(spec_of(p), ctx.quad_tol).value

    return recipe


def _quadrature_over_prefactor(spec_of: SpecOf) -> Recipe:
    def recipe(p: ParamPoint, ctx: EvalContext) -> float:
        spec = spec_of(p)
        return integrate(spec, ctx.quad_tol).value / series_form(spec).prefactor

    return recipe


def _series_omega(spec_of: SpecOf) -> Callable[[ParamPoint], float | None]:
    def omega(p: ParamPoint) -> float | None:
        return series_form(spec_of(p)).spec.omega

    return omega


def _spec_omega(
    build: Callable[[ParamPoint], HypergeometricSpec]
) -> Callable[[ParamPoint], float | None]:
    def omega(p: ParamPoint) -> float | None:
        spec = build(p)
        return spec.omega if abs(spec.z) == 1.0 else None

    return omega


def _decay(spec_of: SpecOf) -> Callable[[ParamPoint], float]:
    return lambda p: spec_of(p).decay


def _pair_regime(first: str, second: str) -> Callable[[ParamPoint], str]:
    """'real' when first² >= second², else 'conjugate' (σ pair regime)."""

    def regime(p: ParamPoint) -> str:
        x, y = p.values(first, second)
        return "real" if x * x >= y * y else "conjugate"

    return regime


def _integral_identity(
    identity_id: str,
    params: tuple[str, ...],
    spec_of: SpecOf,
    provenance: str,
    *,
    kind: Kind = Kind.INTEGRAL,
    form: str | None = None,
    reduce: bool = False,
    extra: Predicate | None = None,
    regime: Callable[[ParamPoint], str] | None = None,
) -> Identity:
    return Identity(
        id=identity_id,
        params=params,
        lhs=_prefactor_series(spec_of, reduce=reduce),
        rhs=_closed(spec_of, form),
        domain=_integral_domain(spec_of, extra),
        provenance=provenance,
        kind=kind,
        integral=_quadrature(spec_of),
        omega=_series_omega(spec_of),
        decay=_decay(spec_of),
        regime=regime,
    )


def _theorem(
    identity_id: str,
    params: tuple[str, ...],
    spec_of: SpecOf,
    rhs: Recipe,
    provenance: str,
    extra: Predicate,
    regime: Callable[[ParamPoint], str] | None = None,
) -> Identity:
    return Identity(
        id=identity_id,
        params=params,
        lhs=_bare_series(spec_of),
        rhs=rhs,
        domain=_integral_domain(spec_of, extra),
        provenance=provenance,
        kind=Kind.THEOREM,
        integral=_quadrature_over_prefactor(spec_of),
        omega=_series_omega(spec_of),
        decay=_decay(spec_of),
        regime=regime,
    )


def _with_v(
    family: Family, v: float, *, b_zero: bool = False, b_equals_c: bool = False
) -> SpecOf:
    def spec_of(p: ParamPoint) -> IntegralSpec:
        if b_zero:
            a, c = p.values("a", "c")
            return IntegralSpec(family, a, 0.0, c, v)
        if b_equals_c:
            a, c = p.values("a", "c")
            return IntegralSpec(family, a, c, c, v)
        a, b, c = p.values("a", "b", "c")
        return IntegralSpec(family, a, b, c, v)

    return spec_of


def _b_zero(family: Family) -> SpecOf:
    def spec_of(p: ParamPoint) -> IntegralSpec:
        a, c, v = p.values("a", "c", "v")
        return IntegralSpec(family, a, 0.0, c, v)

    return spec_of


def _squared_sinh(p: ParamPoint) -> IntegralSpec:
    a, c = p.values("a", "c")
    return IntegralSpec(Family.SINH_SINH_OVER_SINH_V, a, a, c, 2.0)


def _cosh_sinh_over_cosh_squared(p: ParamPoint) -> IntegralSpec:
    a, b = p.values("a", "b")
    return IntegralSpec(Family.SINH_COSH_OVER_COSH_V, b, a, b, 2.0)


def _ramanujan(p: ParamPoint) -> IntegralSpec:
    (a,) = p.values("a")
    return IntegralSpec(Family.COS_OVER_COSH_PI, a)


# --------------------------------------------------------------------------
# Registry


def _series_identity(
    identity_id: str,
    params: tuple[str, ...],
    build: Callable[[ParamPoint], HypergeometricSpec],
    rhs: Recipe,
    domain: Predicate,
    provenance: str,
    *,
    factor: Callable[[ParamPoint], float] | None = None,
    kind: Kind = Kind.CLASSICAL,
) -> Identity:
    def lhs(p: ParamPoint, ctx: EvalContext) -> Leg:
        scale = factor(p) if factor is not None else 1.0
        return _leg(_series(build(p), ctx), scale)

    def full_domain(p: ParamPoint) -> bool:
        return domain(p) and _series_ok(lambda: build(p))

    return Identity(
        id=identity_id,
        params=params,
        lhs=lhs,
        rhs=rhs,
        domain=_guarded(full_domain),
        provenance=provenance,
        kind=kind,
        omega=_spec_omega(build),
    )


# Single-parameter recipes read one named field.


def _x(p: ParamPoint) -> float:
    return p.values("x")[0]


def _z(p: ParamPoint) -> float:
    return p.values("z")[0]


def _positive_x(p: ParamPoint) -> bool:
    return _x(p) > 0


def _vanishing_domain(p: ParamPoint) -> bool:
    a, b = p.values("a", "b")
    return b < 0 and _off_poles(a / 2, 1 + a - b)


def _kummer_type_domain(p: ParamPoint) -> bool:
    a, b = p.values("a", "b")
    return b < 0.5 and _off_poles(a / 2, 1 + a - b, (1 + a) / 2)


def _gauss_spec(p: ParamPoint) -> HypergeometricSpec:
    a, b, c = p.values("a", "b", "c")
    return _pfq((a, b, c), (1 + b, 1 + c), 1.0)


def _classical_4f3_neg1_domain(p: ParamPoint) -> bool:
    a, c, d = p.values("a", "c", "d")
    return a - 2 * c - 2 * d > -2 and _off_poles(a / 2, 1 + a - c, 1 + a - d)


def _classical_4f3_pos1_domain(p: ParamPoint) -> bool:
    a, c, d = p.values("a", "c", "d")
    h = (1 + a) / 2
    return 2 * c + 2 * d - a < 1 and _off_poles(1 + a - c, 1 + a - d, h, h - c - d)


def _classical_5f4_domain(p: ParamPoint) -> bool:
    a, c, d, e = p.values("a", "c", "d", "e")
    return a - c - d - e > -1 and _off_poles(
        1 + a - c, 1 + a - d, 1 + a - e, 1 + a - c - d - e
    )


def _positive_and_apart(p: ParamPoint) -> bool:
    a, b = p.values("a", "b")
    return a > 0 and b > 0 and _apart(a, b)


def _digamma_diff_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    return a * b / (b - a) * (digamma(b) - digamma(a))


def _beta_diff_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    return a * b / (b - a) * (lowercase_beta(a) - lowercase_beta(b))


def _trigamma_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    x = _x(p)
    return x * x * trigamma(x)


def _beta_derivative_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    x = _x(p)
    return -x * x * beta_derivative(x)


def _beta_series_spec(p: ParamPoint) -> HypergeometricSpec:
    x = _x(p)
    return _pfq((1.0, x), (1 + x,), -1.0)


def _tan_factor(p: ParamPoint) -> float:
    z = _z(p)
    return 8 * z / (math.pi**2 - 4 * z * z)


def _sec_factor(p: ParamPoint) -> float:
    z = _z(p)
    return 4 * math.pi / (math.pi**2 - 4 * z * z)


def _incomplete_beta_spec(p: ParamPoint) -> HypergeometricSpec:
    a, b, z = p.values("a", "b", "z")
    return _pfq((a, b), (1 + b,), z)


def _incomplete_beta_rhs(p: ParamPoint, ctx: EvalContext) -> float:
    a, b, z = p.values("a", "b", "z")
    return b / z**b * incomplete_beta(z, b, 1 - a)


def _incomplete_beta_domain(p: ParamPoint) -> bool:
    a, b, z = p.values("a", "b", "z")
    return 0 < z <= 1 and b > 0 and (z < 1 or a < 1)


def _hyp2f1_neg1_spec(p: ParamPoint) -> HypergeometricSpec:
    a, b = p.values("a", "b")
    return _pfq((a, b), (1 + b,), -1.0)


def _hyp2f1_quadrature(p: ParamPoint, ctx: EvalContext) -> float:
    a, b = p.values("a", "b")
    return hyp2f1_neg1_integral(a, b)


def _classical() -> list[Identity]:
    def series_leg(build: Callable[[ParamPoint], HypergeometricSpec]) -> Recipe:
        return lambda p, ctx: _leg(_series(build(p), ctx))

    hyp2f1_rep = _series_identity(
        "hyp2f1_neg1_integral",
        ("a", "b"),
        _hyp2f1_neg1_spec,
        _hyp2f1_quadrature,
        lambda p: p.values("b")[0] > 0,
        "2F1(a,b;1+b;-1) = b ∫₀¹ t^(b-1) (1+t)^(-a) dt",
        kind=Kind.INTEGRAL,
    )
    return [
        Identity(
            id="dixon_3f2",
            params=("a", "b", "c"),
            lhs=series_leg(_dixon_spec),
            rhs=_dixon_rhs,
            domain=_guarded(_dixon_domain),
            provenance="Dixon's theorem: well-poised 3F2 at z = 1",
            omega=_spec_omega(_dixon_spec),
        ),
        _series_identity(
            "vanishing_3f2",
            ("a", "b"),
            lambda p: _well_poised_3f2(p, 1.0),
            lambda p, ctx: 0.0,
            _vanishing_domain,
            "vanishing very-well-poised 3F2 at z = 1 (b < 0)",
        ),
        _series_identity(
            "kummer_type_3f2_neg1",
            ("a", "b"),
            lambda p: _well_poised_3f2(p, -1.0),
            _kummer_type_rhs,
            _kummer_type_domain,
            "very-well-poised 3F2 at z = -1 (Kummer type, b < 1/2)",
        ),
        Identity(
            id="split_3f2_two_2f1",
            params=("a", "b", "c", "z"),
            lhs=series_leg(_split_lhs_spec),
            rhs=_split_rhs,
            domain=_guarded(_split_domain),
            provenance="3F2(a,b,c;1+b,1+c;z) as a weighted difference of two 2F1",
            omega=_split_omega,
        ),
        _series_identity(
            "gauss_combined_3f2_1",
            ("a", "b", "c"),
            _gauss_spec,
            _gauss_combined_rhs,
            _gauss_combined_domain,
            "3F2 split summed at z = 1 by Gauss's theorem (a < 1)",
        ),
        _series_identity(
            "classical_4f3_neg1",
            ("a", "c", "d"),
            lambda p: _classical_4f3(p, -1.0),
            _classical_4f3_neg1_rhs,
            _classical_4f3_neg1_domain,
            "very-well-poised 4F3 at z = -1",
        ),
        _series_identity(
            "classical_4f3_pos1",
            ("a", "c", "d"),
            lambda p: _classical_4f3(p, 1.0),
            _classical_4f3_pos1_rhs,
            _classical_4f3_pos1_domain,
            "very-well-poised 4F3 at z = 1",
        ),
        _series_identity(
            "classical_5f4_pos1",
            ("a", "c", "d", "e"),
            _classical_5f4_spec,
            _classical_5f4_rhs,
            _classical_5f4_domain,
            "very-well-poised 5F4 at z = 1",
        ),
        _series_identity(
            "trigamma_3f2",
            ("x",),
            lambda p: _squared_3f2(_x(p), 1.0),
            _trigamma_rhs,
            _positive_x,
            "3F2(1,x,x;1+x,1+x;1) = x² Ψ′(x)",
        ),
        _series_identity(
            "digamma_diff_3f2",
            ("a", "b"),
            lambda p: _two_point_3f2(p, 1.0),
            _digamma_diff_rhs,
            _positive_and_apart,
            "3F2(1,a,b;1+a,1+b;1) = ab/(b-a) [Ψ(b) - Ψ(a)]",
        ),
        _series_identity(
            "beta_diff_3f2_neg1",
            ("a", "b"),
            lambda p: _two_point_3f2(p, -1.0),
            _beta_diff_rhs,
            _positive_and_apart,
            "3F2(1,a,b;1+a,1+b;-1) = ab/(b-a) [β(a) - β(b)]",
        ),
        _series_identity(
            "beta_derivative_3f2_neg1",
            ("x",),
            lambda p: _squared_3f2(_x(p), -1.0),
            _beta_derivative_rhs,
            _positive_x,
            "3F2(1,x,x;1+x,1+x;-1) = -x² β′(x)",
        ),
        _series_identity(
            "beta_series_2f1_neg1",
            ("x",),
            _beta_series_spec,
            lambda p, ctx: lowercase_beta(_x(p)),
            _positive_x,
            "β(x) = (1/x) 2F1(1,x;1+x;-1)",
            factor=lambda p: 1.0 / _x(p),
        ),
        _series_identity(
            "tan_form",
            ("z",),
            lambda p: _tan_series(_z(p)),
            lambda p, ctx: math.tan(_z(p)),
            _inside_half_period,
            "tan z as a 3F2 at z = 1",
            factor=_tan_factor,
        ),
        _series_identity(
            "sec_form",
            ("z",),
            lambda p: _sec_series(_z(p)),
            lambda p, ctx: 1.0 / math.cos(_z(p)),
            _inside_half_period,
            "sec z as a 4F3 at z = -1",
            factor=_sec_factor,
        ),
        Identity(
            id="sec_squared_form",
            params=("z",),
            lhs=_sec_squared_lhs,
            rhs=lambda p, ctx: 1.0 / math.cos(_z(p)) ** 2,
            domain=_guarded(_inside_half_period),
            provenance="sec² z as a sum of two 3F2 at z = 1",
            omega=lambda p: 1.0,
        ),
        _series_identity(
            "incomplete_beta_2f1",
            ("a", "b", "z"),
            _incomplete_beta_spec,
            _incomplete_beta_rhs,
            _incomplete_beta_domain,
            "2F1(a,b;1+b;z) = b z^(-b) B_z(b, 1-a)",
        ),
        hyp2f1_rep,
    ]


def _v_below(limit: float, *, odd: bool = False, even: bool = False) -> Predicate:
    """0 < v < limit with both numerator scales nonzero; optionally v kept off
    the odd (cos) or even (sin) integers."""

    def check(p: ParamPoint) -> bool:
        a, b, v = p.values("a", "b", "v")
        if not (0 < v < limit and _nonzero(a, b)):
            return False
        if odd and not _off_odd(v):
            return False
        return not even or _off_even(v)

    return check


def _unit_ok(p: ParamPoint) -> bool:
    a, b, c = p.values("a", "b", "c")
    return b > 0 and _nonzero(a, c) and b - abs(a) - abs(c) >= POLE_MARGIN * b


def _theorems() -> list[Identity]:
    four = ("a", "b", "c", "v")
    three = ("a", "b", "c")
    general = [
        (
            "thm1_6F5_neg1",
            Family.SINH_SINH_OVER_COSH_V,
            _thm1_rhs,
            _v_below(4.0),
            "6F5(-1) from ∫ sinh(ax)sinh(bx)/cosh^v(cx)",
        ),
        (
            "thm2_6F5_pos1",
            Family.SINH_SINH_OVER_SINH_V,
            _thm2_rhs,
            _v_below(3.0, odd=True),
            "6F5(1) from ∫ sinh(ax)sinh(bx)/sinh^v(cx)",
        ),
        (
            "thm4_7F6_pos1",
            Family.SINH_COSH_OVER_SINH_V,
            _thm4_rhs,
            _v_below(2.0, even=True),
            "7F6(1) from ∫ sinh(ax)cosh(bx)/sinh^v(cx)",
        ),
        (
            "thm7_8F7_neg1",
            Family.COSH_COSH_OVER_COSH_V,
            _thm7_rhs,
            _v_below(2.0),
            "8F7(-1) from ∫ cosh(ax)cosh(bx)/cosh^v(cx)",
        ),
        (
            "thm8_8F7_pos1",
            Family.COSH_COSH_OVER_SINH_V,
            _thm8_rhs,
            _v_below(1.0, odd=True),
            "8F7(1) from ∫ cosh(ax)cosh(bx)/sinh^v(cx)",
        ),
    ]
    # b is the denominator scale and c the second numerator scale here
    unit = [
        (
            "thm3_6F5_neg1",
            Family.SINH_SINH_OVER_COSH_V,
            _thm3_rhs,
            "6F5(-1) from ∫ sinh(ax)sinh(cx)/cosh(bx)",
        ),
        (
            "thm5_7F6_pos1",
            Family.SINH_COSH_OVER_SINH_V,
            _thm5_rhs,
            "7F6(1) from ∫ sinh(ax)cosh(cx)/sinh(bx)",
        ),
        (
            "thm6_7F6_neg1",
            Family.SINH_COSH_OVER_COSH_V,
            _thm6_rhs,
            "7F6(-1) from ∫ sinh(ax)cosh(cx)/cosh(bx)",
        ),
        (
            "thm9_8F7_neg1",
            Family.COSH_COSH_OVER_COSH_V,
            _thm9_rhs,
            "8F7(-1) from ∫ cosh(ax)cosh(cx)/cosh(bx)",
        ),
    ]

    entries = [
        _theorem(
            identity_id,
            four,
            _family_spec(family),
            rhs,
            f"summation theorem: {statement}",
            extra,
            regime=(
                _pair_regime("a", "b")
                if family.numerators == ("sinh", "cosh")
                else None
            ),
        )
        for identity_id, family, rhs, extra, statement in general
    ]
    entries += [
        _theorem(
            identity_id,
            three,
            _unit_family_spec(family),
            rhs,
            f"summation theorem: {statement}",
            _unit_ok,
            regime=(
                _pair_regime("a", "c")
                if family.numerators == ("sinh", "cosh")
                else None
            ),
        )
        for identity_id, family, rhs, statement in unit
    ]
    for form, rhs in (("sec_beta", _thm10_sec_beta), ("digamma", _thm10_digamma)):
        entries.append(
            Identity(
                id=f"thm10_3F2_neg1_{form}",
                params=("a", "b"),
                lhs=lambda p, ctx: _leg(_series(_thm10_spec(p), ctx)),
                rhs=rhs,
                domain=_guarded(_thm10_domain),
                provenance=f"summation theorem: 3F2(-1), {form.replace('_', '/')} form",
                kind=Kind.THEOREM,
                integral=_thm10_integral,
                omega=_spec_omega(_thm10_spec),
            )
        )
    return sorted(entries, key=lambda entry: _theorem_number(entry.id))


def _theorem_number(identity_id: str) -> int:
    return int(identity_id[3:].split("_", 1)[0])


def _reductions() -> list[Identity]:
    sc_cosh = _family_spec(Family.SINH_COSH_OVER_COSH_V)

    def red2_extra(p: ParamPoint) -> bool:
        a, v = p.values("a", "v")
        # the four 2F1(v, s; 1+s; -1) converge for v < 2
        return 0 < v < 2 and _nonzero(a)

    return [
        Identity(
            id="red1_4F3_pos1",
            params=("a", "b"),
            lhs=_red1_lhs,
            rhs=_red1_rhs,
            domain=_guarded(_red1_domain),
            provenance="reduction: 4F3(1) = (9b²-a²)/(8b²) 3F2(1)",
            kind=Kind.REDUCTION,
            integral=_red1_integral,
            omega=lambda p: 1.0,
        ),
        Identity(
            id="red2_7F6_neg1",
            params=("a", "b", "c", "v"),
            lhs=_bare_series(sc_cosh),
            rhs=_red2_rhs,
            domain=_integral_domain(sc_cosh, red2_extra),
            provenance="reduction: 7F6(-1) as four 2F1(-1)",
            kind=Kind.REDUCTION,
            tolerance=REDUCTION_TOLERANCE,
            integral=_red2_integral,
            integral_tolerance=REDUCTION_TOLERANCE,
            constituents=_red2_constituents,
            omega=lambda p: 1.0 - p.values("v")[0],
            decay=_decay(sc_cosh),
            regime=_pair_regime("a", "b"),
        ),
    ]


_TRIANGLES = (
    (
        "sinh_sinh_over_cosh_v",
        Family.SINH_SINH_OVER_COSH_V,
        "sinh(ax)sinh(bx)/cosh^v(cx)",
    ),
    (
        "sinh_sinh_over_sinh_v",
        Family.SINH_SINH_OVER_SINH_V,
        "sinh(ax)sinh(bx)/sinh^v(cx)",
    ),
    (
        "sinh_cosh_over_cosh_v",
        Family.SINH_COSH_OVER_COSH_V,
        "sinh(ax)cosh(bx)/cosh^v(cx)",
    ),
    (
        "sinh_cosh_over_sinh_v",
        Family.SINH_COSH_OVER_SINH_V,
        "sinh(ax)cosh(bx)/sinh^v(cx)",
    ),
    (
        "cosh_cosh_over_cosh_v",
        Family.COSH_COSH_OVER_COSH_V,
        "cosh(ax)cosh(bx)/cosh^v(cx)",
    ),
    (
        "cosh_cosh_over_sinh_v",
        Family.COSH_COSH_OVER_SINH_V,
        "cosh(ax)cosh(bx)/sinh^v(cx)",
    ),
)


def _a_nonzero(p: ParamPoint) -> bool:
    return _nonzero(p.values("a")[0])


def _integrals() -> list[Identity]:
    four = ("a", "b", "c", "v")
    three = ("a", "b", "c")
    unit = 1.0
    triangles = [
        _integral_identity(
            f"triangle_{name}",
            four,
            _family_spec(family),
            f"∫₀^∞ {shape} dx: quadrature, series and product formula",
            regime=(
                _pair_regime("a", "b")
                if family.numerators == ("sinh", "cosh")
                else None
            ),
        )
        for name, family, shape in _TRIANGLES
    ]

    special = [
        _integral_identity(
            "secant_sinh_sinh_over_cosh2",
            ("a", "c"),
            _with_v(Family.SINH_SINH_OVER_COSH_V, 2.0, b_equals_c=True),
            "∫ sinh(ax)sinh(cx)/cosh²(cx) dx = aπ/(2c²) sec(πa/2c)",
            kind=Kind.SPECIAL,
            form="secant",
            reduce=True,
        ),
        _integral_identity(
            "tangent_sinh_over_sinh",
            ("a", "c"),
            _with_v(Family.SINH_SINH_OVER_SINH_V, 2.0, b_equals_c=True),
            "∫ sinh(ax)/sinh(cx) dx = π/(2c) tan(πa/2c), via a 4F3(1)",
            kind=Kind.SPECIAL,
            form="tangent",
            reduce=True,
        ),
        _integral_identity(
            "cotangent_sinh2_over_sinh2",
            ("a", "c"),
            _squared_sinh,
            "∫ sinh²(ax)/sinh²(cx) dx = [1 - (a/c)π cot((a/c)π)]/(2c)",
            kind=Kind.SPECIAL,
            form="cotangent",
            reduce=True,
            extra=_a_nonzero,
        ),
        _integral_identity(
            "digamma_sinh2_over_sinh2",
            ("a", "c"),
            _squared_sinh,
            "∫ sinh²(ax)/sinh²(cx) dx as a digamma difference",
            kind=Kind.SPECIAL,
            form="digamma_difference",
            reduce=True,
            extra=_a_nonzero,
        ),
        _integral_identity(
            "cosh_sinh_over_cosh2",
            ("a", "b"),
            _cosh_sinh_over_cosh_squared,
            "∫ cosh(ax)sinh(bx)/cosh²(bx) dx via a 5F4(-1)",
            kind=Kind.SPECIAL,
            reduce=True,
            regime=_pair_regime("b", "a"),
        ),
        _integral_identity(
            "sinh_over_cosh_v",
            ("a", "c", "v"),
            _b_zero(Family.SINH_COSH_OVER_COSH_V),
            "∫ sinh(ax)/cosh^v(cx) dx as a 3F2(-1) and as two 2F1(-1)",
            kind=Kind.SPECIAL,
            reduce=True,
        ),
        _integral_identity(
            "sinh_over_sinh_v",
            ("a", "c", "v"),
            _b_zero(Family.SINH_COSH_OVER_SINH_V),
            "∫ sinh(ax)/sinh^v(cx) dx: 3F2(1) and a Γ·sin closed form",
            kind=Kind.SPECIAL,
            form="single_gamma_sin",
            reduce=True,
        ),
        _integral_identity(
            "cosh_over_cosh_v",
            ("a", "c", "v"),
            _b_zero(Family.COSH_COSH_OVER_COSH_V),
            "∫ cosh(ax)/cosh^v(cx) dx: 4F3(-1) and a Γ product",
            kind=Kind.SPECIAL,
            form="single_gamma",
            reduce=True,
        ),
        _integral_identity(
            "cosh_over_sinh_v",
            ("a", "c", "v"),
            _b_zero(Family.COSH_COSH_OVER_SINH_V),
            "∫ cosh(ax)/sinh^v(cx) dx: 4F3(1) and a Γ·cos closed form",
            kind=Kind.SPECIAL,
            form="single_gamma_cos",
            reduce=True,
        ),
        _integral_identity(
            "tangent_sinh_over_sinh_unit",
            ("a", "c"),
            _with_v(Family.SINH_COSH_OVER_SINH_V, unit, b_zero=True),
            "∫ sinh(ax)/sinh(cx) dx = π/(2c) tan(πa/2c), via a 3F2(1)",
            kind=Kind.SPECIAL,
            form="tangent",
            reduce=True,
        ),
        _integral_identity(
            "secant_cosh_over_cosh_unit",
            ("a", "c"),
            _with_v(Family.COSH_COSH_OVER_COSH_V, unit, b_zero=True),
            "∫ cosh(ax)/cosh(cx) dx = π/(2c) sec(πa/2c)",
            kind=Kind.SPECIAL,
            form="secant",
            reduce=True,
        ),
        _integral_identity(
            "sec_beta_sinh_over_cosh_unit",
            ("a", "c"),
            _with_v(Family.SINH_COSH_OVER_COSH_V, unit, b_zero=True),
            "∫ sinh(ax)/cosh(cx) dx = π/(2c) sec(πa/2c) - β((a+c)/2c)/c",
            kind=Kind.SPECIAL,
            form="sec_minus_beta",
            reduce=True,
        ),
        _integral_identity(
            "four_digamma_sinh_over_cosh_unit",
            ("a", "c"),
            _with_v(Family.SINH_COSH_OVER_COSH_V, unit, b_zero=True),
            "∫ sinh(ax)/cosh(cx) dx as four digamma values",
            kind=Kind.SPECIAL,
            form="four_digamma",
            reduce=True,
        ),
        _integral_identity(
            "ramanujan_cos_over_cosh",
            ("a",),
            _ramanujan,
            "Ramanujan: ∫ cos(2ax)/cosh(πx) dx = ½ sech(a)",
            kind=Kind.SPECIAL,
        ),
        _integral_identity(
            "unit_v_sinh_sinh_over_cosh",
            three,
            _with_v(Family.SINH_SINH_OVER_COSH_V, unit),
            "∫ sinh(ax)sinh(bx)/cosh(cx) dx as a secant difference",
            kind=Kind.SPECIAL,
            form="sec_difference",
        ),
        _integral_identity(
            "unit_v_sinh_cosh_over_sinh",
            three,
            _with_v(Family.SINH_COSH_OVER_SINH_V, unit),
            "∫ sinh(ax)cosh(bx)/sinh(cx) dx as a tangent sum",
            kind=Kind.SPECIAL,
            form="tan_sum",
            regime=_pair_regime("a", "b"),
        ),
        _integral_identity(
            "unit_v_sinh_cosh_over_cosh",
            three,
            _with_v(Family.SINH_COSH_OVER_COSH_V, unit),
            "∫ sinh(ax)cosh(bx)/cosh(cx) dx as secants minus lowercase betas",
            kind=Kind.SPECIAL,
            form="sec_sum_minus_beta",
            regime=_pair_regime("a", "b"),
        ),
        _integral_identity(
            "unit_v_cosh_cosh_over_cosh",
            three,
            _with_v(Family.COSH_COSH_OVER_COSH_V, unit),
            "∫ cosh(ax)cosh(bx)/cosh(cx) dx as a secant sum",
            kind=Kind.SPECIAL,
            form="sec_sum",
        ),
    ]
    return triangles + special


@lru_cache(maxsize=1)
def registry() -> tuple[Identity, ...]:
    """Every registered identity, in a stable order."""
    entries = (*_classical(), *_theorems(), *_reductions(), *_integrals())
    ids = [entry.id for entry in entries]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate identity ids in registry")
    logger.debug("Registry holds %d identities", len(entries))
    return entries


def get(identity_id: str) -> Identity:
    for identity in registry():
        if identity.id == identity_id:
            return identity
    raise DomainError(f"unknown identity {identity_id!r}")


def select(pattern: str | None = None) -> list[Identity]:
    """Identities whose id matches the glob ``pattern`` (all when None)."""
    if not pattern:
        return list(registry())
    return [i for i in registry() if fnmatch.fnmatchcase(i.id, pattern)]


# --------------------------------------------------------------------------
# Checking


def _relative(residual: float, reference: float) -> float:
    return residual / (1.0 + abs(reference))


def check(
    identity: Identity,
    p: ParamPoint,
    series_tol: float = DEFAULT_TOL,
    quad_tol: float = DEFAULT_QUAD_TOL,
    *,
    threshold: float | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    index: int = 0,
) -> VerificationRecord:
    """Evaluate every leg of ``identity`` at ``p`` and compare them.

    Raises:
        DomainError: ``p`` is outside the identity's domain
        NonConvergedError: a series leg did not reach ``series_tol``
    """
    if not identity.domain(p):
        raise DomainError(f"{identity.id}: ({p}) lies outside the domain")

    ctx = EvalContext(series_tol, quad_tol, max_terms)
    lhs = _unpack(identity.lhs(p, ctx))
    rhs = _unpack(identity.rhs(p, ctx))
    abs_residual = abs(lhs.value - rhs.value)
    rel_residual = _relative(abs_residual, rhs.value)
    limit = identity.tolerance if threshold is None else threshold
    passed = math.isfinite(rel_residual) and rel_residual <= limit

    integral_value: float | None = None
    integral_residual: float | None = None
    if identity.integral is not None:
        integral_value = _unpack(identity.integral(p, ctx)).value
        integral_residual = _relative(abs(integral_value - rhs.value), rhs.value)
        passed = (
            passed
            and math.isfinite(integral_residual)
            and integral_residual <= identity.integral_tolerance
        )

    constituent_residual: float | None = None
    if identity.constituents is not None:
        constituent_residual = max(
            _relative(abs(series - integral), integral)
            for series, integral in identity.constituents(p, ctx)
        )
        passed = (
            passed
            and math.isfinite(constituent_residual)
            and constituent_residual <= identity.constituent_tolerance
        )

    record = VerificationRecord(
        identity_id=identity.id,
        point=p,
        lhs=lhs.value,
        rhs=rhs.value,
        integral=integral_value,
        abs_residual=abs_residual,
        rel_residual=rel_residual,
        terms_used=lhs.terms_used + rhs.terms_used,
        status=Status.PASS if passed else Status.FAIL,
        integral_residual=integral_residual,
        constituent_residual=constituent_residual,
        index=index,
        regime=identity.regime(p) if identity.regime is not None else None,
    )
    logger.debug(
        "%s[%d] (%s): rel=%.3g %s",
        identity.id,
        index,
        p,
        rel_residual,
        record.status.value,
    )
    return record
