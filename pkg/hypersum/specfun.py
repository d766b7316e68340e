"""Scalar special-function kernel.

Gamma family (Lanczos with reflection), Pochhammer algebra including the
real-valued step for conjugate parameter pairs, digamma and trigamma, the
lowercase beta function and the incomplete beta integral.

All functions are pure and safe to call from any number of threads.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from hypersum.errors import DomainError, PoleError
from hypersum.kronrod import integrate_interval

logger = logging.getLogger(__name__)

RealScalar = float

POLE_TOLERANCE = 1e-9
EULER_GAMMA = 0.57721566490153286060651209008240243

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_GAMMA_MAX_ARG = 171.62

_DIGAMMA_SHIFT = 10.0
_TRIGAMMA_SHIFT = 10.0
_INCOMPLETE_BETA_TOL = 1e-13


class PochhammerOverflow(RuntimeWarning):
    """A Pochhammer symbol left the double-precision range."""


@dataclass(frozen=True)
class ConjugatePair:
    """The parameter pair (re + i*im, re - i*im); stored with im >= 0."""

    re: float
    im: float = 0.0

    def __post_init__(self) -> None:
        if self.im < 0:
            object.__setattr__(self, "im", -self.im)

    @classmethod
    def from_complex(cls, value: complex) -> ConjugatePair:
        return cls(float(value.real), abs(float(value.imag)))

    @property
    def members(self) -> tuple[complex, complex]:
        return complex(self.re, self.im), complex(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0.0


def is_pole(x: float) -> bool:
    """True when ``x`` is within POLE_TOLERANCE of a nonpositive integer."""
    nearest = round(x)
    return nearest <= 0 and abs(x - nearest) < POLE_TOLERANCE


def _check_pole(x: float, name: str) -> None:
    if is_pole(x):
        raise PoleError(f"{name}({x!r}): argument is a nonpositive integer")


def sinpi(x: float) -> float:
    """sin(pi*x) with the argument reduced exactly around the nearest integer."""
    n = round(x)
    s = math.sin(math.pi * (x - n))
    return -s if n % 2 else s


def cospi(x: float) -> float:
    """cos(pi*x) with exact argument reduction."""
    n = round(x)
    c = math.cos(math.pi * (x - n))
    return -c if n % 2 else c


def _lanczos_sum(y: float) -> float:
    total = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        total += coeff / (y + i)
    return total


def gamma(x: RealScalar) -> RealScalar:
    """Γ(x) for real x off the nonpositive integers."""
    _check_pole(x, "gamma")
    if x > _GAMMA_MAX_ARG:
        raise OverflowError(f"gamma({x!r}) exceeds the double-precision range")
    if x < 0.5:
        if 1.0 - x > _GAMMA_MAX_ARG:
            log_abs, sign = log_abs_gamma(x)
            return sign * math.exp(log_abs)
        return math.pi / (sinpi(x) * gamma(1.0 - x))

    y = x - 1.0
    t = y + _LANCZOS_G + 0.5
    # split the power so the intermediate stays finite up to x ~ 171
    half_power = t ** (0.5 * (y + 0.5))
    value = _SQRT_2PI * _lanczos_sum(y) * (half_power * math.exp(-t)) * half_power
    if not math.isfinite(value):
        raise OverflowError(f"gamma({x!r}) exceeds the double-precision range")
    return value


def log_gamma(x: RealScalar) -> RealScalar:
    """ln Γ(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma({x!r}): argument must be positive")
    if x < 0.5:
        return math.log(math.pi) - math.log(sinpi(x)) - log_gamma(1.0 - x)
    y = x - 1.0
    t = y + _LANCZOS_G + 0.5
    return (y + 0.5) * math.log(t) - t + _LOG_SQRT_2PI + math.log(_lanczos_sum(y))


def log_abs_gamma(x: RealScalar) -> tuple[float, int]:
    """(ln|Γ(x)|, sign Γ(x)) for any real x off the poles."""
    _check_pole(x, "log_abs_gamma")
    if x > 0:
        return log_gamma(x), 1
    s = sinpi(x)
    return math.log(math.pi) - math.log(abs(s)) - log_gamma(1.0 - x), (
        1 if s > 0 else -1
    )


def gamma_ratio(numerators: Iterable[float], denominators: Iterable[float]) -> float:
    """ΠΓ(n)/ΠΓ(d) evaluated in log space with sign tracking.

    A denominator on a pole makes the ratio vanish (1/Γ = 0); a numerator on a
    pole raises PoleError.
    """
    denominators = list(denominators)
    if any(is_pole(d) for d in denominators):
        return 0.0
    total = 0.0
    sign = 1
    for n in numerators:
        log_abs, s = log_abs_gamma(n)
        total += log_abs
        sign *= s
    for d in denominators:
        log_abs, s = log_abs_gamma(d)
        total -= log_abs
        sign *= s
    return sign * math.exp(total)


def pochhammer(lam: RealScalar, n: int) -> RealScalar:
    """Rising factorial (λ)ₙ.

    Direct product for small n or near-pole λ, so nonpositive integer λ
    gives an exact zero; log-gamma difference for n > 50.
    """
    if n < 0:
        raise DomainError(f"pochhammer: n must be a nonnegative integer, got {n}")
    if n == 0:
        return 1.0

    if n > 50 and not is_pole(lam):
        log_hi, sign_hi = log_abs_gamma(lam + n)
        log_lo, sign_lo = log_abs_gamma(lam)
        exponent = log_hi - log_lo
        sign = sign_hi * sign_lo
        if exponent > 709.78:
            warnings.warn(
                f"pochhammer({lam!r}, {n}) overflows", PochhammerOverflow, stacklevel=2
            )
            return sign * math.inf
        return sign * math.exp(exponent)

    product = 1.0
    for k in range(n):
        product *= lam + k
        if product == 0.0:
            return 0.0
    if math.isinf(product):
        warnings.warn(
            f"pochhammer({lam!r}, {n}) overflows", PochhammerOverflow, stacklevel=2
        )
    return product


def pochhammer_ratio_step(pair: ConjugatePair, r: int) -> RealScalar:
    """(σ₁+r)(σ₂+r) = (re+r)² + im² for the conjugate pair (σ₁, σ₂)."""
    if r < 0:
        raise DomainError(f"pochhammer_ratio_step: r must be >= 0, got {r}")
    shifted = pair.re + r
    if pair.im == 0.0 and abs(shifted) < POLE_TOLERANCE:
        raise PoleError(f"pochhammer_ratio_step: {pair} has a zero factor at r={r}")
    return shifted * shifted + pair.im * pair.im


def digamma(x: RealScalar) -> RealScalar:
    """Ψ(x): upward recurrence to x >= 10 then the asymptotic expansion."""
    _check_pole(x, "digamma")
    if x < 0:
        # Ψ(1-x) - Ψ(x) = π cot(πx)
        return digamma(1.0 - x) - math.pi * cospi(x) / sinpi(x)

    result = 0.0
    while x < _DIGAMMA_SHIFT:
        result -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = inv2 * (
        1 / 12
        - inv2
        * (
            1 / 120
            - inv2
            * (
                1 / 252
                - inv2 * (1 / 240 - inv2 * (1 / 132 - inv2 * (691 / 32760 - inv2 / 12)))
            )
        )
    )
    return result + math.log(x) - 0.5 * inv - series


def trigamma(x: RealScalar) -> RealScalar:
    """Ψ′(x) = Σ 1/(x+k)²: direct sum to x >= 10 then the Euler-Maclaurin tail."""
    _check_pole(x, "trigamma")
    if x < 0:
        # Ψ′(1-x) + Ψ′(x) = π² / sin²(πx)
        return (math.pi / sinpi(x)) ** 2 - trigamma(1.0 - x)

    result = 0.0
    while x < _TRIGAMMA_SHIFT:
        result += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = inv + 0.5 * inv2 + inv * inv2 * (
        1 / 6
        - inv2
        * (
            1 / 30
            - inv2
            * (
                1 / 42
                - inv2
                * (1 / 30 - inv2 * (5 / 66 - inv2 * (691 / 2730 - inv2 * 7 / 6)))
            )
        )
    )
    return result + tail


def lowercase_beta(x: RealScalar) -> RealScalar:
    """β(x) = Σ(-1)ᵏ/(k+x) = ½[Ψ((1+x)/2) - Ψ(x/2)]."""
    _check_pole(x, "lowercase_beta")
    return 0.5 * (digamma(0.5 * (1.0 + x)) - digamma(0.5 * x))


def lowercase_beta_derivative(x: RealScalar) -> RealScalar:
    """β′(x) = ¼[Ψ′((1+x)/2) - Ψ′(x/2)]."""
    _check_pole(x, "lowercase_beta_derivative")
    return 0.25 * (trigamma(0.5 * (1.0 + x)) - trigamma(0.5 * x))


def _power_weight_integral(upper: float, p: float, q: float) -> float:
    """∫₀^upper t^(p-1) (1-t)^(q-1) dt for upper <= 1/2 and p > 0."""
    if upper <= 0.0:
        return 0.0
    if p < 1.0:
        # t = u^(1/p) removes the t^(p-1) endpoint singularity
        def transformed(u: np.ndarray) -> np.ndarray:
            return np.power(1.0 - np.power(u, 1.0 / p), q - 1.0) / p

        result = integrate_interval(
            transformed, 0.0, upper**p, _INCOMPLETE_BETA_TOL
        )
    else:

        def plain(t: np.ndarray) -> np.ndarray:
            return np.power(t, p - 1.0) * np.power(1.0 - t, q - 1.0)

        result = integrate_interval(plain, 0.0, upper, _INCOMPLETE_BETA_TOL)
    return result.value


def incomplete_beta(z: RealScalar, alpha: RealScalar, beta_p: RealScalar) -> RealScalar:
    """B_z(α, β) = ∫₀ᶻ t^(α-1) (1-t)^(β-1) dt.

    Args:
        z: upper limit, 0 < z <= 1
        alpha: exponent parameter at t = 0, must be positive
        beta_p: exponent parameter at t = 1, must be positive when z = 1
    """
    if not 0.0 < z <= 1.0:
        raise DomainError(f"incomplete_beta: z must lie in (0, 1], got {z!r}")
    if not alpha > 0:
        raise DomainError(f"incomplete_beta: alpha must be positive, got {alpha!r}")
    if z == 1.0 and not beta_p > 0:
        raise DomainError("incomplete_beta: beta_p must be positive when z = 1")

    if z <= 0.5:
        return _power_weight_integral(z, alpha, beta_p)

    head = _power_weight_integral(0.5, alpha, beta_p)
    if beta_p > 0:
        # mirror s = 1 - t so the (1-t)^(β-1) end gets the same treatment
        return (
            head
            + _power_weight_integral(0.5, beta_p, alpha)
            - _power_weight_integral(1.0 - z, beta_p, alpha)
        )

    def plain(t: np.ndarray) -> np.ndarray:
        return np.power(t, alpha - 1.0) * np.power(1.0 - t, beta_p - 1.0)

    return head + integrate_interval(plain, 0.5, z, _INCOMPLETE_BETA_TOL).value
