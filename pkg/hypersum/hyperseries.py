"""Generalized hypergeometric series pFq(z) for real parameters and real z.

Terms come from the multiplicative recurrence

    t[n+1] = t[n] * Π(α+n) / Π(β+n) * z / (n+1)

generated in numpy chunks. A conjugate parameter pair contributes the real
factor (re+n)² + im². Convergence on the unit circle follows the ω criterion
(ω = Σβ - Σα). Slow alternating series at z = -1 are finished with the Euler
transformation, slow series at z = +1 with Richardson extrapolation in the
known tail exponents ω, ω+1, ...
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Union

import numpy as np

from hypersum.errors import (
    DivergentError,
    DomainError,
    NonConvergedError,
    NotAlternatingError,
    PoleError,
)
from hypersum.specfun import ConjugatePair, is_pole

logger = logging.getLogger(__name__)

Parameter = Union[float, ConjugatePair]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 20_000

_CHUNK = 512
_STOP_RUN = 3
_CHECKPOINT = 2048
_EULER_MIN_HEAD = 40
_EULER_TAIL = 48
_RICHARDSON_MIN_START = 64
_CANCEL_TOL = 1e-12
_EPS = float(np.finfo(float).eps)


class ConvergenceTag(str, Enum):
    ENTIRE_ARGUMENT = "EntireArgument"
    INSIDE_DISK = "InsideDisk"
    ABSOLUTELY_CONVERGENT_ON_CIRCLE = "AbsolutelyConvergentOnCircle"
    CONDITIONALLY_CONVERGENT = "ConditionallyConvergent"
    DIVERGENT = "Divergent"


@dataclass(frozen=True)
class ConvergenceClass:
    tag: ConvergenceTag
    omega: float

    def __str__(self) -> str:
        return f"{self.tag.value} (omega={self.omega:.6g})"


def _coerce(value: Parameter | complex | int) -> Parameter:
    if isinstance(value, ConjugatePair):
        return value
    if isinstance(value, complex):
        return ConjugatePair.from_complex(value)
    return float(value)


def _count(params: Sequence[Parameter]) -> int:
    return sum(2 if isinstance(x, ConjugatePair) else 1 for x in params)


def _weight(x: Parameter) -> float:
    return 2.0 * x.re if isinstance(x, ConjugatePair) else x


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters and argument of pFq(α₁..αₚ; β₁..β_q; z).

    A ConjugatePair entry stands for two parameters, re ± i·im.
    """

    numerators: tuple[Parameter, ...]
    denominators: tuple[Parameter, ...]
    z: float

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "numerators", tuple(_coerce(x) for x in self.numerators)
        )
        object.__setattr__(
            self, "denominators", tuple(_coerce(x) for x in self.denominators)
        )
        object.__setattr__(self, "z", float(self.z))

        for beta in self.denominators:
            if isinstance(beta, ConjugatePair):
                if beta.is_real and is_pole(beta.re):
                    raise PoleError(f"denominator pair {beta} sits on a pole")
            elif is_pole(beta):
                raise PoleError(f"denominator parameter {beta!r} is in Z0-")
        if self.p > self.q + 1:
            raise DomainError(
                f"{self.p}F{self.q}: at most q+1 numerator parameters are supported"
            )

    @property
    def p(self) -> int:
        return _count(self.numerators)

    @property
    def q(self) -> int:
        return _count(self.denominators)

    @property
    def omega(self) -> float:
        return math.fsum(_weight(b) for b in self.denominators) - math.fsum(
            _weight(a) for a in self.numerators
        )

    @property
    def terminating_degree(self) -> int | None:
        """Degree m of the polynomial when a numerator equals -m, else None."""
        degrees = []
        for alpha in self.numerators:
            value = alpha.re if isinstance(alpha, ConjugatePair) else alpha
            if isinstance(alpha, ConjugatePair) and not alpha.is_real:
                continue
            if is_pole(value):
                degrees.append(-round(value))
        return min(degrees) if degrees else None

    @property
    def param_scale(self) -> float:
        sizes = [1.0]
        for x in self.numerators + self.denominators:
            if isinstance(x, ConjugatePair):
                sizes.extend((abs(x.re), x.im))
            else:
                sizes.append(abs(x))
        return max(sizes)

    def reduced(self) -> HypergeometricSpec:
        """Cancel equal numerator/denominator parameters pairwise."""

        def split(params: Sequence[Parameter]) -> list[Parameter]:
            out: list[Parameter] = []
            for x in params:
                if isinstance(x, ConjugatePair) and x.is_real:
                    out.extend((x.re, x.re))
                else:
                    out.append(x)
            return out

        nums = split(self.numerators)
        dens = split(self.denominators)
        kept: list[Parameter] = []
        for alpha in nums:
            match = next((i for i, beta in enumerate(dens) if _same(alpha, beta)), None)
            if match is None:
                kept.append(alpha)
            else:
                del dens[match]
        return HypergeometricSpec(tuple(kept), tuple(dens), self.z)

    def __str__(self) -> str:
        def fmt(x: Parameter) -> str:
            if isinstance(x, ConjugatePair):
                return f"{x.re:g}±{x.im:g}i"
            return f"{x:g}"

        nums = ", ".join(fmt(x) for x in self.numerators)
        dens = ", ".join(fmt(x) for x in self.denominators)
        return f"{self.p}F{self.q}({nums}; {dens}; {self.z:g})"


def _same(x: Parameter, y: Parameter) -> bool:
    if isinstance(x, ConjugatePair) != isinstance(y, ConjugatePair):
        return False
    if isinstance(x, ConjugatePair) and isinstance(y, ConjugatePair):
        return abs(x.re - y.re) <= _CANCEL_TOL and abs(x.im - y.im) <= _CANCEL_TOL
    assert isinstance(x, float) and isinstance(y, float)
    return abs(x - y) <= _CANCEL_TOL * max(1.0, abs(x))


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    error_estimate: float
    convergence: ConvergenceClass
    accelerated: bool = False
    method: str = "direct"


def classify(spec: HypergeometricSpec) -> ConvergenceClass:
    """Assign the convergence class of the infinite series."""
    omega = spec.omega
    if spec.p <= spec.q:
        return ConvergenceClass(ConvergenceTag.ENTIRE_ARGUMENT, omega)
    z = spec.z
    if abs(z) < 1.0:
        return ConvergenceClass(ConvergenceTag.INSIDE_DISK, omega)
    if abs(z) == 1.0:
        if omega > 0:
            return ConvergenceClass(
                ConvergenceTag.ABSOLUTELY_CONVERGENT_ON_CIRCLE, omega
            )
        if z < 0 and omega > -1:
            return ConvergenceClass(ConvergenceTag.CONDITIONALLY_CONVERGENT, omega)
    return ConvergenceClass(ConvergenceTag.DIVERGENT, omega)


def _ratios(spec: HypergeometricSpec, start: int, count: int) -> np.ndarray:
    """t[n+1]/t[n] for n = start .. start+count-1."""
    n = np.arange(start, start + count, dtype=float)
    ratio = spec.z / (n + 1.0)
    for alpha in spec.numerators:
        if isinstance(alpha, ConjugatePair):
            ratio = ratio * ((alpha.re + n) ** 2 + alpha.im**2)
        else:
            ratio = ratio * (alpha + n)
    for beta in spec.denominators:
        if isinstance(beta, ConjugatePair):
            ratio = ratio / ((beta.re + n) ** 2 + beta.im**2)
        else:
            ratio = ratio / (beta + n)
    return ratio


def _term_chunks(
    spec: HypergeometricSpec, limit: int, chunk: int = _CHUNK
) -> Iterator[tuple[int, np.ndarray]]:
    last = 1.0
    lo = 0
    while lo < limit:
        hi = min(lo + chunk, limit)
        if lo == 0:
            block = np.concatenate(([1.0], np.cumprod(_ratios(spec, 0, hi - 1))))
        else:
            block = last * np.cumprod(_ratios(spec, lo - 1, hi - lo))
        if not np.all(np.isfinite(block)):
            raise NonConvergedError(f"{spec}: term magnitude overflowed near n={lo}")
        yield lo, block
        last = float(block[-1])
        lo = hi


def series_terms(spec: HypergeometricSpec, count: int) -> np.ndarray:
    """The first ``count`` terms t[0], t[1], ... of the series."""
    if count <= 0:
        return np.zeros(0)
    return np.concatenate([block for _, block in _term_chunks(spec, count)])


def _small_run(small: np.ndarray, carry: int, needed: int) -> tuple[int | None, int]:
    """First index ending ``needed`` consecutive True values, and the trailing run."""
    if small.size == 0:
        return None, carry
    idx = np.arange(small.size)
    last_break = np.maximum.accumulate(np.where(small, -1, idx))
    lengths = np.where(last_break < 0, idx + 1 + carry, idx - last_break)
    hits = np.flatnonzero(lengths >= needed)
    if hits.size:
        return int(hits[0]), int(lengths[hits[0]])
    return None, int(lengths[-1])


def _tail_bound(spec: HypergeometricSpec, n: int, term: float) -> float:
    """Estimate of the remainder after the term t[n]."""
    if term == 0.0:
        return 0.0
    rho = abs(float(_ratios(spec, n, 1)[0]))
    if spec.p == spec.q + 1 and abs(spec.z) == 1.0:
        if spec.z < 0:
            return abs(term) * rho
        return abs(term) * max(1.0, n / spec.omega) if spec.omega > 0 else math.inf
    if rho < 1.0:
        return abs(term) * rho / (1.0 - rho)
    return abs(term)


@dataclass
class _Partial:
    value: float
    terms_used: int
    error_estimate: float
    converged: bool
    scale: float


def _direct_sum(
    spec: HypergeometricSpec, tol: float, limit: int, *, tail_aware: bool = False
) -> _Partial:
    omega = spec.omega
    pieces: list[np.ndarray] = []
    partial = 0.0
    scale = 1.0
    run = 0
    for lo, block in _term_chunks(spec, limit):
        sums = partial + np.cumsum(block)
        scales = np.maximum(scale, np.maximum.accumulate(np.abs(sums)))
        weight = np.abs(block)
        if tail_aware and omega > 0:
            n = np.arange(lo, lo + block.size, dtype=float)
            weight = weight * np.maximum(1.0, n / omega)
        hit, run = _small_run(weight < tol * scales, run, _STOP_RUN)
        if hit is not None:
            pieces.append(block[: hit + 1])
            used = lo + hit + 1
            return _Partial(
                math.fsum(np.concatenate(pieces)),
                used,
                _tail_bound(spec, used - 1, float(block[hit])),
                True,
                float(scales[hit]),
            )
        pieces.append(block)
        partial = float(sums[-1])
        scale = float(scales[-1])

    terms = np.concatenate(pieces)
    return _Partial(
        math.fsum(terms),
        terms.size,
        _tail_bound(spec, terms.size - 1, float(terms[-1])),
        False,
        scale,
    )


def euler_accelerated_sum(
    terms: Sequence[float] | np.ndarray, start: int = 0
) -> tuple[float, float]:
    """Sum ``terms`` with the Euler transformation applied from index ``start``.

    Terms before ``start`` are added directly; from ``start`` on the signs must
    strictly alternate. The transformed series Σ (-1)ᵏ Δᵏa₀ / 2ᵏ⁺¹ is cut at
    its smallest contribution, which is also returned as the error estimate.
    """
    arr = np.asarray(terms, dtype=float)
    head = math.fsum(arr[:start])
    tail = arr[start:]
    if tail.size == 0 or not np.any(tail):
        return head, 0.0

    sign0 = math.copysign(1.0, tail[0])
    magnitudes = tail * sign0 * (-1.0) ** np.arange(tail.size)
    if tail[0] == 0.0 or np.any(magnitudes <= 0.0):
        raise NotAlternatingError(
            f"terms from index {start} do not strictly alternate in sign"
        )

    contributions: list[float] = []
    smallest = math.inf
    diff = magnitudes
    for k in range(tail.size):
        c = (-1.0) ** k * diff[0] / 2.0 ** (k + 1)
        if abs(c) > smallest:
            break
        contributions.append(c)
        smallest = abs(c)
        if smallest <= _EPS * abs(math.fsum(contributions)):
            break
        diff = np.diff(diff)
    return head + sign0 * math.fsum(contributions), float(smallest)


def richardson_tail_sum(
    partial_sums: Sequence[float], sizes: Sequence[int], omega: float
) -> tuple[float, float, int]:
    """Extrapolate S(N) = S - Σⱼ Aⱼ N^-(ω+j) from sums at doubling sizes N.

    Returns (value, error estimate, index of the diagonal used). The diagonal
    with the smallest change from its predecessor is chosen, from the third
    row on.
    """
    if omega <= 0:
        raise DomainError(f"richardson_tail_sum needs omega > 0, got {omega}")
    if len(partial_sums) != len(sizes) or len(sizes) < 3:
        raise DomainError("richardson_tail_sum needs at least three partial sums")
    ratios = np.asarray(sizes[1:], dtype=float) / np.asarray(sizes[:-1], dtype=float)
    if not np.allclose(ratios, 2.0):
        raise DomainError("partial sums must be taken at doubling sizes")

    previous = [float(partial_sums[0])]
    best = (previous[0], math.inf, 0)
    for i in range(1, len(partial_sums)):
        row = [float(partial_sums[i])]
        for k in range(1, i + 1):
            factor = 2.0 ** (omega + k - 1) - 1.0
            row.append(row[k - 1] + (row[k - 1] - previous[k - 1]) / factor)
        change = abs(row[i] - previous[i - 1])
        if i >= 2 and change < best[1]:
            best = (row[i], change, i)
        previous = row
    return best


def _alternation_start(spec: HypergeometricSpec) -> int:
    """Index from which every ratio has a fixed sign."""
    start = 0
    for x in spec.numerators + spec.denominators:
        if not isinstance(x, ConjugatePair) and x < 0:
            start = max(start, math.floor(-x) + 1)
    return start


def _euler_series(
    spec: HypergeometricSpec, tol: float, max_terms: int, conv: ConvergenceClass
) -> SeriesResult:
    head = max(
        _EULER_MIN_HEAD, _alternation_start(spec) + 8, int(4 * spec.param_scale)
    )
    result: SeriesResult | None = None
    scale = 1.0
    while head + _EULER_TAIL <= max_terms:
        terms = series_terms(spec, head + _EULER_TAIL)
        value, error = euler_accelerated_sum(terms, start=head)
        scale = max(1.0, abs(value))
        result = SeriesResult(
            value, terms.size, error, conv, accelerated=True, method="euler"
        )
        if error <= tol * scale:
            logger.debug("%s: Euler transform from n=%d, error %.3g", spec, head, error)
            return result
        head *= 2

    if result is not None and result.error_estimate <= 100.0 * tol * scale:
        return result
    raise NonConvergedError(
        f"{spec}: Euler transform did not reach tol={tol:g} within {max_terms} terms",
        result,
    )


def _richardson_series(
    spec: HypergeometricSpec, tol: float, max_terms: int, conv: ConvergenceClass
) -> SeriesResult:
    first = max(_RICHARDSON_MIN_START, int(16 * spec.param_scale))
    sizes = []
    size = first
    while size <= max_terms:
        sizes.append(size)
        size *= 2
    if len(sizes) < 3:
        raise NonConvergedError(
            f"{spec}: max_terms={max_terms} too small for Richardson extrapolation"
        )

    terms = series_terms(spec, sizes[-1])
    sums = np.cumsum(terms)
    partial_sums = [math.fsum(terms[:n]) for n in sizes]
    scale = max(1.0, float(np.max(np.abs(sums))))
    value, error, row = richardson_tail_sum(partial_sums, sizes, spec.omega)
    result = SeriesResult(
        value, sizes[row], error, conv, accelerated=True, method="richardson"
    )
    logger.debug(
        "%s: Richardson over %d sums up to N=%d, error %.3g",
        spec,
        row + 1,
        sizes[row],
        error,
    )
    if error <= 100.0 * tol * scale:
        return result
    raise NonConvergedError(
        f"{spec}: extrapolated error {error:.3g} exceeds 100*tol", result
    )


def _checked(
    partial: _Partial, spec: HypergeometricSpec, tol: float, conv: ConvergenceClass
) -> SeriesResult:
    result = SeriesResult(
        partial.value, partial.terms_used, partial.error_estimate, conv
    )
    if partial.converged or partial.error_estimate <= 100.0 * tol * partial.scale:
        return result
    raise NonConvergedError(
        f"{spec}: {partial.terms_used} terms left error {partial.error_estimate:.3g}",
        result,
    )


def eval_series(
    spec: HypergeometricSpec,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    *,
    accelerate: bool | None = None,
) -> SeriesResult:
    """Evaluate pFq(α; β; z).

    Args:
        spec: parameters and argument
        tol: relative stopping tolerance
        max_terms: cap on the number of terms generated
        accelerate: None picks acceleration automatically on the unit circle,
            True forces it, False forbids it
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be at least 1, got {max_terms}")

    conv = classify(spec)
    if spec.z == 0.0:
        return SeriesResult(1.0, 1, 0.0, conv)

    degree = spec.terminating_degree
    if degree is not None:
        if degree + 1 > max_terms:
            raise NonConvergedError(
                f"{spec}: polynomial of degree {degree} exceeds max_terms={max_terms}"
            )
        terms = series_terms(spec, degree + 1)
        return SeriesResult(
            math.fsum(terms), degree + 1, 0.0, conv, method="terminating"
        )

    if conv.tag is ConvergenceTag.DIVERGENT:
        raise DivergentError(f"{spec} diverges (omega={conv.omega:g})")

    on_circle = conv.tag in (
        ConvergenceTag.ABSOLUTELY_CONVERGENT_ON_CIRCLE,
        ConvergenceTag.CONDITIONALLY_CONVERGENT,
    )
    if not on_circle or accelerate is False:
        tail_aware = on_circle and spec.z > 0
        return _checked(
            _direct_sum(spec, tol, max_terms, tail_aware=tail_aware), spec, tol, conv
        )

    if spec.z < 0:
        conditional = conv.tag is ConvergenceTag.CONDITIONALLY_CONVERGENT
        if accelerate is None and not conditional:
            partial = _direct_sum(spec, tol, min(max_terms, _CHECKPOINT))
            if partial.converged:
                return _checked(partial, spec, tol, conv)
            logger.debug("%s: switching to the Euler transform", spec)
        return _euler_series(spec, tol, max_terms, conv)

    if accelerate is None:
        partial = _direct_sum(spec, tol, min(max_terms, _CHECKPOINT), tail_aware=True)
        if partial.converged:
            return _checked(partial, spec, tol, conv)
        logger.debug("%s: switching to Richardson extrapolation", spec)
    return _richardson_series(spec, tol, max_terms, conv)


def hyp(
    numerators: Sequence[Parameter | complex | int],
    denominators: Sequence[Parameter | complex | int],
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> float:
    """Value of pFq(numerators; denominators; z)."""
    spec = HypergeometricSpec(
        tuple(numerators), tuple(denominators), z  # type: ignore[arg-type]
    )
    return eval_series(spec, tol, max_terms).value
