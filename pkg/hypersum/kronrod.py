"""Adaptive 7-point Gauss / 15-point Kronrod integration on a finite interval.

Panels are refined by bisection from an explicit work stack until the
Gauss/Kronrod difference on each panel is below its share of the tolerance.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from hypersum.errors import SingularityError

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

# Kronrod abscissae on [0, 1], descending, centre last (QUADPACK qk15).
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
# Gauss weights for the abscissae _XGK[1], _XGK[3], _XGK[5] and the centre.
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

NODES = np.concatenate([-_XGK[:7], _XGK[7:], _XGK[6::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:7], _WGK[7:], _WGK[6::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[[13, 11, 9]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class KronrodResult:
    value: float
    abs_error: float
    evaluations: int
    panels: int


def panel(f: Integrand, lo: float, hi: float) -> tuple[float, float]:
    """Kronrod estimate and |Kronrod - Gauss| on a single panel."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    fx = np.asarray(f(mid + half * NODES), dtype=float)
    if not np.all(np.isfinite(fx)):
        raise SingularityError(f"integrand is not finite on [{lo!r}, {hi!r}]")
    kronrod = half * float(np.dot(KRONROD_WEIGHTS, fx))
    gauss = half * float(np.dot(GAUSS_WEIGHTS, fx))
    return kronrod, abs(kronrod - gauss)


def integrate_interval(
    f: Integrand,
    lo: float,
    hi: float,
    tol: float,
    *,
    initial_panels: int = 1,
    max_depth: int = 50,
) -> KronrodResult:
    """Integrate ``f`` over ``[lo, hi]`` to absolute tolerance ``tol``.

    Args:
        f: vectorised integrand, called with a numpy array of abscissae
        lo: lower limit
        hi: upper limit (may be below ``lo``; the sign follows)
        tol: absolute error target for the whole interval
        initial_panels: number of equal panels seeded onto the stack
        max_depth: bisection depth at which a panel is accepted regardless
    """
    if hi == lo:
        return KronrodResult(0.0, 0.0, 0, 0)
    if hi < lo:
        flipped = integrate_interval(
            f, hi, lo, tol, initial_panels=initial_panels, max_depth=max_depth
        )
        return KronrodResult(
            -flipped.value, flipped.abs_error, flipped.evaluations, flipped.panels
        )

    length = hi - lo
    edges = np.linspace(lo, hi, initial_panels + 1)
    stack = [(float(edges[i]), float(edges[i + 1]), 0) for i in range(initial_panels)]
    pieces: list[float] = []
    errors: list[float] = []
    evaluations = 0
    forced = 0
    forced_error = 0.0
    scale = 0.0

    while stack:
        a, b, depth = stack.pop()
        value, err = panel(f, a, b)
        evaluations += 15
        # roundoff floor relative to the largest panel seen, the root panels first
        scale = max(scale, abs(value))
        allowed = max(tol * (b - a) / length, 50.0 * _EPS * scale)
        if err <= allowed or depth >= max_depth:
            if err > allowed:
                forced += 1
                forced_error += err
            pieces.append(value)
            errors.append(err)
            continue
        mid = 0.5 * (a + b)
        stack.append((mid, b, depth + 1))
        stack.append((a, mid, depth + 1))

    if forced:
        level = logging.WARNING if forced_error > tol else logging.DEBUG
        logger.log(
            level,
            "%d panel(s) on [%g, %g] accepted at maximum depth, error %.3g",
            forced,
            lo,
            hi,
            forced_error,
        )
    return KronrodResult(math.fsum(pieces), math.fsum(errors), evaluations, len(pieces))
