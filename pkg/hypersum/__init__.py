"""Numerical pFq(±1) summation, hyperbolic integral families and identity checks."""

from hypersum.errors import (
    ConvergenceError,
    DomainError,
    HypersumError,
    NonConvergedError,
)
from hypersum.hyperseries import HypergeometricSpec, SeriesResult, eval_series, hyp
from hypersum.quad import Family, IntegralSpec, closed_form, integrate, series_form
from hypersum.specfun import ConjugatePair

__version__ = "0.1.0"

__all__ = [
    "ConjugatePair",
    "ConvergenceError",
    "DomainError",
    "Family",
    "HypergeometricSpec",
    "HypersumError",
    "IntegralSpec",
    "NonConvergedError",
    "SeriesResult",
    "closed_form",
    "eval_series",
    "hyp",
    "integrate",
    "series_form",
]
