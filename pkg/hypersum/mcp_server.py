"""
Hypersum MCP Server

Exposes the library over the Model Context Protocol (stdio transport):
- eval_pfq: evaluate a generalized hypergeometric series
- integrate: quadrature of a hyperbolic integral family, with its closed forms
- verify_identity: sample and check one registered identity
- list_identities: registered identity ids and their provenance
"""

from __future__ import annotations

import logging
import sys

from mcp.server.fastmcp import FastMCP

from hypersum.cli import parse_parameters
from hypersum.config import load_settings
from hypersum.errors import HypersumError, describe
from hypersum.harness import RunConfig, run
from hypersum.hyperseries import HypergeometricSpec, eval_series
from hypersum.identities import select
from hypersum.quad import Family, IntegralSpec, closed_forms, integrate as quadrature

logger = logging.getLogger(__name__)

# Initialize FastMCP server
mcp = FastMCP("hypersum")

# Constants
MAX_VERIFY_SAMPLES = 50


def format_error(exc: HypersumError) -> str:
    """Format a library error as tool output."""
    error = describe(exc)
    return f"Error ({error['error']}): {error['message']}"


## Tools
@mcp.tool()
async def eval_pfq(numerators: str, denominators: str, z: float) -> str:
    """Evaluate pFq(numerators; denominators; z).

    Args:
        numerators: Comma-separated parameters; a complex entry such as 0.5+2j
            stands for the conjugate pair 0.5 ± 2i
        denominators: Comma-separated parameters, same syntax
        z: Series argument, |z| <= 1 unless the series terminates or p <= q
    """
    try:
        settings = load_settings()
        spec = HypergeometricSpec(
            parse_parameters(numerators), parse_parameters(denominators), z
        )
        result = eval_series(spec, settings.series_tol, settings.max_terms)
    except HypersumError as exc:
        return format_error(exc)

    return f"""
Series: {spec}
Value: {result.value:.17g}
Terms used: {result.terms_used}
Error estimate: {result.error_estimate:.3g}
Convergence: {result.convergence}
Method: {result.method}
"""


@mcp.tool()
async def integrate(
    family: str, a: float, b: float = 0.0, c: float = 1.0, v: float = 1.0
) -> str:
    """Integrate a hyperbolic family over [0, ∞) and list its closed forms.

    Args:
        family: One of SinhSinhOverCoshV, SinhSinhOverSinhV, SinhCoshOverCoshV,
            SinhCoshOverSinhV, CoshCoshOverCoshV, CoshCoshOverSinhV, CosOverCoshPi
        a: Scale of the first numerator factor
        b: Scale of the second numerator factor
        c: Scale of the denominator
        v: Power of the denominator
    """
    try:
        spec = IntegralSpec(Family(family), a, b, c, v)
    except ValueError:
        return f"Unknown family {family!r}. Choose one of: " + ", ".join(
            f.value for f in Family
        )
    try:
        result = quadrature(spec, load_settings().quad_tol)
        forms = closed_forms(spec)
    except HypersumError as exc:
        return format_error(exc)

    lines = [
        f"Integral: {family}(a={a:g}, b={b:g}, c={c:g}, v={v:g})",
        f"Quadrature: {result.value:.17g}",
        f"Error estimate: {result.abs_error_estimate:.3g}",
    ]
    lines += [f"{name}: {value:.17g}" for name, value in forms.items()]
    return "\n".join(lines)


@mcp.tool()
async def verify_identity(identity: str, samples: int = 5, seed: int = 42) -> str:
    """Check a registered identity at seeded sample points.

    Args:
        identity: Identity id or glob (see list_identities)
        samples: Points per identity (at most 50)
        seed: Sampling seed
    """
    samples = max(1, min(samples, MAX_VERIFY_SAMPLES))
    try:
        report = run(
            RunConfig(
                seed=seed,
                samples_per_identity=samples,
                identity_filter=identity,
                workers=0,
            )
        )
    except HypersumError as exc:
        return format_error(exc)

    blocks = []
    for identity_id, entry in report.summary["per_identity"].items():
        blocks.append(f"""
Identity: {identity_id}
Status: {entry['status']}
Passed: {entry['passed']}/{entry['samples']}
Skipped: {entry['skipped_nonconverged'] + entry['skipped_domain']}
Max relative residual: {entry['max_rel_residual']}
Max integral residual: {entry['max_integral_residual']}
""")
    return "\n---\n".join(blocks)


@mcp.tool()
async def list_identities(pattern: str = "") -> str:
    """List registered identities.

    Args:
        pattern: Optional id glob such as thm* (empty lists everything)
    """
    identities = select(pattern or None)
    if not identities:
        return f"No identity matches {pattern!r}."
    return "\n".join(f"{i.id} [{i.kind.value}]: {i.provenance}" for i in identities)


def main() -> None:
    logging.basicConfig(stream=sys.stderr, level=load_settings().log_level)
    print("hypersum MCP server running on stdio", file=sys.stderr)
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
