"""Command-line entry point: ``hypersum eval|integrate|verify|list``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from hypersum.config import Settings, load_settings
from hypersum.errors import DomainError, HypersumError, describe
from hypersum.harness import RunConfig, RunReport, run, write_csv, write_json
from hypersum.hyperseries import HypergeometricSpec, Parameter, eval_series
from hypersum.identities import registry
from hypersum.quad import Family, IntegralSpec, closed_forms, integrate, series_form
from hypersum.specfun import ConjugatePair

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_ERROR = 2


def parse_parameters(text: str) -> tuple[Parameter, ...]:
    """Comma-separated reals; a complex token ``re+imj`` is a conjugate pair."""
    params: list[Parameter] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if token.endswith(("j", "J")):
                params.append(ConjugatePair.from_complex(complex(token)))
            else:
                params.append(float(token))
        except ValueError as exc:
            raise DomainError(f"cannot parse parameter {token!r}") from exc
    return tuple(params)


def _format(value: float) -> str:
    return f"{value:.17g}"


def _cmd_eval_pfq(args: argparse.Namespace, settings: Settings) -> int:
    spec = HypergeometricSpec(
        parse_parameters(args.num), parse_parameters(args.den), args.z
    )
    tol = args.tol or settings.series_tol
    max_terms = args.max_terms or settings.max_terms
    result = eval_series(spec, tol, max_terms)
    print(f"series:      {spec}")
    print(f"value:       {_format(result.value)}")
    print(f"terms:       {result.terms_used}")
    print(f"error:       {result.error_estimate:.3g}")
    print(f"convergence: {result.convergence}")
    print(f"method:      {result.method}")
    return 0


def _cmd_integrate(args: argparse.Namespace, settings: Settings) -> int:
    spec = IntegralSpec(Family(args.family), args.a, args.b, args.c, args.v)
    tol = args.tol or settings.quad_tol
    result = integrate(spec, tol)
    print(f"integral:    {spec}")
    print(f"value:       {_format(result.value)}")
    print(f"error:       {result.abs_error_estimate:.3g}")
    print(f"truncation:  {result.truncation_point:.6g}")
    print(f"evaluations: {result.evaluations}")
    if args.compare:
        form = series_form(spec)
        series = eval_series(form.spec, settings.series_tol, settings.max_terms)
        print(f"series:      {_format(form.prefactor * series.value)}  ({form.spec})")
        for name, value in closed_forms(spec).items():
            print(f"{name + ':':<13}{_format(value)}")
    return 0


def _print_summary(report: RunReport) -> None:
    summary = report.summary
    print(f"{'identity':<36} {'status':<6} {'pass':>5} {'skip':>5} {'max rel':>10}")
    for identity_id, entry in summary["per_identity"].items():
        skipped = entry["skipped_nonconverged"] + entry["skipped_domain"]
        worst = entry["max_rel_residual"]
        worst_text = f"{worst:.3g}" if worst is not None else "-"
        print(
            f"{identity_id:<36} {entry['status']:<6} "
            f"{entry['passed']:>5} {skipped:>5} {worst_text:>10}"
        )
    print(
        f"{summary['identities']} identities, {summary['records']} points, "
        f"{summary['excluded_conditional']} conditionally convergent draws excluded: "
        f"{summary['status'].upper()}"
    )


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    config = RunConfig(
        seed=args.seed,
        samples_per_identity=args.samples,
        series_tol=args.series_tol or settings.series_tol,
        quad_tol=args.quad_tol or settings.quad_tol,
        pass_threshold=args.threshold,
        identity_filter=args.identity,
        workers=args.workers,
        boxes_path=args.boxes,
        max_terms=settings.max_terms,
    )
    report = run(config)
    _print_summary(report)
    if args.out:
        write_json(report, args.out)
    if args.csv:
        write_csv(report, args.csv)
    return EXIT_FAILED if report.failed else 0


def _cmd_list(args: argparse.Namespace, settings: Settings) -> int:
    for identity in registry():
        print(f"{identity.id:<36} {identity.kind.value:<10} {identity.provenance}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersum",
        description="Evaluate pFq(±1) series and hyperbolic integrals, "
        "and verify summation identities",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="evaluate a series")
    kinds = evaluate.add_subparsers(dest="kind", required=True)
    pfq = kinds.add_parser(
        "pfq",
        help="generalized hypergeometric series",
        description="Use --num=-0.5,1 when a list starts with a minus sign.",
    )
    pfq.add_argument("--num", required=True, help="numerator parameters, e.g. 1,0.5+2j")
    pfq.add_argument("--den", required=True, help="denominator parameters")
    pfq.add_argument("--z", type=float, required=True, help="series argument")
    pfq.add_argument("--tol", type=float, help="relative tolerance (default 1e-12)")
    pfq.add_argument("--max-terms", type=int, help="term cap (default 20000)")
    pfq.set_defaults(handler=_cmd_eval_pfq)

    quad = commands.add_parser("integrate", help="integrate a hyperbolic family")
    quad.add_argument("--family", required=True, choices=[f.value for f in Family])
    quad.add_argument("--a", type=float, required=True)
    quad.add_argument("--b", type=float, default=0.0)
    quad.add_argument("--c", type=float, default=1.0)
    quad.add_argument("--v", type=float, default=1.0)
    quad.add_argument("--tol", type=float, help="absolute tolerance (default 1e-10)")
    quad.add_argument(
        "--compare",
        action="store_true",
        help="also print the series form and every closed form",
    )
    quad.set_defaults(handler=_cmd_integrate)

    verify = commands.add_parser("verify", help="run the identity harness")
    verify.add_argument("--identity", help="id glob, e.g. 'thm*'")
    verify.add_argument("--samples", type=int, help="points per identity")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--out", type=Path, help="write the JSON report here")
    verify.add_argument("--csv", type=Path, help="write the CSV report here")
    verify.add_argument("--workers", type=int, help="process count (0 = serial)")
    verify.add_argument("--boxes", type=Path, help="alternative sampling-box file")
    verify.add_argument("--threshold", type=float, help="override pass threshold")
    verify.add_argument("--series-tol", type=float)
    verify.add_argument("--quad-tol", type=float)
    verify.set_defaults(handler=_cmd_verify)

    listing = commands.add_parser("list", help="list registered identities")
    listing.set_defaults(handler=_cmd_list)
    return parser


def _configure_logging(verbosity: int, default_level: str) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.getLevelName(default_level)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
        _configure_logging(args.verbose, settings.log_level)
        return args.handler(args, settings)
    except HypersumError as exc:
        error = describe(exc)
        print(f"{error['error']}: {error['message']}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
