"""Seeded domain sampling, batch verification runs and their reports.

Every (identity, sample index) pair owns an independent Philox stream derived
from the run seed, so a point never depends on how many points came before it
or on which worker evaluates it. Records are sorted by (identity_id, index)
before they are summarised or written.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import re
import time
import zlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Sequence

from numpy.random import Generator, Philox, SeedSequence

from hypersum.config import DEFAULT_BOXES_PATH, load_boxes, load_settings
from hypersum.errors import (
    ConfigError,
    DomainError,
    DomainTooThinError,
    NonConvergedError,
    describe,
)
from hypersum.hyperseries import DEFAULT_MAX_TERMS, DEFAULT_TOL
from hypersum.identities import (
    PARAM_NAMES,
    Identity,
    ParamPoint,
    Status,
    VerificationRecord,
    check,
    get,
    select,
)
from hypersum.quad import DEFAULT_QUAD_TOL

__all__ = [
    "DEFAULT_SAMPLES",
    "REJECTION_FACTOR",
    "RunConfig",
    "RunReport",
    "SampleStats",
    "VerificationRecord",
    "run",
    "sample_domain",
    "sample_domain_with_stats",
    "summarize",
    "to_json",
    "write_csv",
    "write_json",
]

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 25
REJECTION_FACTOR = 10_000

_BOX_KEYS = ("min_omega", "min_decay", "samples", "note")
_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_BOUND = re.compile(
    rf"^(?P<coef>[-+]?(?:{_NUMBER})?)\s*\*?\s*(?P<name>[a-z])"
    rf"\s*(?P<offset>[-+]\s*{_NUMBER})?$"
)


@dataclass(frozen=True)
class RunConfig:
    """Inputs of one verification run.

    ``samples_per_identity`` None takes each box's ``samples`` entry (or
    DEFAULT_SAMPLES); ``pass_threshold`` None keeps each identity's own
    tolerance; ``workers`` None falls back to HYPERSUM_THREADS.
    """

    seed: int = DEFAULT_SEED
    samples_per_identity: int | None = None
    series_tol: float = DEFAULT_TOL
    quad_tol: float = DEFAULT_QUAD_TOL
    pass_threshold: float | None = None
    identity_filter: str | None = None
    workers: int | None = None
    boxes_path: Path | None = None
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer: {self.seed}")
        if self.samples_per_identity is not None and self.samples_per_identity < 1:
            raise ConfigError("samples_per_identity must be at least 1")
        for name in ("series_tol", "quad_tol"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive")
        if self.pass_threshold is not None and not self.pass_threshold > 0:
            raise ConfigError("pass_threshold must be positive")
        if self.workers is not None and self.workers < 0:
            raise ConfigError("workers must be >= 0")
        if self.max_terms < 1:
            raise ConfigError("max_terms must be at least 1")

    def as_dict(self) -> dict[str, Any]:
        # worker count is left out so serial and parallel reports match
        return {
            "seed": self.seed,
            "samples_per_identity": self.samples_per_identity,
            "series_tol": self.series_tol,
            "quad_tol": self.quad_tol,
            "pass_threshold": self.pass_threshold,
            "identity_filter": self.identity_filter,
            "max_terms": self.max_terms,
        }


@dataclass(frozen=True)
class SampleStats:
    points: list[ParamPoint]
    rejected: int = 0
    excluded_conditional: int = 0
    excluded_decay: int = 0

    @property
    def attempts(self) -> int:
        return (
            len(self.points)
            + self.rejected
            + self.excluded_conditional
            + self.excluded_decay
        )


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class RunReport:
    config: RunConfig
    records: list[VerificationRecord]
    summary: dict[str, Any]
    generated_at: str = field(default_factory=_timestamp)

    @property
    def failed(self) -> bool:
        return any(r.status is Status.FAIL for r in self.records)

    def as_dict(self) -> dict[str, Any]:
        return {
            "generated_at": self.generated_at,
            "config": self.config.as_dict(),
            "records": [r.as_dict() for r in self.records],
            "summary": self.summary,
        }


# --------------------------------------------------------------------------
# Sampling


def _stream(seed: int, identity_id: str, index: int) -> Generator:
    key = zlib.crc32(identity_id.encode("utf-8"))
    return Generator(Philox(SeedSequence(entropy=seed, spawn_key=(key, index))))


def _resolve_bound(bound: Any, drawn: dict[str, float], identity_id: str) -> float:
    if isinstance(bound, (int, float)) and not isinstance(bound, bool):
        return float(bound)
    if not isinstance(bound, str):
        raise ConfigError(f"{identity_id}: unsupported bound {bound!r}")
    match = _BOUND.match(bound.replace(" ", ""))
    if match is None:
        raise ConfigError(f"{identity_id}: cannot parse bound {bound!r}")
    name = match["name"]
    if name not in drawn:
        raise ConfigError(
            f"{identity_id}: bound {bound!r} refers to {name!r} before it is drawn"
        )
    coef = match["coef"]
    scale = -1.0 if coef == "-" else 1.0 if coef in ("", "+") else float(coef)
    offset = float(match["offset"]) if match["offset"] else 0.0
    return scale * drawn[name] + offset


def _draw(rng: Generator, box: dict[str, Any], identity: Identity) -> ParamPoint:
    drawn: dict[str, float] = {}
    for name, spec in box.items():
        if name in _BOX_KEYS:
            continue
        if isinstance(spec, dict):
            choices = spec.get("choices")
            if not choices:
                raise ConfigError(f"{identity.id}: {name} has no choices")
            drawn[name] = float(choices[int(rng.integers(len(choices)))])
            continue
        if not isinstance(spec, list) or len(spec) != 2:
            raise ConfigError(f"{identity.id}: {name} must be [low, high] or choices")
        lo = _resolve_bound(spec[0], drawn, identity.id)
        hi = _resolve_bound(spec[1], drawn, identity.id)
        drawn[name] = float(rng.uniform(lo, hi)) if hi > lo else lo
    return ParamPoint(**drawn)


def _check_box(identity: Identity, box: dict[str, Any]) -> None:
    names = [k for k in box if k not in _BOX_KEYS]
    unknown = [k for k in names if k not in PARAM_NAMES]
    if unknown:
        raise ConfigError(f"{identity.id}: unknown parameters in box: {unknown}")
    missing = [k for k in identity.params if k not in names]
    if missing:
        raise ConfigError(f"{identity.id}: box does not cover {missing}")


def _box_for(identity: Identity, boxes: dict[str, dict[str, Any]]) -> dict[str, Any]:
    try:
        box = boxes[identity.id]
    except KeyError as exc:
        raise ConfigError(f"no sampling box for {identity.id}") from exc
    _check_box(identity, box)
    return box


def sample_domain_with_stats(
    identity: Identity,
    seed: int,
    n: int,
    box: dict[str, Any] | None = None,
) -> SampleStats:
    """Draw ``n`` accepted points and count what was thrown away.

    A draw is rejected when it falls outside the identity's domain, when the
    series is conditionally convergent (omega at or below ``min_omega``) or
    when an integral decays slower than ``min_decay``.

    Raises:
        DomainTooThinError: more than REJECTION_FACTOR * n draws were needed
    """
    if n < 1:
        raise DomainError(f"sample size must be at least 1, got {n}")
    if box is None:
        box = _box_for(identity, load_boxes(DEFAULT_BOXES_PATH))
    else:
        _check_box(identity, box)

    min_omega = box.get("min_omega", 0.0)
    min_decay = box.get("min_decay")
    budget = REJECTION_FACTOR * n
    points: list[ParamPoint] = []
    rejected = excluded_conditional = excluded_decay = 0

    for index in range(n):
        rng = _stream(seed, identity.id, index)
        while True:
            if rejected + excluded_conditional + excluded_decay >= budget:
                raise DomainTooThinError(
                    identity.id, len(points), budget + len(points)
                )
            p = _draw(rng, box, identity)
            if not identity.domain(p):
                rejected += 1
                continue
            if min_omega is not None and identity.omega is not None:
                omega = identity.omega(p)
                if omega is not None and omega <= min_omega:
                    excluded_conditional += 1
                    continue
            if min_decay is not None and identity.decay is not None:
                if identity.decay(p) < min_decay:
                    excluded_decay += 1
                    continue
            points.append(p)
            break

    logger.debug(
        "%s: %d points, %d rejected, %d conditional, %d slow decay",
        identity.id,
        n,
        rejected,
        excluded_conditional,
        excluded_decay,
    )
    return SampleStats(points, rejected, excluded_conditional, excluded_decay)


def sample_domain(
    identity: Identity,
    seed: int,
    n: int,
    box: dict[str, Any] | None = None,
) -> list[ParamPoint]:
    """Deterministic list of ``n`` points inside the identity's domain."""
    return sample_domain_with_stats(identity, seed, n, box).points


# --------------------------------------------------------------------------
# Running


@dataclass(frozen=True)
class _Task:
    identity_id: str
    index: int
    point: ParamPoint
    series_tol: float
    quad_tol: float
    threshold: float | None
    max_terms: int


def _regime(identity: Identity, p: ParamPoint) -> str | None:
    if identity.regime is None:
        return None
    try:
        return identity.regime(p)
    except DomainError:
        return None


def _skipped(
    identity: Identity, task: _Task, status: Status, exc: Exception, terms: int = 0
) -> VerificationRecord:
    nan = math.nan
    return VerificationRecord(
        identity_id=identity.id,
        point=task.point,
        lhs=nan,
        rhs=nan,
        integral=None,
        abs_residual=nan,
        rel_residual=nan,
        terms_used=terms,
        status=status,
        index=task.index,
        regime=_regime(identity, task.point),
        message=describe(exc)["message"],
    )


def _verify_point(task: _Task) -> VerificationRecord:
    # identities hold closures, so workers look them up by id
    identity = get(task.identity_id)
    try:
        return check(
            identity,
            task.point,
            task.series_tol,
            task.quad_tol,
            threshold=task.threshold,
            max_terms=task.max_terms,
            index=task.index,
        )
    except NonConvergedError as exc:
        logger.warning("%s[%d]: %s", identity.id, task.index, exc)
        terms = exc.partial.terms_used if exc.partial is not None else 0
        return _skipped(identity, task, Status.SKIPPED_NONCONVERGED, exc, terms)
    except DomainError as exc:
        logger.warning("%s[%d]: %s", identity.id, task.index, exc)
        return _skipped(identity, task, Status.SKIPPED_DOMAIN, exc)


def _execute(tasks: Sequence[_Task], workers: int) -> list[VerificationRecord]:
    if workers <= 1 or len(tasks) < 2:
        return [_verify_point(task) for task in tasks]
    logger.info("Verifying %d points on %d workers", len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_point, tasks, chunksize=4))


def _finite_max(values: Iterable[float | None]) -> float | None:
    finite = [v for v in values if v is not None and math.isfinite(v)]
    return max(finite) if finite else None


def summarize(
    records: Sequence[VerificationRecord],
    stats: dict[str, SampleStats] | None = None,
) -> dict[str, Any]:
    """Per-identity residual maxima, status counts and sampling counts."""
    stats = stats or {}
    grouped: dict[str, list[VerificationRecord]] = {}
    for record in records:
        grouped.setdefault(record.identity_id, []).append(record)

    per_identity: dict[str, Any] = {}
    for identity_id in sorted(grouped):
        group = grouped[identity_id]
        counts = Counter(r.status.value for r in group)
        regimes = Counter(r.regime for r in group if r.regime is not None)
        entry: dict[str, Any] = {
            "samples": len(group),
            "passed": counts.get(Status.PASS.value, 0),
            "failed": counts.get(Status.FAIL.value, 0),
            "skipped_nonconverged": counts.get(Status.SKIPPED_NONCONVERGED.value, 0),
            "skipped_domain": counts.get(Status.SKIPPED_DOMAIN.value, 0),
            "max_abs_residual": _finite_max(r.abs_residual for r in group),
            "max_rel_residual": _finite_max(r.rel_residual for r in group),
            "max_integral_residual": _finite_max(r.integral_residual for r in group),
            "max_constituent_residual": _finite_max(
                r.constituent_residual for r in group
            ),
            "max_terms_used": max(r.terms_used for r in group),
            "regimes": dict(sorted(regimes.items())),
        }
        sample = stats.get(identity_id)
        if sample is not None:
            entry["rejected"] = sample.rejected
            entry["excluded_conditional"] = sample.excluded_conditional
            entry["excluded_decay"] = sample.excluded_decay
        entry["status"] = "fail" if entry["failed"] else "pass"
        per_identity[identity_id] = entry

    failed = sorted(k for k, v in per_identity.items() if v["status"] == "fail")
    return {
        "identities": len(per_identity),
        "records": len(records),
        "failed_identities": failed,
        "excluded_conditional": sum(s.excluded_conditional for s in stats.values()),
        "max_rel_residual": _finite_max(
            v["max_rel_residual"] for v in per_identity.values()
        ),
        "status": "fail" if failed else "pass",
        "per_identity": per_identity,
    }


def run(config: RunConfig) -> RunReport:
    """Sample every selected identity, check each point and summarise.

    Raises:
        DomainError: the filter selects no identity
        ConfigError: the box file is missing, malformed or lacks an identity
        DomainTooThinError: an identity box is too thin for its domain
    """
    started = time.perf_counter()
    settings = load_settings()
    workers = settings.threads if config.workers is None else config.workers
    boxes = load_boxes(config.boxes_path or settings.boxes_path)

    identities = select(config.identity_filter)
    if not identities:
        raise DomainError(f"no identity matches {config.identity_filter!r}")

    tasks: list[_Task] = []
    stats: dict[str, SampleStats] = {}
    for identity in identities:
        box = _box_for(identity, boxes)
        n = config.samples_per_identity or int(box.get("samples", DEFAULT_SAMPLES))
        sample = sample_domain_with_stats(identity, config.seed, n, box)
        stats[identity.id] = sample
        tasks.extend(
            _Task(
                identity.id,
                index,
                point,
                config.series_tol,
                config.quad_tol,
                config.pass_threshold,
                config.max_terms,
            )
            for index, point in enumerate(sample.points)
        )

    records = _execute(tasks, workers)
    records.sort(key=lambda r: (r.identity_id, r.index))
    summary = summarize(records, stats)

    for identity_id, entry in summary["per_identity"].items():
        logger.info(
            "%s: %s (%d/%d passed, max rel %s)",
            identity_id,
            entry["status"],
            entry["passed"],
            entry["samples"],
            entry["max_rel_residual"],
        )
    logger.info(
        "Verified %d points over %d identities in %.1f s",
        len(records),
        len(identities),
        time.perf_counter() - started,
    )
    return RunReport(config, records, summary)


# --------------------------------------------------------------------------
# Reports


def _number(value: float) -> str:
    return format(value, ".17g") if math.isfinite(value) else "null"


def _encode(value: Any, indent: str = "") -> str:
    """JSON text with every float written to 17 significant digits."""
    inner = indent + "  "
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        return _number(value)
    if isinstance(value, (int, str)):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = (
            f"{inner}{json.dumps(str(k))}: {_encode(v, inner)}"
            for k, v in value.items()
        )
        return "{\n" + ",\n".join(items) + f"\n{indent}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = (f"{inner}{_encode(v, inner)}" for v in value)
        return "[\n" + ",\n".join(items) + f"\n{indent}]"
    raise TypeError(f"cannot encode {type(value).__name__} in a report")


def to_json(report: RunReport) -> str:
    return _encode(report.as_dict()) + "\n"


def write_json(report: RunReport, path: Path) -> None:
    Path(path).write_text(to_json(report), encoding="utf-8")
    logger.info("Wrote JSON report to %s", path)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


CSV_FIELDS = (
    "identity_id",
    "index",
    *PARAM_NAMES,
    "lhs",
    "rhs",
    "integral",
    "abs_residual",
    "rel_residual",
    "integral_residual",
    "constituent_residual",
    "terms_used",
    "status",
    "regime",
    "message",
)


def write_csv(report: RunReport, path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for record in report.records:
            row = record.as_dict()
            point = row.pop("point")
            row.update(point)
            writer.writerow({k: _cell(row.get(k)) for k in CSV_FIELDS})
    logger.info("Wrote CSV report to %s", path)
