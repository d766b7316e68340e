"""Runtime settings.

Values come from the process environment, optionally seeded from a ``.env``
file in the working directory. See ``.env.example`` for the full list.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from hypersum.errors import ConfigError

logger = logging.getLogger(__name__)

# Defaults
DEFAULT_SERIES_TOL = 1e-12
DEFAULT_QUAD_TOL = 1e-10
DEFAULT_MAX_TERMS = 20_000
DEFAULT_BOXES_PATH = Path(__file__).resolve().parent / "data" / "sampling_boxes.json"


@dataclass(frozen=True)
class Settings:
    threads: int = 0
    log_level: str = "WARNING"
    boxes_path: Path = DEFAULT_BOXES_PATH
    series_tol: float = DEFAULT_SERIES_TOL
    quad_tol: float = DEFAULT_QUAD_TOL
    max_terms: int = DEFAULT_MAX_TERMS


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = float(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from exc
    if not value > 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def load_settings() -> Settings:
    """Read settings from the environment (after loading ``.env``)."""
    load_dotenv()

    boxes = os.getenv("HYPERSUM_BOXES")
    boxes_path = Path(boxes).expanduser() if boxes else DEFAULT_BOXES_PATH
    level = os.getenv("HYPERSUM_LOG_LEVEL", "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"HYPERSUM_LOG_LEVEL is not a logging level: {level!r}")

    return Settings(
        threads=_env_int("HYPERSUM_THREADS", 0),
        log_level=level,
        boxes_path=boxes_path,
        series_tol=_env_float("HYPERSUM_SERIES_TOL", DEFAULT_SERIES_TOL),
        quad_tol=_env_float("HYPERSUM_QUAD_TOL", DEFAULT_QUAD_TOL),
        max_terms=_env_int("HYPERSUM_MAX_TERMS", DEFAULT_MAX_TERMS, minimum=1),
    )


def load_boxes(path: Path | None = None) -> dict[str, dict[str, Any]]:
    """Load the per-identity sampling boxes."""
    path = path or DEFAULT_BOXES_PATH
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except FileNotFoundError as exc:
        raise ConfigError(f"sampling box file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"sampling box file is not valid JSON: {path}") from exc

    if not isinstance(data, dict):
        raise ConfigError(f"sampling box file must hold an object: {path}")
    logger.debug("Loaded %d sampling boxes from %s", len(data), path)
    return data
