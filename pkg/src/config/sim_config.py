"""Load and validate simulation run configuration from YAML or JSON files."""

from __future__ import annotations

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from src.codes.exceptions import ConfigurationError
from src.sim.models import BenchConfig, SimulationConfig, TrialConfig

logger = logging.getLogger(__name__)

DEFAULTS_DIR = Path(__file__).parent / "defaults"


class RunKind(str, Enum):
    SIMULATE = "simulate"
    BENCH = "bench"
    THRESHOLD = "threshold"


_MODELS: dict[RunKind, type[TrialConfig]] = {
    RunKind.SIMULATE: SimulationConfig,
    RunKind.BENCH: BenchConfig,
    RunKind.THRESHOLD: TrialConfig,
}

_DEFAULT_FILES = {
    RunKind.SIMULATE: "curve_config.yaml",
    RunKind.BENCH: "bench_config.yaml",
    RunKind.THRESHOLD: "threshold_config.yaml",
}


def default_config_path(kind: RunKind) -> Path:
    return DEFAULTS_DIR / _DEFAULT_FILES[kind]


def _read(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"Cannot read config {path}: {exc}", context={"path": str(path)}) from exc
    try:
        data = json.loads(text) if path.suffix.lower() == ".json" else yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ConfigurationError(f"Cannot parse config {path}", context={"path": str(path), "error": str(exc)}) from exc
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Config {path} must hold a mapping", context={"path": str(path)})
    return data


def load_trial_config(path: Path | None = None, kind: RunKind | str = RunKind.SIMULATE) -> TrialConfig:
    """Load a run configuration. Falls back to the packaged default for ``kind``.

    Args:
        path: Optional explicit ``.json``, ``.yaml`` or ``.yml`` file.
        kind: Which run the file configures; selects the model and default.

    Raises:
        ConfigurationError: Unreadable file, bad syntax or failed validation.
    """
    kind = RunKind(kind)
    if path is None:
        path = default_config_path(kind)
    data = _read(path)
    try:
        config = _MODELS[kind].model_validate(data)
    except ValidationError as exc:
        raise ConfigurationError(
            f"Invalid {kind.value} config {path}",
            context={"path": str(path), "errors": str(exc)},
        ) from exc
    logger.debug("Loaded %s config from %s", kind.value, path)
    return config
