"""Runtime configuration: defaults -> TOML file -> environment -> command-line flags."""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from mocktheta.errors import ConfigError
from mocktheta.expr import parse_monomial

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")

DEFAULT_SAMPLE_POINTS: dict[str, list[str]] = {
    "entry1": ["zeta", "zeta^2", "zeta^5"],
    "entry2": ["zeta", "zeta^2", "zeta^5"],
}


@dataclass(frozen=True)
class Config:
    default_order: int | None = None
    sample_points: dict[str, list[str]] = field(default_factory=lambda: dict(DEFAULT_SAMPLE_POINTS))
    output_format: str = "text"
    parallelism: int | str = 1
    data_dir: str | None = None

    def __post_init__(self):
        if self.default_order is not None and self.default_order < 10:
            raise ConfigError(f"default_order must be >= 10, got {self.default_order}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.parallelism != "auto" and (not isinstance(self.parallelism, int) or self.parallelism < 1):
            raise ConfigError(f"parallelism must be a positive integer or 'auto', got {self.parallelism!r}")
        for entry, points in self.sample_points.items():
            if entry not in DEFAULT_SAMPLE_POINTS:
                raise ConfigError(f"sample_points: unknown entry {entry!r}")
            if not points:
                raise ConfigError(f"sample_points.{entry} must be nonempty")

    @property
    def jobs(self) -> int:
        if self.parallelism == "auto":
            return os.cpu_count() or 1
        return int(self.parallelism)

    def samples(self) -> dict[str, list]:
        """Parsed sample monomials per entry."""
        return {entry: [parse_monomial(p) for p in points] for entry, points in self.sample_points.items()}


_KEYS = {f.name for f in fields(Config)}


def _int(name: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc


def _from_file(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, "rb") as f:
            data = tomllib.load(f)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    unknown = set(data) - _KEYS
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")
    if "sample_points" in data:
        merged = dict(DEFAULT_SAMPLE_POINTS)
        merged.update({k: list(v) for k, v in data["sample_points"].items()})
        data["sample_points"] = merged
    logger.debug("loaded config from %s", path)
    return data


def _from_env() -> dict[str, Any]:
    out: dict[str, Any] = {}
    if "MOCKTHETA_ORDER" in os.environ:
        out["default_order"] = _int("MOCKTHETA_ORDER", os.environ["MOCKTHETA_ORDER"])
    if "MOCKTHETA_JOBS" in os.environ:
        raw = os.environ["MOCKTHETA_JOBS"]
        out["parallelism"] = raw if raw == "auto" else _int("MOCKTHETA_JOBS", raw)
    if "MOCKTHETA_DATA_DIR" in os.environ:
        out["data_dir"] = os.environ["MOCKTHETA_DATA_DIR"]
    return out


def load_config(path: str | Path | None = None, **overrides: Any) -> Config:
    """Layer the config file (``path`` or $MOCKTHETA_CONFIG), env vars and non-None overrides."""
    values: dict[str, Any] = {}
    path = path or os.environ.get("MOCKTHETA_CONFIG")
    if path:
        values.update(_from_file(Path(path)))
    values.update(_from_env())
    unknown = set(overrides) - _KEYS
    if unknown:
        raise ConfigError(f"unknown settings {sorted(unknown)}")
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return replace(Config(), **values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def get_data_dir(config: Config | None = None) -> Path:
    """Return data directory for saved reports; create if needed."""
    base = (config.data_dir if config else None) or os.path.join(os.getcwd(), "data")
    path = Path(base)
    path.mkdir(parents=True, exist_ok=True)
    return path
