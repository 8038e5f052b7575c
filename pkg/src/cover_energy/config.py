"""Runtime settings.

Settings are layered: built-in defaults, then an optional YAML file, then
environment variables (a `.env` file is loaded at package import).
"""

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from cover_energy.errors import ConfigError

logger = logging.getLogger(__name__)

# Environment variable → settings field
ENV_OVERRIDES: dict[str, str] = {
    "COVER_ENERGY_MAX_N": "max_bruteforce_n",
    "COVER_ENERGY_JACOBI_TOL": "jacobi_tolerance",
    "COVER_ENERGY_CLUSTER_TOL": "cluster_tolerance",
}


class Settings(BaseModel):
    """Numerical tolerances and search bounds shared by every module."""

    model_config = {"frozen": True, "extra": "forbid"}

    max_bruteforce_n: int = Field(
        default=20, ge=0, description="Largest order accepted by exhaustive subset search"
    )
    jacobi_tolerance: float = Field(
        default=1e-12, gt=0, description="Off-diagonal Frobenius norm at which Jacobi stops"
    )
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    jacobi_max_n: int = Field(
        default=400,
        ge=1,
        description="Above this order the eigensolver defaults to LAPACK eigvalsh",
    )
    cluster_tolerance: float = Field(
        default=1e-7, gt=0, description="Eigenvalues closer than this share a cluster"
    )
    zero_display_tolerance: float = Field(default=1e-12, ge=0)
    float_digits: int = Field(default=12, ge=1, le=17)
    connect_retries: int = Field(
        default=1000, ge=1, description="Redraws allowed for a connected random sample"
    )
    edge_probabilities: tuple[float, ...] = (0.15, 0.3, 0.5)

    @field_validator("edge_probabilities")
    @classmethod
    def probabilities_in_unit_interval(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("must list at least one probability")
        if any(not 0.0 <= p <= 1.0 for p in v):
            raise ValueError("probabilities must lie in [0, 1]")
        return v


def load_settings(
    path: Path | None = None, environ: dict[str, str] | None = None
) -> Settings:
    """Build :class:`Settings` from defaults, an optional YAML file and the environment.

    Args:
        path: YAML mapping of settings fields. Missing file is an error.
        environ: Environment to read overrides from (default: `os.environ`).

    Returns:
        Validated, frozen settings.

    Raises:
        ConfigError: If the file is unreadable or any value fails validation.
    """
    values: dict[str, Any] = {}
    if path is not None:
        try:
            loaded = yaml.safe_load(path.read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}")
        except yaml.YAMLError as exc:
            raise ConfigError(f"invalid YAML in {path}: {exc}")
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ConfigError(f"config {path} must be a mapping")
        values.update(loaded)
        logger.debug("Loaded %d setting(s) from %s", len(loaded), path)

    env = os.environ if environ is None else environ
    for key, field_name in ENV_OVERRIDES.items():
        raw = env.get(key)
        if raw is not None and raw.strip():
            values[field_name] = raw.strip()
            logger.debug("Setting %s from %s=%s", field_name, key, raw)

    try:
        return Settings.model_validate(values)
    except ValidationError as exc:
        raise ConfigError(str(exc))


_settings: Settings | None = None


def get_settings() -> Settings:
    """Return the process-wide settings, loading them from the environment on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure(settings: Settings | None) -> None:
    """Install *settings* as the process-wide default (`None` resets to the environment)."""
    global _settings
    _settings = settings
