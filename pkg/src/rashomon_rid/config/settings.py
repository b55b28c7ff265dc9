"""RunConfig — pydantic-settings model for one RID run."""

from __future__ import annotations

from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

from rashomon_rid.models.strategy import MrStrategy

ENV_PREFIX = "RID_"
KNOWN_METRICS = ("sub_mr",)


class RunConfig(BaseSettings):
    """Parameters of a Rashomon importance run.

    Use ``ConfigLoader.load_config()`` to layer presets, files and env vars.
    Direct construction (e.g. in tests) skips the preset and file layers.
    ``lambda_`` is spelled ``lambda`` in config files and result JSON.
    """

    epsilon: float = Field(0.05, gt=0.0)
    lambda_: float = Field(0.01, ge=0.0)
    depth: int = Field(4, ge=1)
    bootstraps: int = Field(50, ge=1)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    metric: str = "sub_mr"
    strategy: str = "e_divide"
    max_models: int = Field(1_000_000, ge=1)
    max_thresholds: int = Field(64, ge=1)
    threads: int = Field(1, ge=1)
    log_level: str = "WARNING"

    model_config = {"env_prefix": ENV_PREFIX}

    @field_validator("metric")
    @classmethod
    def _known_metric(cls, value: str) -> str:
        if value not in KNOWN_METRICS:
            raise ValueError(f"unknown metric {value!r}; choose from {', '.join(KNOWN_METRICS)}")
        return value

    @field_validator("strategy")
    @classmethod
    def _parsable_strategy(cls, value: str) -> str:
        return str(MrStrategy.parse(value))

    @property
    def mr_strategy(self) -> MrStrategy:
        return MrStrategy.parse(self.strategy)

    def public_dict(self) -> dict[str, Any]:
        """Result-file view: ``lambda`` key, no process-level knobs."""
        data = self.model_dump(exclude={"threads", "log_level"})
        data["lambda"] = data.pop("lambda_")
        return data
