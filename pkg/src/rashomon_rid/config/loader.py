"""ConfigLoader — preset YAML, JSON file, env vars and flags, in rising priority."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

import yaml

from rashomon_rid.config.settings import ENV_PREFIX, RunConfig

_CONFIG_ROOT = Path(__file__).resolve().parent
PRESETS = ("monk1", "monk3", "chen", "friedman")


class ConfigLoader:
    """Load run configs from presets and files with environment variable overrides."""

    @staticmethod
    def _normalize(values: dict[str, Any]) -> dict[str, Any]:
        """Accept the public ``lambda`` spelling for the ``lambda_`` field."""
        normalized = dict(values)
        if "lambda" in normalized:
            normalized["lambda_"] = normalized.pop("lambda")
        return normalized

    @staticmethod
    def load_preset(name: str) -> dict[str, Any]:
        """Load ``<name>/settings.yaml``.

        Raises:
            ValueError: If the preset is unknown.
        """
        if name not in PRESETS:
            raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
        path = _CONFIG_ROOT / name / "settings.yaml"
        with path.open() as config_file:
            data = yaml.safe_load(config_file)
        return ConfigLoader._normalize(data) if isinstance(data, dict) else {}

    @staticmethod
    def load_file(path: str | Path) -> dict[str, Any]:
        """Load a JSON config object.

        Raises:
            ValueError: If the file is not a JSON object.
            FileNotFoundError: If the file does not exist.
        """
        text = Path(path).read_text(encoding="utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise ValueError(f"malformed JSON config {path}: {error}") from error
        if not isinstance(data, dict):
            raise ValueError(f"config {path} must hold a JSON object")
        return ConfigLoader._normalize(data)

    @staticmethod
    def load_config(
        path: str | Path | None = None,
        *,
        preset: str | None = None,
        **overrides: Any,
    ) -> RunConfig:
        """Build a RunConfig: overrides > env vars > file > preset > defaults.

        File and preset values are only used for fields that don't have a
        corresponding environment variable set, so env vars beat both.

        Raises:
            ValueError: On malformed files or out-of-range values.
        """
        layered: dict[str, Any] = {}
        if preset is not None:
            layered.update(ConfigLoader.load_preset(preset))
        if path is not None:
            layered.update(ConfigLoader.load_file(path))
        # pydantic-settings treats __init__ kwargs as highest priority, so drop
        # layered keys that an env var should win over.
        filtered: dict[str, Any] = {}
        for key, value in layered.items():
            env_key = f"{ENV_PREFIX}{key.upper()}"
            if env_key not in os.environ:
                filtered[key] = value
        explicit = {
            key: value
            for key, value in ConfigLoader._normalize(overrides).items()
            if value is not None
        }
        return RunConfig(**{**filtered, **explicit})
