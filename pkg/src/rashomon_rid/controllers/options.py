"""Shared command-line flags and the flags-to-RunConfig bridge."""

from __future__ import annotations

import argparse
import logging
from typing import TYPE_CHECKING

from pydantic import ValidationError

from rashomon_rid.config import ConfigLoader, RunConfig
from rashomon_rid.config.loader import PRESETS
from rashomon_rid.resources.errors import DataError, UsageError

if TYPE_CHECKING:
    Subparsers = argparse._SubParsersAction[argparse.ArgumentParser]

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# flag destination -> RunConfig field
_CONFIG_FLAGS = {
    "epsilon": "epsilon",
    "lambda_": "lambda_",
    "depth": "depth",
    "bootstraps": "bootstraps",
    "seed": "seed",
    "metric": "metric",
    "strategy": "strategy",
    "max_models": "max_models",
    "max_thresholds": "max_thresholds",
    "threads": "threads",
    "log_level": "log_level",
}


def common_parser() -> argparse.ArgumentParser:
    """Flags every subcommand accepts."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None)
    return parser


def run_config_parser() -> argparse.ArgumentParser:
    """Flags that feed RunConfig. Defaults are None so lower layers show through."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", default=None, help="JSON config file")
    parser.add_argument("--preset", choices=PRESETS, default=None)
    parser.add_argument("--epsilon", type=float, default=None)
    parser.add_argument("--lambda", dest="lambda_", type=float, default=None)
    parser.add_argument("--depth", type=int, default=None)
    parser.add_argument("--bootstraps", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--metric", default=None)
    parser.add_argument("--strategy", default=None, help="e_divide or perm:K")
    parser.add_argument("--max-models", type=int, default=None)
    parser.add_argument("--max-thresholds", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    return parser


def dataset_parser() -> argparse.ArgumentParser:
    """Flags that locate and type a CSV dataset."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--data", required=True, help="CSV file with a header row")
    parser.add_argument("--label", default=None, help="label column (default: last)")
    parser.add_argument("--categorical", action="append", default=[], metavar="NAME")
    parser.add_argument("--numeric", action="append", default=[], metavar="NAME")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Layer flags over env vars, the config file, the preset and defaults.

    Raises:
        UsageError: If a value is out of range.
        DataError: If the config file is missing or malformed.
    """
    overrides = {field: getattr(args, flag, None) for flag, field in _CONFIG_FLAGS.items()}
    try:
        cfg = ConfigLoader.load_config(
            getattr(args, "config", None), preset=getattr(args, "preset", None), **overrides,
        )
    except ValidationError as error:
        raise UsageError(str(error)) from error
    except (ValueError, OSError) as error:
        raise DataError(str(error)) from error
    logging.getLogger().setLevel(cfg.log_level)
    return cfg
