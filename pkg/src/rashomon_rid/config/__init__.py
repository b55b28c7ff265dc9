"""Configuration package — re-exports for convenience."""

from rashomon_rid.config.loader import ConfigLoader
from rashomon_rid.config.settings import RunConfig

__all__ = ["ConfigLoader", "RunConfig"]
