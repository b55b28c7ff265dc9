"""Domain errors raised by resources and mapped to CLI exit codes."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager

from rashomon_rid.services.rashomon_service import RashomonSetTooLargeError


class UsageError(Exception):
    """Raised for invalid command-line usage or configuration values."""


class DataError(Exception):
    """Raised when input data is missing, unreadable or invalid."""


class ResourceLimitError(Exception):
    """Raised when a Rashomon set outgrows ``max_models``."""


@contextmanager
def translated_errors() -> Iterator[None]:
    """Turn service exceptions into domain errors.

    Raises:
        DataError: For ValueError, FileNotFoundError and other OS errors.
        ResourceLimitError: For RashomonSetTooLargeError.
    """
    try:
        yield
    except RashomonSetTooLargeError as error:
        raise ResourceLimitError(str(error)) from error
    except (ValueError, OSError) as error:
        raise DataError(str(error)) from error
