"""Atomic file output — a complete file or nothing."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path


class Files:
    """Static helpers for writing output files."""

    @staticmethod
    def atomic_write(path: str | Path, text: str) -> None:
        """Write ``text`` to a temp file beside ``path``, then rename over it.

        The temp file is removed if anything fails before the rename.
        """
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, temp_name = tempfile.mkstemp(
            dir=target.parent, prefix=f".{target.name}.", suffix=".tmp",
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
            os.replace(temp_name, target)
        except BaseException:
            Path(temp_name).unlink(missing_ok=True)
            raise
