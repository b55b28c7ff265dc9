"""SVG template loading for result plots."""

from __future__ import annotations

from pathlib import Path
from string import Template

_TEMPLATE_DIR = Path(__file__).parent


def load_template(name: str) -> Template:
    """Read a template file and return a string.Template for safe substitution.

    Args:
        name: Filename relative to the templates directory (e.g. "cdf_plot.svg").

    Raises:
        FileNotFoundError: If the template does not exist.
    """
    return Template((_TEMPLATE_DIR / name).read_text(encoding="utf-8"))
