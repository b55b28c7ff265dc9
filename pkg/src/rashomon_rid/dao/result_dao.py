"""Result files: RID and Rashomon-set JSON, summary CSV, experiment reports, CDF plots."""

from __future__ import annotations

import html
import io
import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from rashomon_rid.config.settings import RunConfig
from rashomon_rid.models.distribution import BootstrapBlock, RIDResult, VIDistribution
from rashomon_rid.models.rashomon import RashomonSet
from rashomon_rid.models.report import CoverageReport, RecoveryReport, StabilityReport
from rashomon_rid.templates import load_template
from rashomon_rid.utils.files import Files

logger = logging.getLogger(__name__)

# Plot area inside the template's 640 x 480 viewBox.
_PLOT_LEFT, _PLOT_RIGHT = 60.0, 600.0
_PLOT_TOP, _PLOT_BOTTOM = 40.0, 420.0


def _interval_lists(value: Any) -> Any:
    """Replace Interval dicts from ``asdict`` by ``[lo, hi]`` pairs."""
    if isinstance(value, dict):
        if set(value) == {"lo", "hi"}:
            return [value["lo"], value["hi"]]
        return {key: _interval_lists(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_interval_lists(item) for item in value]
    return value


class ResultDAO:
    """Serializes results. Every file is written atomically."""

    @staticmethod
    def dumps(data: Any) -> str:
        """JSON with shortest round-trip floats and a trailing newline."""
        return json.dumps(data, indent=2, allow_nan=False) + "\n"

    @staticmethod
    def save_json(data: Any, path: str | Path) -> None:
        Files.atomic_write(path, ResultDAO.dumps(data))
        logger.debug("wrote %s", path)

    @staticmethod
    def load_json(path: str | Path) -> Any:
        """Parse a JSON file.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: If the content is not valid JSON.
        """
        text = Path(path).read_text(encoding="utf-8")
        try:
            return json.loads(text)
        except json.JSONDecodeError as error:
            raise ValueError(f"malformed JSON in {path}: {error}") from error

    @staticmethod
    def rid_to_dict(r: RIDResult) -> dict[str, Any]:
        first = r.per_variable[0]
        return {
            "config": r.config.public_dict(),
            "support": [first.support_min, first.support_max],
            "variables": [
                {
                    "name": name,
                    "atoms": [[float(v), float(w)] for v, w in zip(dist.values, dist.weights)],
                    "stats": dist.summary(),
                }
                for name, dist in zip(r.feature_names, r.per_variable)
            ],
            "bootstraps": [
                {
                    "index": block.index,
                    "rset_size": block.rset_size,
                    "min_objective": block.min_objective,
                    "weight": block.weight,
                    "values": block.values.tolist(),
                }
                for block in r.blocks
            ],
        }

    @staticmethod
    def rid_from_dict(data: dict[str, Any]) -> RIDResult:
        """Rebuild a RIDResult written by ``rid_to_dict``.

        Raises:
            ValueError: If a required key is missing or a value is out of range.
        """
        try:
            config = RunConfig(**{
                ("lambda_" if key == "lambda" else key): value
                for key, value in data["config"].items()
            })
            lo, hi = data.get("support", [-1.0, 1.0])
            names = tuple(str(entry["name"]) for entry in data["variables"])
            per_variable = tuple(
                VIDistribution(
                    np.asarray([atom[0] for atom in entry["atoms"]], dtype=np.float64),
                    np.asarray([atom[1] for atom in entry["atoms"]], dtype=np.float64),
                    float(lo),
                    float(hi),
                )
                for entry in data["variables"]
            )
            blocks = tuple(
                BootstrapBlock(
                    index=int(entry["index"]),
                    values=np.asarray(entry["values"], dtype=np.float64).reshape(
                        int(entry["rset_size"]), len(names),
                    ),
                    weight=float(entry["weight"]),
                    rset_size=int(entry["rset_size"]),
                    min_objective=float(entry["min_objective"]),
                )
                for entry in data["bootstraps"]
            )
        except (KeyError, TypeError, IndexError) as error:
            raise ValueError(f"malformed RID result: {error!r}") from error
        return RIDResult(names, per_variable, blocks, config)

    @staticmethod
    def save_rid(r: RIDResult, path: str | Path) -> None:
        ResultDAO.save_json(ResultDAO.rid_to_dict(r), path)

    @staticmethod
    def load_rid(path: str | Path) -> RIDResult:
        data = ResultDAO.load_json(path)
        if not isinstance(data, dict):
            raise ValueError(f"{path} does not hold a RID result")
        return ResultDAO.rid_from_dict(data)

    @staticmethod
    def summary_csv(r: RIDResult) -> str:
        """One row per variable with the distribution statistics."""
        rows = []
        for name, dist in zip(r.feature_names, r.per_variable):
            stats = dist.summary()
            lo, hi = stats.pop("bwr")
            rows.append({"name": name, **stats, "bwr_lo": lo, "bwr_hi": hi})
        buffer = io.StringIO()
        pd.DataFrame(rows).to_csv(
            buffer, index=False, lineterminator="\n", float_format=lambda v: repr(float(v)),
        )
        return buffer.getvalue()

    @staticmethod
    def save_summary_csv(r: RIDResult, path: str | Path) -> None:
        Files.atomic_write(path, ResultDAO.summary_csv(r))

    @staticmethod
    def rset_to_dict(rset: RashomonSet, names: tuple[str, ...] | None = None) -> dict[str, Any]:
        data: dict[str, Any] = {
            "min_objective": rset.min_objective,
            "epsilon": rset.epsilon,
            "lambda": rset.lam,
            "depth": rset.depth_bound,
            "dataset_fingerprint": f"{rset.dataset_fingerprint:016x}",
            "trees": [
                {"objective": objective, "tree": tree.to_dict()}
                for objective, tree in zip(rset.objectives, rset.trees)
            ],
        }
        if names is not None:
            data["features"] = [rule.describe(names) for rule in rset.feature_map.entries]
        return data

    @staticmethod
    def save_rset(
        rset: RashomonSet, path: str | Path, names: tuple[str, ...] | None = None,
    ) -> None:
        ResultDAO.save_json(ResultDAO.rset_to_dict(rset, names), path)

    @staticmethod
    def report_to_dict(report: StabilityReport | CoverageReport | RecoveryReport) -> dict[str, Any]:
        data: dict[str, Any] = _interval_lists(asdict(report))
        return data

    @staticmethod
    def render_cdf_svg(dist: VIDistribution, name: str) -> str:
        """Step-function plot of one variable's CDF on the template's fixed geometry."""
        lo, hi = dist.support_min, dist.support_max
        span = hi - lo

        def x_of(value: float) -> float:
            return _PLOT_LEFT + (value - lo) / span * (_PLOT_RIGHT - _PLOT_LEFT)

        def y_of(mass: float) -> float:
            return _PLOT_BOTTOM - mass * (_PLOT_BOTTOM - _PLOT_TOP)

        points = [(x_of(lo), y_of(0.0))]
        previous = 0.0
        for value, mass in zip(dist.values, dist.cumulative):
            points.append((x_of(float(value)), y_of(previous)))
            points.append((x_of(float(value)), y_of(float(mass))))
            previous = float(mass)
        points.append((x_of(hi), y_of(1.0)))
        return load_template("cdf_plot.svg").substitute(
            title=html.escape(f"RID of {name}"),
            lo=f"{lo:g}",
            hi=f"{hi:g}",
            zero_x=f"{x_of(min(max(0.0, lo), hi)):.2f}",
            points=" ".join(f"{x:.2f},{y:.2f}" for x, y in points),
        )

    @staticmethod
    def save_svgs(r: RIDResult, directory: str | Path) -> list[Path]:
        """Write ``<variable>.svg`` per variable into ``directory``."""
        target = Path(directory)
        written = []
        for name, dist in zip(r.feature_names, r.per_variable):
            path = target / f"{name}.svg"
            Files.atomic_write(path, ResultDAO.render_cdf_svg(dist, name))
            written.append(path)
        return written
