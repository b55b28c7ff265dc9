"""RID resource — bootstrap estimation, Rashomon sets and result files."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

from rashomon_rid.config.settings import RunConfig
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.distribution import RIDResult
from rashomon_rid.models.rashomon import RashomonSet
from rashomon_rid.resources.errors import translated_errors
from rashomon_rid.services.dataset_service import DatasetService
from rashomon_rid.services.rashomon_service import RashomonService
from rashomon_rid.services.rid_service import RidService


class RidResource:
    """RID estimation and result persistence.

    Built once at startup with all dependencies pre-wired.
    """

    def __init__(self, *, result_dao: ResultDAO) -> None:
        self._results = result_dao

    def estimate(self, d: Dataset, cfg: RunConfig) -> RIDResult:
        """Run the bootstrap estimator.

        Raises:
            DataError: If a bootstrap sample cannot be binarized.
            ResourceLimitError: If a Rashomon set exceeds ``max_models``.
        """
        with translated_errors():
            return RidService.estimate_rid(d, cfg)

    def rashomon_set(self, d: Dataset, cfg: RunConfig) -> RashomonSet:
        """Rashomon set of ``d`` itself, without resampling."""
        with translated_errors():
            binary = DatasetService.binarize(d, cfg.max_thresholds)
            return RashomonService.enumerate_rset(
                binary, cfg.epsilon, cfg.lambda_, cfg.depth, cfg.max_models,
            )

    def save(
        self,
        r: RIDResult,
        out: str | Path,
        *,
        csv: str | Path | None = None,
        svg: str | Path | None = None,
    ) -> None:
        """Write the JSON result and, when asked, the summary CSV and per-variable plots."""
        with translated_errors():
            self._results.save_rid(r, out)
            if csv is not None:
                self._results.save_summary_csv(r, csv)
            if svg is not None:
                self._results.save_svgs(r, svg)

    def save_rset(self, rset: RashomonSet, d: Dataset, out: str | Path) -> None:
        with translated_errors():
            self._results.save_rset(rset, out, d.feature_names)

    def rset_summary(self, rset: RashomonSet) -> dict[str, Any]:
        return RashomonService.rset_statistics(rset)

    def load(self, path: str | Path) -> RIDResult:
        """Read a result written by ``save``.

        Raises:
            DataError: If the file is missing or malformed.
        """
        with translated_errors():
            return self._results.load_rid(path)

    def variable_stats(
        self, r: RIDResult, name: str, threshold: float = 0.0,
    ) -> dict[str, Any]:
        """Distribution statistics of one variable plus per-bootstrap MCR overlap with 0.

        Raises:
            DataError: If the variable is unknown.
        """
        with translated_errors():
            var = r.variable_index(name)
        dist = r.per_variable[var]
        intervals = r.mcr_per_bootstrap(var)
        return {
            "name": name,
            **dist.summary(),
            "p_greater": {"threshold": threshold, "value": dist.p_greater(threshold)},
            "mcr_overlaps_zero": sum(1 for i in intervals if i.contains(0.0)) / len(intervals),
        }

    def joint_cdf(self, r: RIDResult, thresholds: Sequence[float]) -> float:
        with translated_errors():
            return r.joint_cdf(thresholds)

    def required_bootstraps(self, t: float, delta: float) -> int:
        with translated_errors():
            return RidService.required_bootstraps(t, delta)
