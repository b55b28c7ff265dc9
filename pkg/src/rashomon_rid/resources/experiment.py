"""Experiment resource — stability, coverage and recovery drivers."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from rashomon_rid.config.settings import RunConfig
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.dgp import DgpId
from rashomon_rid.resources.errors import translated_errors
from rashomon_rid.services.stability_service import StabilityService


class ExperimentResource:
    """Runs validation experiments and returns JSON-ready reports.

    Built once at startup with all dependencies pre-wired.
    """

    def __init__(self, *, result_dao: ResultDAO) -> None:
        self._results = result_dao

    def stability(
        self, dgp: str, n_datasets: int, cfg: RunConfig, n: int | None = None,
    ) -> dict[str, Any]:
        with translated_errors():
            report = StabilityService.stability_experiment(DgpId(dgp), n_datasets, cfg, n=n)
        return self._results.report_to_dict(report)

    def coverage(
        self,
        dgp: str,
        train: Dataset,
        cfg: RunConfig,
        n_test: int,
        scales: Sequence[float] | None = None,
    ) -> dict[str, Any]:
        """Coverage per variable, optionally repeated over scaled epsilons."""
        with translated_errors():
            dgp_id = DgpId(dgp)
            if scales is None:
                reports = [StabilityService.coverage_all(dgp_id, train, cfg, n_test)]
            else:
                reports = StabilityService.epsilon_sensitivity(
                    dgp_id, train, cfg, n_test, scales,
                )
        return {
            "variables": list(train.feature_names),
            "runs": [self._results.report_to_dict(report) for report in reports],
        }

    def recovery(
        self, dgp: str, d: Dataset, cfg: RunConfig, name: str, dgp_bootstraps: int,
    ) -> dict[str, Any]:
        with translated_errors():
            if name not in d.feature_names:
                raise ValueError(f"unknown variable {name!r}")
            report = StabilityService.recovery_experiment(
                DgpId(dgp), d, cfg, d.feature_names.index(name), dgp_bootstraps,
            )
        return {"name": name, **self._results.report_to_dict(report)}

    def save(self, data: dict[str, Any], out: str) -> None:
        with translated_errors():
            self._results.save_json(data, out)
