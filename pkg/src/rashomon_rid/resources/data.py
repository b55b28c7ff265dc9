"""Data resource — synthetic generation and CSV datasets."""

from __future__ import annotations

from collections.abc import Collection
from pathlib import Path

from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.dgp import DgpId, DgpSpec
from rashomon_rid.resources.errors import translated_errors
from rashomon_rid.services.dataset_service import DatasetService
from rashomon_rid.services.dgp_service import DgpService


class DataResource:
    """Dataset generation, loading and saving.

    Built once at startup with all dependencies pre-wired.
    """

    def __init__(self, *, dataset_service: DatasetService) -> None:
        self._service = dataset_service

    def generate(
        self, dgp: str, n: int | None, seed: int, noise: float | None = None,
    ) -> Dataset:
        """Sample a dataset; ``n`` and ``noise`` default to the process's published values.

        Raises:
            DataError: On an unknown process or an invalid spec.
        """
        with translated_errors():
            dgp_id = DgpId(dgp)
            spec = DgpSpec(
                dgp_id,
                n if n is not None else dgp_id.default_n,
                seed,
                noise if noise is not None else dgp_id.default_noise,
            )
            return DgpService.generate(spec)

    def load(
        self,
        path: str | Path,
        label: str | None = None,
        *,
        categorical: Collection[str] = (),
        numeric: Collection[str] = (),
    ) -> Dataset:
        """Read a CSV dataset.

        Raises:
            DataError: If the file is missing or malformed.
        """
        with translated_errors():
            return self._service.load_csv(path, label, categorical=categorical, numeric=numeric)

    def save(self, d: Dataset, path: str | Path) -> None:
        with translated_errors():
            self._service.save_csv(d, path)
