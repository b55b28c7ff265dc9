"""CSV access for raw datasets."""

from __future__ import annotations

import io
import logging
from collections.abc import Collection
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from rashomon_rid.models.dataset import Dataset, FeatureKind
from rashomon_rid.utils.files import Files

logger = logging.getLogger(__name__)

MAX_CATEGORICAL_LEVELS = 16


def _shortest(value: float) -> str:
    return repr(float(value))


class DatasetDAO:
    """Reads and writes datasets as header-first, comma-separated UTF-8 files."""

    def __init__(self, *, max_categorical_levels: int = MAX_CATEGORICAL_LEVELS) -> None:
        self._max_levels = max_categorical_levels

    def _detect_kind(self, column: pd.Series) -> FeatureKind:
        """Integer-valued columns with few distinct values are categorical."""
        values = column.to_numpy(dtype=np.float64)
        integral = bool(np.array_equal(values, np.rint(values)))
        if integral and np.unique(values).size <= self._max_levels:
            return FeatureKind.CATEGORICAL
        return FeatureKind.NUMERIC

    @staticmethod
    def _read_numeric(path: str | Path, min_columns: int = 1) -> pd.DataFrame:
        """Read a header-first CSV whose every cell is a number.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: On an empty file or a non-numeric cell.
        """
        source = Path(path)
        if not source.exists():
            raise FileNotFoundError(f"no such file: {source}")
        try:
            frame = pd.read_csv(source, float_precision="round_trip")
        except pd.errors.EmptyDataError as error:
            raise ValueError(f"empty dataset: {source}") from error
        if frame.empty or frame.shape[1] < min_columns:
            raise ValueError(f"empty dataset: {source}")
        try:
            numbers = frame.apply(pd.to_numeric, errors="raise")
        except (ValueError, TypeError) as error:
            raise ValueError(f"non-numeric cell in {source}: {error}") from error
        if numbers.isna().to_numpy().any():
            raise ValueError(f"non-numeric cell in {source}: missing value")
        numbers.columns = [str(name) for name in numbers.columns]
        return numbers

    def load(
        self,
        path: str | Path,
        label_col: str | None = None,
        *,
        categorical: Collection[str] = (),
        numeric: Collection[str] = (),
    ) -> Dataset:
        """Parse a CSV into a Dataset. The label defaults to the last column.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: On a missing label column, non-binary labels,
                non-numeric cells or an empty file.
        """
        numbers = DatasetDAO._read_numeric(path, min_columns=2)
        label = label_col if label_col is not None else str(numbers.columns[-1])
        if label not in numbers.columns:
            raise ValueError(f"label column {label!r} not found")
        unknown = (set(categorical) | set(numeric)) - set(numbers.columns)
        if unknown:
            raise ValueError(f"kind override for unknown columns: {sorted(unknown)}")

        labels = numbers[label].to_numpy(dtype=np.float64)
        if not np.isin(labels, (0.0, 1.0)).all():
            raise ValueError("label not binary")
        features = numbers.drop(columns=[label])
        names = tuple(str(name) for name in features.columns)
        kinds: list[FeatureKind] = []
        for name in names:
            if name in categorical:
                kinds.append(FeatureKind.CATEGORICAL)
            elif name in numeric:
                kinds.append(FeatureKind.NUMERIC)
            else:
                kinds.append(self._detect_kind(features[name]))
        logger.debug("loaded %s: n=%d p=%d", path, len(numbers), len(names))
        return Dataset(
            features=features.to_numpy(dtype=np.float64),
            labels=labels.astype(np.int8),
            feature_names=names,
            feature_kinds=tuple(kinds),
        )

    @staticmethod
    def load_matrix(path: str | Path) -> np.ndarray[Any, np.dtype[np.float64]]:
        """Read an all-numeric CSV with a header row as an ``n x k`` float matrix."""
        return DatasetDAO._read_numeric(path).to_numpy(dtype=np.float64)

    @staticmethod
    def dumps(d: Dataset, label_col: str = "y") -> str:
        """CSV text with shortest round-trip floats and integer categorical cells."""
        frame = pd.DataFrame(
            {
                name: (
                    d.features[:, j].astype(np.int64)
                    if d.feature_kinds[j] is FeatureKind.CATEGORICAL
                    else d.features[:, j]
                )
                for j, name in enumerate(d.feature_names)
            },
        )
        frame[label_col] = d.labels.astype(np.int64)
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n", float_format=_shortest)
        return buffer.getvalue()

    def save(self, d: Dataset, path: str | Path, label_col: str = "y") -> None:
        """Write the dataset atomically."""
        Files.atomic_write(path, DatasetDAO.dumps(d, label_col))
