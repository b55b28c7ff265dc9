"""Dataset ingestion, binarization and bootstrap resampling."""

from __future__ import annotations

import logging
from collections.abc import Collection
from pathlib import Path

import numpy as np
import numpy.typing as npt

from rashomon_rid.dao.dataset_dao import DatasetDAO
from rashomon_rid.models.dataset import (
    BinDataset,
    Dataset,
    FeatureKind,
    FeatureMap,
    RuleKind,
    SplitRule,
)
from rashomon_rid.utils.bitset import Bitset
from rashomon_rid.utils.rng import SplitMix64

logger = logging.getLogger(__name__)


class DatasetService:
    """Built once at startup with its DAO pre-wired."""

    def __init__(self, dataset_dao: DatasetDAO) -> None:
        self._dao = dataset_dao

    def load_csv(
        self,
        path: str | Path,
        label_col: str | None = None,
        *,
        categorical: Collection[str] = (),
        numeric: Collection[str] = (),
    ) -> Dataset:
        """Read a dataset; see ``DatasetDAO.load`` for the parsing rules."""
        return self._dao.load(path, label_col, categorical=categorical, numeric=numeric)

    def save_csv(self, d: Dataset, path: str | Path, label_col: str = "y") -> None:
        self._dao.save(d, path, label_col)

    @staticmethod
    def candidate_thresholds(
        column: npt.NDArray[np.float64], max_thresholds: int,
    ) -> npt.NDArray[np.float64]:
        """Midpoints between consecutive unique values, thinned to evenly spaced ranks."""
        unique = np.unique(column)
        midpoints = (unique[:-1] + unique[1:]) / 2.0
        if midpoints.size <= max_thresholds:
            return midpoints
        if max_thresholds == 1:
            return midpoints[[midpoints.size // 2]]
        ranks = np.rint(np.linspace(0, midpoints.size - 1, max_thresholds)).astype(np.int64)
        return midpoints[ranks]

    @staticmethod
    def binarize(d: Dataset, max_thresholds: int = 64) -> BinDataset:
        """Turn raw columns into binary split features.

        Categorical variables get one ``equals`` column per observed level
        (just the lower level when there are two);
        numeric variables get ``x <= t`` columns. Constant columns are dropped.

        Raises:
            ValueError: If no column survives ("no usable splits").
        """
        if max_thresholds < 1:
            raise ValueError("max_thresholds must be positive")
        rules: list[SplitRule] = []
        columns = []
        for var, kind in enumerate(d.feature_kinds):
            raw = d.features[:, var]
            if kind is FeatureKind.CATEGORICAL:
                levels = np.unique(np.rint(raw))
                # Two levels: the second column would be the complement of the first.
                if levels.size == 2:
                    levels = levels[:1]
                candidates = [SplitRule(var, RuleKind.EQUALS, float(level)) for level in levels]
            else:
                candidates = [
                    SplitRule(var, RuleKind.THRESHOLD, float(t))
                    for t in DatasetService.candidate_thresholds(raw, max_thresholds)
                ]
            for rule in candidates:
                bits = rule.apply(raw)
                if bits.all() or not bits.any():
                    continue
                rules.append(rule)
                columns.append(Bitset.from_bools(bits))
        if not rules:
            raise ValueError("no usable splits")
        return BinDataset(
            columns=tuple(columns),
            labels=Bitset.from_bools(d.labels.astype(bool)),
            n=d.n,
            feature_map=FeatureMap(tuple(rules), d.p),
        )

    @staticmethod
    def split_rng(master: int, index: int) -> int:
        """Seed of the independent stream ``index`` under ``master``."""
        return SplitMix64.split(master, index)

    @staticmethod
    def bootstrap_indices(n: int, seed: int) -> npt.NDArray[np.int64]:
        """``n`` row indices drawn with replacement from the stream ``seed``."""
        return SplitMix64(seed).below_array(n, n)

    @staticmethod
    def bootstrap_sample(d: Dataset, seed: int) -> Dataset:
        """Same-size resample with replacement, deterministic in ``(d, seed)``."""
        return d.take(DatasetService.bootstrap_indices(d.n, seed))
