"""Subtractive model reliance plugin — the shipped importance metric."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.strategy import MrStrategy
from rashomon_rid.plugins.contracts.metric import ImportanceMetric
from rashomon_rid.plugins.contracts.predictor import Predictor
from rashomon_rid.services.importance_service import ImportanceService


class SubtractiveModelReliance(ImportanceMetric):
    """Switched loss minus original loss, for a fixed estimation strategy."""

    name = "sub_mr"

    def __init__(self, strategy: MrStrategy) -> None:
        self._strategy = strategy

    @property
    def strategy(self) -> MrStrategy:
        return self._strategy

    def evaluate(self, predictor: Predictor, d: Dataset, var: int, seed: int) -> float:
        return ImportanceService.sub_mr(predictor, d, var, self._strategy, seed)

    def evaluate_batch(
        self,
        predictors: Sequence[Predictor],
        d: Dataset,
        variables: Sequence[int],
        seed: int,
    ) -> npt.NDArray[np.float64]:
        return ImportanceService.sub_mr_matrix(predictors, d, variables, self._strategy, seed)
