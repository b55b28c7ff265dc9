"""Importance metric contract — pluggable per-variable importance."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from rashomon_rid.models.dataset import Dataset
from rashomon_rid.plugins.contracts.predictor import Predictor


class ImportanceMetric(ABC):
    """A bounded importance score for one (predictor, dataset, variable).

    RID works with any metric whose values lie in ``[support_min, support_max]``.
    """

    name: str = ""
    support_min: float = -1.0
    support_max: float = 1.0

    @abstractmethod
    def evaluate(self, predictor: Predictor, d: Dataset, var: int, seed: int) -> float:
        """Importance of raw column ``var`` to ``predictor`` on ``d``."""

    def evaluate_batch(
        self,
        predictors: Sequence[Predictor],
        d: Dataset,
        variables: Sequence[int],
        seed: int,
    ) -> npt.NDArray[np.float64]:
        """``len(predictors) x len(variables)`` matrix of ``evaluate`` results.

        Implementations may share work across predictors but must return the
        same values as calling ``evaluate`` one cell at a time.
        """
        out = np.empty((len(predictors), len(variables)), dtype=np.float64)
        for i, predictor in enumerate(predictors):
            for k, var in enumerate(variables):
                out[i, k] = self.evaluate(predictor, d, var, seed)
        return out
