"""Predictor contract — anything that labels raw feature rows."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Hashable
from typing import Any

import numpy as np
import numpy.typing as npt


class Predictor(ABC):
    """Maps raw ``Dataset`` rows to labels in {0, 1}.

    Prediction is split into ``encode`` and ``predict_encoded`` so that many
    predictors sharing an ``encoding_key`` can reuse one encoding of the same
    (possibly column-switched) feature matrix.
    """

    @property
    @abstractmethod
    def encoding_key(self) -> Hashable:
        """Predictors with equal keys accept each other's encodings."""

    @abstractmethod
    def encode(self, features: npt.NDArray[np.float64]) -> Any:
        """Transform an ``n x p`` raw matrix into this predictor's input form."""

    @abstractmethod
    def predict_encoded(self, encoded: Any) -> npt.NDArray[np.int8]:
        """Labels for every row of an encoding produced by ``encode``."""

    @abstractmethod
    def uses_variable(self, var: int) -> bool:
        """False only when the output provably ignores raw column ``var``."""

    def predict(self, features: npt.NDArray[np.float64]) -> npt.NDArray[np.int8]:
        return self.predict_encoded(self.encode(features))
