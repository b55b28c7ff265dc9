"""DGP predictor — the noiseless generating rule used as a model."""

from __future__ import annotations

from collections.abc import Hashable

import numpy as np
import numpy.typing as npt

from rashomon_rid.models.dgp import DgpId
from rashomon_rid.plugins.contracts.predictor import Predictor
from rashomon_rid.services.dgp_service import DgpService


class DgpPredictor(Predictor):
    """Applies ``DgpService.predict_batch`` to raw rows."""

    def __init__(self, dgp: DgpId) -> None:
        self._dgp = dgp

    @property
    def dgp(self) -> DgpId:
        return self._dgp

    @property
    def encoding_key(self) -> Hashable:
        return "raw"

    def encode(self, features: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return features

    def predict_encoded(self, encoded: npt.NDArray[np.float64]) -> npt.NDArray[np.int8]:
        return DgpService.predict_batch(self._dgp, encoded)

    def uses_variable(self, var: int) -> bool:
        return var in self._dgp.relevant_columns
