"""Zero-one loss, switched loss and subtractive model reliance."""

from __future__ import annotations

import logging
from collections.abc import Hashable, Sequence
from typing import Any

import numpy as np
import numpy.typing as npt

from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.strategy import MrStrategy, StrategyKind
from rashomon_rid.plugins.contracts.predictor import Predictor
from rashomon_rid.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

FloatMatrix = npt.NDArray[np.float64]


def _error_rate(predicted: npt.NDArray[np.int8], labels: npt.NDArray[np.int8]) -> float:
    return int(np.count_nonzero(predicted != labels)) / labels.size


class _Encodings:
    """Encodings of one feature matrix, shared by predictors with equal keys."""

    def __init__(self, features: FloatMatrix) -> None:
        self._features = features
        self._cache: dict[Hashable, Any] = {}

    def for_predictor(self, predictor: Predictor) -> Any:
        key = predictor.encoding_key
        if key not in self._cache:
            self._cache[key] = predictor.encode(self._features)
        return self._cache[key]


class ImportanceService:
    """Permutation-style importance for any Predictor.

    Under ``e_divide`` the first ``n // 2`` rows and the next ``n // 2`` rows
    exchange column ``var`` positionally; an odd last row is dropped and the
    baseline loss uses the same rows. Under ``permutations(K)`` column ``var``
    is shuffled ``K`` times by Fisher-Yates on the stream
    ``split_rng(seed, var)``.
    """

    @staticmethod
    def zero_one_loss(f: Predictor, d: Dataset) -> float:
        """Fraction of rows ``f`` misclassifies."""
        return _error_rate(f.predict(d.features), d.labels)

    @staticmethod
    def _half(d: Dataset) -> int:
        if d.n < 2:
            raise ValueError("e_divide needs at least two rows")
        return d.n // 2

    @staticmethod
    def baseline(d: Dataset, strat: MrStrategy) -> tuple[FloatMatrix, npt.NDArray[np.int8]]:
        """Rows and labels the unswitched loss is measured on."""
        if strat.kind is StrategyKind.E_DIVIDE:
            rows = 2 * ImportanceService._half(d)
            return d.features[:rows], d.labels[:rows]
        return d.features, d.labels

    @staticmethod
    def switched(
        d: Dataset, var: int, strat: MrStrategy, seed: int,
    ) -> tuple[list[FloatMatrix], npt.NDArray[np.int8]]:
        """Feature matrices with column ``var`` scrambled, and their shared labels.

        ``perm:K`` draws its K permutations from the per-variable stream
        ``split_rng(seed, var)``, so every variable gets its own permutations
        under one seed and the result does not depend on which other
        variables are scored alongside it.

        Raises:
            ValueError: If ``var`` is out of range or ``e_divide`` gets fewer than two rows.
        """
        if not 0 <= var < d.p:
            raise ValueError(f"variable index {var} out of range for p={d.p}")
        if strat.kind is StrategyKind.E_DIVIDE:
            h = ImportanceService._half(d)
            x = d.features[: 2 * h].copy()
            x[:h, var] = d.features[h : 2 * h, var]
            x[h:, var] = d.features[:h, var]
            return [x], d.labels[: 2 * h]
        rng = SplitMix64(SplitMix64.split(seed, var))
        matrices = []
        for _ in range(strat.count):
            x = d.features.copy()
            x[:, var] = d.features[rng.permutation(d.n), var]
            matrices.append(x)
        return matrices, d.labels

    @staticmethod
    def loss_switch(f: Predictor, d: Dataset, var: int, strat: MrStrategy, seed: int) -> float:
        """Expected loss of ``f`` once column ``var`` stops carrying its information.

        Permutations come from ``split_rng(seed, var)``, not from ``seed`` itself.
        """
        matrices, labels = ImportanceService.switched(d, var, strat, seed)
        rates = [_error_rate(f.predict(x), labels) for x in matrices]
        return float(np.mean(rates))

    @staticmethod
    def sub_mr(f: Predictor, d: Dataset, var: int, strat: MrStrategy, seed: int) -> float:
        """Switched loss minus baseline loss, in ``[-1, 1]``."""
        return float(ImportanceService.sub_mr_matrix([f], d, [var], strat, seed)[0, 0])

    @staticmethod
    def sub_mr_matrix(
        predictors: Sequence[Predictor],
        d: Dataset,
        variables: Sequence[int],
        strat: MrStrategy,
        seed: int,
    ) -> FloatMatrix:
        """``sub_mr`` for every (predictor, variable) pair.

        Each scrambled matrix is built and encoded once per encoding key.
        A predictor that ignores a variable scores exactly 0 for it.
        """
        for var in variables:
            if not 0 <= var < d.p:
                raise ValueError(f"variable index {var} out of range for p={d.p}")
        base_x, base_y = ImportanceService.baseline(d, strat)
        out = np.zeros((len(predictors), len(variables)), dtype=np.float64)
        users = [
            [i for i, f in enumerate(predictors) if f.uses_variable(var)] for var in variables
        ]
        needed = sorted({i for group in users for i in group})
        if not needed:
            return out

        base = _Encodings(base_x)
        base_loss = {
            i: _error_rate(
                predictors[i].predict_encoded(base.for_predictor(predictors[i])), base_y,
            )
            for i in needed
        }
        for k, var in enumerate(variables):
            if not users[k]:
                continue
            matrices, labels = ImportanceService.switched(d, var, strat, seed)
            encodings = [_Encodings(x) for x in matrices]
            for i in users[k]:
                f = predictors[i]
                rates = [
                    _error_rate(f.predict_encoded(enc.for_predictor(f)), labels)
                    for enc in encodings
                ]
                out[i, k] = float(np.mean(rates)) - base_loss[i]
        logger.debug(
            "sub_mr: %d predictors x %d variables (%s)", len(predictors), len(variables), strat,
        )
        return out
