"""Synthetic data-generating processes and their noiseless decision rules."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from rashomon_rid.models.dataset import Dataset, FeatureKind
from rashomon_rid.models.dgp import DgpId, DgpSpec
from rashomon_rid.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

# Levels of X1..X6 in the Monk's problems.
MONK_LEVELS = (3, 3, 2, 3, 4, 2)
CHEN_THRESHOLD = 2.048
FRIEDMAN_THRESHOLD = 15.0


class DgpService:
    """Sampling and rule evaluation for Monk 1, Monk 3, Chen and Friedman."""

    @staticmethod
    def _signal(dgp: DgpId, x: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        """Noiseless score of the two continuous processes."""
        if dgp is DgpId.CHEN:
            signal: npt.NDArray[np.float64] = (
                -2.0 * np.sin(x[:, 0]) + np.maximum(x[:, 1], 0.0) + x[:, 2] + np.exp(-x[:, 3])
            )
            return signal
        return (
            10.0 * np.sin(np.pi * x[:, 0] * x[:, 1])
            + 20.0 * (x[:, 2] - 0.5) ** 2
            + 10.0 * x[:, 3]
            + 5.0 * x[:, 4]
        )

    @staticmethod
    def predict_batch(dgp: DgpId, x: npt.NDArray[np.float64]) -> npt.NDArray[np.int8]:
        """Noiseless rule applied to every row of ``x``.

        Raises:
            ValueError: If ``x`` does not have the process's arity.
        """
        if x.ndim != 2 or x.shape[1] != dgp.arity:
            raise ValueError(f"{dgp.value} expects {dgp.arity} features per row")
        if dgp is DgpId.CHEN:
            return (DgpService._signal(dgp, x) >= CHEN_THRESHOLD).astype(np.int8)
        if dgp is DgpId.FRIEDMAN:
            return (DgpService._signal(dgp, x) >= FRIEDMAN_THRESHOLD).astype(np.int8)
        v = np.rint(x)
        if dgp is DgpId.MONK1:
            rule = (v[:, 0] == v[:, 1]) | (v[:, 4] == 1)
        else:
            rule = ((v[:, 4] == 3) & (v[:, 3] == 1)) | ((v[:, 4] != 4) & (v[:, 1] != 3))
        return rule.astype(np.int8)

    @staticmethod
    def dgp_predict(dgp: DgpId, row: Sequence[float]) -> int:
        """Noiseless rule on a single row."""
        x = np.asarray(row, dtype=np.float64).reshape(1, -1)
        return int(DgpService.predict_batch(dgp, x)[0])

    @staticmethod
    def relevant_vars(dgp: DgpId) -> frozenset[int]:
        """Variables the rule reads, 1-based."""
        return dgp.relevant_vars

    @staticmethod
    def generate(spec: DgpSpec) -> Dataset:
        """Sample ``spec.n`` rows; fully determined by ``spec.seed``.

        Monk draws come row-major from one stream; Monk 3 flips labels with a
        second block of uniforms. Chen draws eleven normals per row (ten
        features, then the noise term); Friedman draws six uniforms per row,
        then one normal per row.
        """
        rng = SplitMix64(spec.seed)
        dgp = spec.id
        n = spec.n
        if dgp.is_monk:
            levels = np.asarray(MONK_LEVELS, dtype=np.uint64)
            draws = rng.u64_array(n * dgp.arity).reshape(n, dgp.arity)
            features = (draws % levels).astype(np.float64) + 1.0
            labels = DgpService.predict_batch(dgp, features)
            if spec.noise > 0.0:
                flips = rng.double_array(n) < spec.noise
                labels = np.where(flips, 1 - labels, labels).astype(np.int8)
            kinds = (FeatureKind.CATEGORICAL,) * dgp.arity
        elif dgp is DgpId.CHEN:
            normals = rng.normal_array(n * (dgp.arity + 1)).reshape(n, dgp.arity + 1)
            features = normals[:, : dgp.arity]
            score = DgpService._signal(dgp, features) + normals[:, dgp.arity]
            labels = (score >= CHEN_THRESHOLD).astype(np.int8)
            kinds = (FeatureKind.NUMERIC,) * dgp.arity
        else:
            features = rng.double_array(n * dgp.arity).reshape(n, dgp.arity)
            noise = rng.normal_array(n)
            score = DgpService._signal(dgp, features) + noise
            labels = (score >= FRIEDMAN_THRESHOLD).astype(np.int8)
            kinds = (FeatureKind.NUMERIC,) * dgp.arity
        logger.debug("generated %s n=%d seed=%d", dgp.value, n, spec.seed)
        return Dataset(
            features=np.ascontiguousarray(features, dtype=np.float64),
            labels=labels,
            feature_names=tuple(f"X{j + 1}" for j in range(dgp.arity)),
            feature_kinds=kinds,
        )
