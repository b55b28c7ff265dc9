"""Weighted importance distributions and the bootstrap RID result."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    from rashomon_rid.config.settings import RunConfig

WEIGHT_TOLERANCE = 1e-9
_MEAN_TOLERANCE = 1e-9
# Slack on cumulative weights when inverting the CDF.
_QUANTILE_SLACK = 1e-12
_WHISKER = 1.5


class ConsistencyError(RuntimeError):
    """Raised when two independent computations of one quantity disagree."""


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"interval lower bound {self.lo} exceeds upper bound {self.hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def to_list(self) -> list[float]:
        return [self.lo, self.hi]


@dataclass(frozen=True, eq=False)
class VIDistribution:
    """Sorted atoms with positive weights summing to one."""

    values: npt.NDArray[np.float64]
    weights: npt.NDArray[np.float64]
    support_min: float = -1.0
    support_max: float = 1.0

    def __post_init__(self) -> None:
        if self.values.size == 0 or self.values.shape != self.weights.shape:
            raise ValueError("a distribution needs matching, non-empty values and weights")
        if (self.weights <= 0).any():
            raise ValueError("atom weights must be positive")
        if abs(float(self.weights.sum()) - 1.0) > WEIGHT_TOLERANCE:
            raise ValueError(f"atom weights sum to {float(self.weights.sum())!r}, not 1")
        if (np.diff(self.values) <= 0).any():
            raise ValueError("atom values must be strictly increasing")

    @staticmethod
    def from_samples(
        values: npt.ArrayLike,
        weights: npt.ArrayLike | None = None,
        *,
        support: tuple[float, float] = (-1.0, 1.0),
    ) -> VIDistribution:
        """Merge equal values (exact comparison) by summing their weights in input order."""
        raw = np.asarray(values, dtype=np.float64).ravel()
        if weights is None:
            mass = np.full(raw.size, 1.0 / raw.size) if raw.size else np.zeros(0)
        else:
            mass = np.asarray(weights, dtype=np.float64).ravel()
        unique, inverse = np.unique(raw, return_inverse=True)
        merged = np.bincount(inverse.ravel(), weights=mass, minlength=unique.size)
        return VIDistribution(unique, merged, support[0], support[1])

    @property
    def cumulative(self) -> npt.NDArray[np.float64]:
        result: npt.NDArray[np.float64] = np.cumsum(self.weights)
        return result

    def cdf(self, k: float) -> float:
        """``P(value <= k)``; right-continuous."""
        index = int(np.searchsorted(self.values, k, side="right"))
        if index == 0:
            return 0.0
        if index == self.values.size:
            return 1.0
        return float(self.cumulative[index - 1])

    def p_greater(self, threshold: float) -> float:
        return 1.0 - self.cdf(threshold)

    def mean(self) -> float:
        """Weighted mean, cross-checked against the integral of the survival function.

        Raises:
            ConsistencyError: If the two computations differ by more than 1e-9.
        """
        direct = float(np.dot(self.weights, self.values))
        low = min(self.support_min, float(self.values[0]))
        high = max(self.support_max, float(self.values[-1]))
        breaks = np.unique(np.concatenate(([low], self.values, [high])))
        survival = np.array([1.0 - self.cdf(float(x)) for x in breaks[:-1]])
        integral = low + float(np.dot(survival, np.diff(breaks)))
        if abs(direct - integral) > _MEAN_TOLERANCE:
            raise ConsistencyError(
                f"mean mismatch: weighted sum {direct!r} vs CDF integral {integral!r}",
            )
        return direct

    def quantile(self, alpha: float) -> float:
        """Smallest atom ``v`` with ``F(v) >= alpha``."""
        if not 0.0 < alpha < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        index = int(np.searchsorted(self.cumulative, alpha - _QUANTILE_SLACK, side="left"))
        return float(self.values[min(index, self.values.size - 1)])

    def iqr(self) -> float:
        return self.quantile(0.75) - self.quantile(0.25)

    def bwr(self) -> Interval:
        """Box-and-whisker range: extreme atoms within 1.5 IQR of the quartiles."""
        q25, q75 = self.quantile(0.25), self.quantile(0.75)
        spread = q75 - q25
        inside = self.values[
            (self.values >= q25 - _WHISKER * spread) & (self.values <= q75 + _WHISKER * spread)
        ]
        return Interval(float(inside[0]), float(inside[-1]))

    def summary(self) -> dict[str, Any]:
        """Statistics reported per variable in result files."""
        return {
            "mean": self.mean(),
            "q25": self.quantile(0.25),
            "q50": self.quantile(0.5),
            "q75": self.quantile(0.75),
            "iqr": self.iqr(),
            "bwr": self.bwr().to_list(),
            "p_gt_zero": self.p_greater(0.0),
        }


@dataclass(frozen=True, eq=False)
class BootstrapBlock:
    """Importance values for one bootstrap's Rashomon set.

    ``values`` is ``|R_b| x p``; every row carries ``weight = 1/(B |R_b|)``.
    """

    index: int
    values: npt.NDArray[np.float64]
    weight: float
    rset_size: int
    min_objective: float


@dataclass(frozen=True, eq=False)
class RIDResult:
    """Per-variable RIDs plus the full per-bootstrap importance tensor."""

    feature_names: tuple[str, ...]
    per_variable: tuple[VIDistribution, ...]
    blocks: tuple[BootstrapBlock, ...]
    config: RunConfig

    @staticmethod
    def from_blocks(
        feature_names: Sequence[str],
        blocks: Sequence[BootstrapBlock],
        config: RunConfig,
        *,
        support: tuple[float, float] = (-1.0, 1.0),
    ) -> RIDResult:
        """Marginalize the tensor, merging atoms in (bootstrap, tree) order."""
        p = len(feature_names)
        per_variable = []
        for var in range(p):
            values = np.concatenate([block.values[:, var] for block in blocks])
            weights = np.concatenate(
                [np.full(block.values.shape[0], block.weight) for block in blocks],
            )
            per_variable.append(VIDistribution.from_samples(values, weights, support=support))
        return RIDResult(tuple(feature_names), tuple(per_variable), tuple(blocks), config)

    def variable_index(self, name: str) -> int:
        try:
            return self.feature_names.index(name)
        except ValueError as error:
            raise ValueError(f"unknown variable {name!r}") from error

    def joint_cdf(self, thresholds: Sequence[float]) -> float:
        """Mass of models whose importance is ``<= k_j`` for every variable at once."""
        if len(thresholds) != len(self.feature_names):
            raise ValueError(
                f"expected {len(self.feature_names)} thresholds, got {len(thresholds)}",
            )
        limit = np.asarray(thresholds, dtype=np.float64)
        total = 0.0
        for block in self.blocks:
            inside = int(np.all(block.values <= limit, axis=1).sum())
            total += block.weight * inside
        return total

    def expected_importance(self) -> list[float]:
        return [dist.mean() for dist in self.per_variable]

    def ranking_correct(self, relevant: frozenset[int]) -> bool:
        """True when every relevant variable's mean beats every other variable's."""
        means = self.expected_importance()
        others = [means[j] for j in range(len(means)) if j not in relevant]
        if not others:
            return True
        return min(means[j] for j in relevant) > max(others)

    def mcr_per_bootstrap(self, var: int) -> list[Interval]:
        """The model class reliance interval inside each bootstrap's Rashomon set."""
        return [
            Interval(float(block.values[:, var].min()), float(block.values[:, var].max()))
            for block in self.blocks
        ]
