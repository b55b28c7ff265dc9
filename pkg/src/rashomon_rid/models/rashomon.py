"""Enumerated Rashomon set of sparse trees."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from rashomon_rid.models.dataset import FeatureMap
from rashomon_rid.models.tree import Tree


@dataclass(frozen=True, eq=False)
class RashomonSet:
    """Every canonical tree within ``epsilon`` of the optimal objective.

    Trees are sorted by (objective, canonical encoding).
    """

    trees: tuple[Tree, ...]
    objectives: tuple[float, ...]
    min_objective: float
    epsilon: float
    lam: float
    depth_bound: int
    dataset_fingerprint: int
    feature_map: FeatureMap

    def __len__(self) -> int:
        return len(self.trees)

    def leaf_histogram(self) -> dict[int, int]:
        """Number of member trees per leaf count."""
        return dict(sorted(Counter(tree.leaves() for tree in self.trees).items()))
