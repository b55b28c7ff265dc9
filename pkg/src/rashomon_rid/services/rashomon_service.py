"""Optimal objective and full Rashomon-set enumeration for depth-bounded trees."""

from __future__ import annotations

import bisect
import logging
from collections.abc import Sequence
from typing import Any, NamedTuple

import gmpy2
import numpy as np
from gmpy2 import mpz

from rashomon_rid.models.dataset import BinDataset, Dataset
from rashomon_rid.models.distribution import Interval
from rashomon_rid.models.rashomon import RashomonSet
from rashomon_rid.models.tree import (
    Leaf,
    Split,
    Tree,
    is_redundant_split,
    regularized_objective,
)
from rashomon_rid.plugins.contracts.metric import ImportanceMetric
from rashomon_rid.plugins.tree_predictor import TreePredictor

logger = logging.getLogger(__name__)

MEMBERSHIP_TOLERANCE = 1e-12
# Admissible slack on inner budgets; the root filter is exact.
_BUDGET_SLACK = 1e-9
DEFAULT_MAX_MODELS = 1_000_000


class RashomonSetTooLargeError(Exception):
    """Raised when enumeration would exceed ``max_models`` trees."""

    def __init__(self, count: int, limit: int, bootstrap: int | None = None) -> None:
        self.count = count
        self.limit = limit
        self.bootstrap = bootstrap
        where = "" if bootstrap is None else f" in bootstrap {bootstrap}"
        super().__init__(
            f"rashomon set too large{where}: at least {count} trees (limit {limit})",
        )

    def __reduce__(self) -> tuple[type[RashomonSetTooLargeError], tuple[int, int, int | None]]:
        return (type(self), (self.count, self.limit, self.bootstrap))


class Subproblem(NamedTuple):
    """Memo key: the samples still in scope and the splits left."""

    support: mpz
    depth_left: int


class _Scored(NamedTuple):
    value: float
    errors: int
    leaves: int
    tree: Tree | None


class _Search:
    """One enumeration call's memo tables over a single BinDataset."""

    def __init__(self, d: BinDataset, lam: float, max_models: int) -> None:
        self._columns = d.columns
        self._labels = d.labels
        self._n = d.n
        self._lam = lam
        self._max_models = max_models
        self._best: dict[Subproblem, _Scored] = {}
        self._lists: dict[Subproblem, tuple[float, list[_Scored]]] = {}

    def _value(self, errors: int, leaves: int) -> float:
        return regularized_objective(errors, leaves, self._n, self._lam)

    def _children(self, support: mpz) -> list[tuple[int, mpz, mpz]]:
        """Splits that leave both children non-empty."""
        result = []
        for feature, column in enumerate(self._columns):
            right = support & column
            if right == 0 or right == support:
                continue
            result.append((feature, support & ~column, right))
        return result

    def best(self, key: Subproblem) -> _Scored:
        """Optimal (value, errors, leaves) over trees rooted at ``key``."""
        cached = self._best.get(key)
        if cached is not None:
            return cached
        total = int(gmpy2.popcount(key.support))
        positives = int(gmpy2.popcount(key.support & self._labels))
        leaf_errors = min(positives, total - positives)
        result = _Scored(self._value(leaf_errors, 1), leaf_errors, 1, None)
        # Any split costs at least two leaves.
        if key.depth_left > 0 and result.value > 2 * self._lam:
            for _, left, right in self._children(key.support):
                left_best = self.best(Subproblem(left, key.depth_left - 1))
                if left_best.value + self._lam >= result.value:
                    continue
                right_best = self.best(Subproblem(right, key.depth_left - 1))
                errors = left_best.errors + right_best.errors
                leaves = left_best.leaves + right_best.leaves
                value = self._value(errors, leaves)
                if value < result.value:
                    result = _Scored(value, errors, leaves, None)
        self._best[key] = result
        return result

    def within(self, key: Subproblem, budget: float) -> list[_Scored]:
        """Every canonical tree at ``key`` with value ``<= budget`` (plus slack), by value.

        A split over two equal-label leaves is skipped; the DP optimum from
        ``best`` stays an admissible bound because it ranges over a superset.
        """
        cached = self._lists.get(key)
        if cached is not None and budget <= cached[0]:
            items = cached[1]
            end = bisect.bisect_right([item.value for item in items], budget + _BUDGET_SLACK)
            return items[:end]

        limit = budget + _BUDGET_SLACK
        total = int(gmpy2.popcount(key.support))
        positives = int(gmpy2.popcount(key.support & self._labels))
        items: list[_Scored] = []
        for label, errors in ((0, positives), (1, total - positives)):
            value = self._value(errors, 1)
            if value <= limit:
                items.append(_Scored(value, errors, 1, Leaf(label)))

        if key.depth_left > 0 and 2 * self._lam <= limit:
            for feature, left, right in self._children(key.support):
                left_key = Subproblem(left, key.depth_left - 1)
                right_key = Subproblem(right, key.depth_left - 1)
                left_bound = self.best(left_key).value
                if left_bound + self._lam > limit:
                    continue
                right_bound = self.best(right_key).value
                if left_bound + right_bound > limit:
                    continue
                lefts = self.within(left_key, budget - right_bound)
                rights = self.within(right_key, budget - left_bound)
                for left_item in lefts:
                    room = limit - left_item.value
                    for right_item in rights:
                        if right_item.value > room:
                            break
                        assert left_item.tree is not None and right_item.tree is not None
                        if is_redundant_split(left_item.tree, right_item.tree):
                            continue
                        errors = left_item.errors + right_item.errors
                        leaves = left_item.leaves + right_item.leaves
                        value = self._value(errors, leaves)
                        if value > limit:
                            continue
                        items.append(
                            _Scored(
                                value, errors, leaves,
                                Split(feature, left_item.tree, right_item.tree),
                            ),
                        )
                    if len(items) > self._max_models:
                        raise RashomonSetTooLargeError(len(items), self._max_models)

        items.sort(key=lambda item: item.value)
        self._lists[key] = (budget, items)
        return items


class RashomonService:
    """Exact optimum, Rashomon-set enumeration and the set-level importance summaries."""

    @staticmethod
    def objective(t: Tree, d: BinDataset, lam: float) -> float:
        """Misclassification rate of ``t`` on ``d`` plus ``lam`` per leaf."""
        errors = t.errors(d.columns, d.labels, d.everyone)
        return regularized_objective(errors, t.leaves(), d.n, lam)

    @staticmethod
    def membership_bound(min_objective: float, epsilon: float) -> float:
        """Largest objective admitted into the Rashomon set."""
        return min_objective + epsilon + MEMBERSHIP_TOLERANCE

    @staticmethod
    def min_objective(d: BinDataset, lam: float, depth: int) -> float:
        """Exact minimum objective over trees of depth ``<= depth``."""
        if depth < 0 or lam < 0:
            raise ValueError("depth and lambda must be non-negative")
        search = _Search(d, lam, DEFAULT_MAX_MODELS)
        return search.best(Subproblem(d.everyone, depth)).value

    @staticmethod
    def enumerate_rset(
        d: BinDataset,
        epsilon: float,
        lam: float,
        depth: int,
        max_models: int = DEFAULT_MAX_MODELS,
    ) -> RashomonSet:
        """All canonical trees within ``epsilon`` of the optimum.

        Raises:
            ValueError: If ``epsilon <= 0``.
            RashomonSetTooLargeError: If more than ``max_models`` trees qualify.
        """
        if epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if depth < 0 or lam < 0:
            raise ValueError("depth and lambda must be non-negative")
        search = _Search(d, lam, max_models)
        root = Subproblem(d.everyone, depth)
        optimum = search.best(root).value
        bound = RashomonService.membership_bound(optimum, epsilon)
        members = [item for item in search.within(root, bound) if item.value <= bound]
        if len(members) > max_models:
            raise RashomonSetTooLargeError(len(members), max_models)
        members.sort(key=lambda item: (item.value, item.tree.canonical if item.tree else ""))
        trees = tuple(item.tree for item in members if item.tree is not None)
        objectives = tuple(item.value for item in members)
        logger.debug(
            "rashomon set: %d trees, optimum %.6f, epsilon %.4f", len(trees), optimum, epsilon,
        )
        return RashomonSet(
            trees=trees,
            objectives=objectives,
            min_objective=min(objectives),
            epsilon=epsilon,
            lam=lam,
            depth_bound=depth,
            dataset_fingerprint=d.fingerprint,
            feature_map=d.feature_map,
        )

    @staticmethod
    def predictors(rset: RashomonSet) -> list[TreePredictor]:
        return [TreePredictor(tree, rset.feature_map) for tree in rset.trees]

    @staticmethod
    def importance_matrix(
        rset: RashomonSet,
        d: Dataset,
        metric: ImportanceMetric,
        seed: int,
        variables: Sequence[int] | None = None,
    ) -> np.ndarray[Any, np.dtype[np.float64]]:
        """Metric value per (tree, variable): an ``|R| x len(variables)`` matrix."""
        chosen = list(range(d.p)) if variables is None else list(variables)
        return metric.evaluate_batch(RashomonService.predictors(rset), d, chosen, seed)

    @staticmethod
    def mcr(
        rset: RashomonSet, d: Dataset, var: int, metric: ImportanceMetric, seed: int,
    ) -> Interval:
        """Model class reliance: ``[min, max]`` of the metric over the set.

        Raises:
            RuntimeError: If the set is empty.
        """
        if not rset.trees:
            raise RuntimeError("empty rashomon set")
        values = RashomonService.importance_matrix(rset, d, metric, seed, [var])[:, 0]
        return Interval(float(values.min()), float(values.max()))

    @staticmethod
    def vic(
        rset: RashomonSet, d: Dataset, metric: ImportanceMetric, seed: int,
    ) -> list[list[float]]:
        """Variable importance cloud: for each variable, one value per member tree."""
        matrix = RashomonService.importance_matrix(rset, d, metric, seed)
        return [matrix[:, var].tolist() for var in range(d.p)]

    @staticmethod
    def rset_statistics(rset: RashomonSet) -> dict[str, Any]:
        return {
            "size": len(rset),
            "min_objective": rset.min_objective,
            "leaves": rset.leaf_histogram(),
        }
