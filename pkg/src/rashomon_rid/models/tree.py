"""Sparse binary decision trees over binarized split features."""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import gmpy2
import numpy as np
import numpy.typing as npt
from gmpy2 import mpz


class Tree(ABC):
    """Immutable tree node. A ``Split`` goes left when its bit is 0."""

    @abstractmethod
    def predict(self, row: Sequence[int]) -> int:
        """Label of the leaf reached by following ``row``'s bits."""

    @abstractmethod
    def leaves(self) -> int: ...

    @abstractmethod
    def depth(self) -> int: ...

    @abstractmethod
    def features(self) -> frozenset[int]:
        """Binary column indices tested anywhere in the tree."""

    @abstractmethod
    def positives(self, columns: Sequence[mpz], support: mpz) -> mpz:
        """Samples inside ``support`` that the tree labels 1."""

    @abstractmethod
    def _fill(
        self,
        encoded: npt.NDArray[np.bool_],
        rows: npt.NDArray[np.int64],
        out: npt.NDArray[np.int8],
    ) -> None: ...

    @abstractmethod
    def to_dict(self) -> dict[str, Any]: ...

    @cached_property
    def canonical(self) -> str:
        """Compact JSON encoding; equal strings mean equal structure."""
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def predict_encoded(self, encoded: npt.NDArray[np.bool_]) -> npt.NDArray[np.int8]:
        """Predict every row of an ``n x m`` boolean split matrix."""
        out = np.zeros(encoded.shape[0], dtype=np.int8)
        self._fill(encoded, np.arange(encoded.shape[0], dtype=np.int64), out)
        return out

    def errors(self, columns: Sequence[mpz], labels: mpz, support: mpz) -> int:
        """Misclassified samples inside ``support``."""
        return int(gmpy2.popcount((self.positives(columns, support) ^ labels) & support))

    @staticmethod
    def from_dict(node: dict[str, Any]) -> Tree:
        """Decode ``{"leaf": 0|1}`` / ``{"feature", "left", "right"}``.

        Raises:
            ValueError: If the node is malformed.
        """
        if "leaf" in node:
            label = node["leaf"]
            if label not in (0, 1):
                raise ValueError(f"leaf label must be 0 or 1, got {label!r}")
            return Leaf(int(label))
        try:
            return Split(
                int(node["feature"]),
                Tree.from_dict(node["left"]),
                Tree.from_dict(node["right"]),
            )
        except (KeyError, TypeError) as error:
            raise ValueError(f"malformed tree node: {node!r}") from error


@dataclass(frozen=True)
class Leaf(Tree):
    label: int

    def predict(self, row: Sequence[int]) -> int:
        return self.label

    def leaves(self) -> int:
        return 1

    def depth(self) -> int:
        return 0

    def features(self) -> frozenset[int]:
        return frozenset()

    def positives(self, columns: Sequence[mpz], support: mpz) -> mpz:
        return support if self.label else mpz(0)

    def _fill(
        self,
        encoded: npt.NDArray[np.bool_],
        rows: npt.NDArray[np.int64],
        out: npt.NDArray[np.int8],
    ) -> None:
        out[rows] = self.label

    def to_dict(self) -> dict[str, Any]:
        return {"leaf": self.label}


@dataclass(frozen=True)
class Split(Tree):
    feature: int
    left: Tree
    right: Tree

    def predict(self, row: Sequence[int]) -> int:
        branch = self.right if row[self.feature] else self.left
        return branch.predict(row)

    def leaves(self) -> int:
        return self.left.leaves() + self.right.leaves()

    def depth(self) -> int:
        return 1 + max(self.left.depth(), self.right.depth())

    def features(self) -> frozenset[int]:
        return self.left.features() | self.right.features() | {self.feature}

    def positives(self, columns: Sequence[mpz], support: mpz) -> mpz:
        column = columns[self.feature]
        return (
            self.left.positives(columns, support & ~column)
            | self.right.positives(columns, support & column)
        )

    def _fill(
        self,
        encoded: npt.NDArray[np.bool_],
        rows: npt.NDArray[np.int64],
        out: npt.NDArray[np.int8],
    ) -> None:
        if rows.size == 0:
            return
        bit = encoded[rows, self.feature]
        self.left._fill(encoded, rows[~bit], out)
        self.right._fill(encoded, rows[bit], out)

    def to_dict(self) -> dict[str, Any]:
        return {
            "feature": self.feature,
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }


def regularized_objective(errors: int, leaves: int, n: int, lam: float) -> float:
    """Misclassification rate plus ``lam`` per leaf.

    Every objective in the package goes through this one expression so that
    enumeration bounds and direct evaluation compare bit-identical floats.
    """
    return errors / n + lam * leaves


def is_redundant_split(left: Tree, right: Tree) -> bool:
    """True when both children are leaves with the same label.

    Such a split predicts what a single leaf predicts, so canonical trees never hold one.
    """
    return isinstance(left, Leaf) and isinstance(right, Leaf) and left.label == right.label
