"""Tree predictor — a sparse tree read through its FeatureMap."""

from __future__ import annotations

from collections.abc import Hashable
from functools import cached_property
from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from gmpy2 import mpz

from rashomon_rid.models.dataset import FeatureMap
from rashomon_rid.models.tree import Tree
from rashomon_rid.plugins.contracts.predictor import Predictor
from rashomon_rid.utils.bitset import Bitset


class TreeEncoding(NamedTuple):
    """Binary split columns of a raw matrix, as bitsets."""

    columns: tuple[mpz, ...]
    n: int


class TreePredictor(Predictor):
    """Binarizes raw rows with the tree's FeatureMap, then follows the tree."""

    def __init__(self, tree: Tree, feature_map: FeatureMap) -> None:
        self._tree = tree
        self._map = feature_map

    @property
    def tree(self) -> Tree:
        return self._tree

    @property
    def encoding_key(self) -> Hashable:
        return self._map

    @cached_property
    def variables(self) -> frozenset[int]:
        """Raw variables the tree splits on."""
        return self._map.variables_of(self._tree.features())

    def encode(self, features: npt.NDArray[np.float64]) -> TreeEncoding:
        encoded = self._map.encode(features)
        columns = tuple(Bitset.from_bools(encoded[:, j]) for j in range(self._map.m))
        return TreeEncoding(columns, int(features.shape[0]))

    def predict_encoded(self, encoded: TreeEncoding) -> npt.NDArray[np.int8]:
        positives = self._tree.positives(encoded.columns, Bitset.full(encoded.n))
        return Bitset.to_bools(positives, encoded.n).astype(np.int8)

    def uses_variable(self, var: int) -> bool:
        return var in self.variables
