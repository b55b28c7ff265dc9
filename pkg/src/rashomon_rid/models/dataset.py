"""Raw and binarized dataset models."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
import numpy.typing as npt
from gmpy2 import mpz

from rashomon_rid.utils.bitset import Bitset


class FeatureKind(str, Enum):
    """How a raw column is binarized."""

    NUMERIC = "numeric"
    CATEGORICAL = "categorical"


class RuleKind(str, Enum):
    THRESHOLD = "threshold"
    EQUALS = "equals"


@dataclass(frozen=True, eq=False)
class Dataset:
    """Tabular samples with binary labels.

    Categorical columns hold small non-negative integers stored as floats.
    """

    features: npt.NDArray[np.float64]
    labels: npt.NDArray[np.int8]
    feature_names: tuple[str, ...]
    feature_kinds: tuple[FeatureKind, ...]

    def __post_init__(self) -> None:
        if self.features.ndim != 2:
            raise ValueError("features must be a 2-d matrix")
        n, p = self.features.shape
        if n < 1 or p < 1:
            raise ValueError("empty dataset")
        if self.labels.shape != (n,):
            raise ValueError("labels must have one entry per row")
        if not np.isin(self.labels, (0, 1)).all():
            raise ValueError("label not binary")
        if len(self.feature_names) != p or len(self.feature_kinds) != p:
            raise ValueError("feature names and kinds must match the column count")
        for j, kind in enumerate(self.feature_kinds):
            column = self.features[:, j]
            if not np.isfinite(column).all():
                raise ValueError(f"non-numeric cell in column {self.feature_names[j]!r}")
            if kind is FeatureKind.CATEGORICAL and not np.array_equal(column, np.rint(column)):
                raise ValueError(
                    f"categorical column {self.feature_names[j]!r} has non-integer values",
                )

    @property
    def n(self) -> int:
        return int(self.features.shape[0])

    @property
    def p(self) -> int:
        return int(self.features.shape[1])

    def take(self, rows: npt.ArrayLike) -> Dataset:
        """A new dataset made of the given row indices, in order."""
        index = np.asarray(rows, dtype=np.int64)
        return Dataset(
            features=self.features[index],
            labels=self.labels[index],
            feature_names=self.feature_names,
            feature_kinds=self.feature_kinds,
        )

    def with_labels(self, labels: npt.ArrayLike) -> Dataset:
        return Dataset(
            features=self.features,
            labels=np.asarray(labels, dtype=np.int8),
            feature_names=self.feature_names,
            feature_kinds=self.feature_kinds,
        )


@dataclass(frozen=True)
class SplitRule:
    """One binary split feature and the raw variable it came from.

    ``threshold`` sets the bit when ``x <= value``; ``equals`` sets it when
    ``round(x) == value``.
    """

    orig_var: int
    kind: RuleKind
    value: float

    def apply(self, column: npt.NDArray[np.float64]) -> npt.NDArray[np.bool_]:
        if self.kind is RuleKind.THRESHOLD:
            return column <= self.value
        return np.rint(column) == self.value

    def describe(self, names: tuple[str, ...]) -> str:
        name = names[self.orig_var]
        if self.kind is RuleKind.THRESHOLD:
            return f"{name} <= {self.value!r}"
        return f"{name} == {int(self.value)}"


@dataclass(frozen=True)
class FeatureMap:
    """Provenance of every binary column, in column order."""

    entries: tuple[SplitRule, ...]
    n_vars: int

    def __post_init__(self) -> None:
        for rule in self.entries:
            if not 0 <= rule.orig_var < self.n_vars:
                raise ValueError("split rule refers to an unknown variable")

    @property
    def m(self) -> int:
        return len(self.entries)

    def encode(self, features: npt.NDArray[np.float64]) -> npt.NDArray[np.bool_]:
        """Binarize raw rows: an ``n x m`` boolean matrix."""
        encoded = np.empty((features.shape[0], self.m), dtype=bool)
        for index, rule in enumerate(self.entries):
            encoded[:, index] = rule.apply(features[:, rule.orig_var])
        return encoded

    def variables_of(self, bin_features: frozenset[int]) -> frozenset[int]:
        """Raw variables behind a set of binary column indices."""
        return frozenset(self.entries[f].orig_var for f in bin_features)


@dataclass(frozen=True, eq=False)
class BinDataset:
    """Binary split columns as ``mpz`` bitsets over the ``n`` samples."""

    columns: tuple[mpz, ...]
    labels: mpz
    n: int
    feature_map: FeatureMap

    def __post_init__(self) -> None:
        if not self.columns:
            raise ValueError("no usable splits")
        if len(self.columns) != self.feature_map.m:
            raise ValueError("column count does not match the feature map")

    @property
    def m(self) -> int:
        return len(self.columns)

    @property
    def everyone(self) -> mpz:
        return Bitset.full(self.n)

    def row(self, index: int) -> tuple[int, ...]:
        """Bits of one sample, indexed by binary column."""
        return tuple(int(column.bit_test(index)) for column in self.columns)

    def label(self, index: int) -> int:
        return int(self.labels.bit_test(index))

    @cached_property
    def fingerprint(self) -> int:
        """64-bit digest of the columns and labels."""
        digest = hashlib.blake2b(digest_size=8)
        digest.update(self.n.to_bytes(8, "little"))
        width = (self.n + 7) // 8
        for bits in (*self.columns, self.labels):
            digest.update(int(bits).to_bytes(width, "little"))
        return int.from_bytes(digest.digest(), "little")
