"""Shared fixtures for rashomon_rid tests."""

from __future__ import annotations

import os
from collections.abc import Iterator

import numpy as np
import pytest

from rashomon_rid.app import AppFactory
from rashomon_rid.config import RunConfig
from rashomon_rid.models.dataset import (
    BinDataset,
    Dataset,
    FeatureKind,
    FeatureMap,
    RuleKind,
    SplitRule,
)
from rashomon_rid.resources.state import ResourceState
from rashomon_rid.utils.bitset import Bitset
from rashomon_rid.utils.rng import SplitMix64


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Keep RID_* variables from the developer's shell out of every test."""
    for key in list(os.environ):
        if key.startswith("RID_"):
            monkeypatch.delenv(key)
    yield


def binary_dataset(features: list[list[int]], labels: list[int]) -> Dataset:
    """Categorical 0/1 dataset with columns named A, B, C, ..."""
    x = np.asarray(features, dtype=np.float64)
    p = x.shape[1]
    return Dataset(
        features=x,
        labels=np.asarray(labels, dtype=np.int8),
        feature_names=tuple(chr(ord("A") + j) for j in range(p)),
        feature_kinds=(FeatureKind.CATEGORICAL,) * p,
    )


def random_bin_dataset(seed: int, n: int, m: int) -> BinDataset:
    """Random bits for ``m`` split columns and the labels, one SplitMix64 stream."""
    rng = SplitMix64(seed)
    bits = rng.below_array(n * (m + 1), 2).reshape(n, m + 1).astype(bool)
    rules = tuple(SplitRule(j, RuleKind.THRESHOLD, 0.5) for j in range(m))
    return BinDataset(
        columns=tuple(Bitset.from_bools(bits[:, j]) for j in range(m)),
        labels=Bitset.from_bools(bits[:, m]),
        n=n,
        feature_map=FeatureMap(rules, m),
    )


@pytest.fixture()
def xor_dataset() -> Dataset:
    """Label is A xor B; C is noise. Twelve rows."""
    rows = [[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1, 0)]
    return binary_dataset(rows, [a ^ b for a, b, _ in rows])


@pytest.fixture()
def copy_dataset() -> Dataset:
    """Label equals A, which differs between the two halves; B never matters."""
    rows = [[i // 8, i % 2] for i in range(16)]
    return binary_dataset(rows, [a for a, _ in rows])


@pytest.fixture()
def small_config() -> RunConfig:
    """Cheap run: depth 2, three bootstraps."""
    return RunConfig(epsilon=0.05, lambda_=0.01, depth=2, bootstraps=3, seed=7)


@pytest.fixture()
def state() -> ResourceState:
    return AppFactory.create_state()
