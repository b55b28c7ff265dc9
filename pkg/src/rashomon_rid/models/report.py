"""Stability and coverage experiment reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from rashomon_rid.models.distribution import Interval


@dataclass(frozen=True)
class MethodStability:
    """Pairwise interval similarity for one uncertainty method."""

    method: str
    intervals: list[list[Interval]]
    jaccard: list[list[float]]
    median: float
    median_ci: Interval
    non_overlapping: list[list[bool]] = field(default_factory=list)


@dataclass(frozen=True)
class StabilityReport:
    """Per-method interval stability across independently generated datasets."""

    dgp: str
    n_datasets: int
    dataset_seeds: list[int]
    methods: list[MethodStability]

    def method(self, name: str) -> MethodStability:
        for entry in self.methods:
            if entry.method == name:
                return entry
        raise KeyError(name)


@dataclass(frozen=True)
class CoverageReport:
    """Share of test-set DGP reliances inside each variable's RID box-and-whisker range."""

    dgp: str
    n_test: int
    epsilon: float
    intervals: list[Interval]
    coverage: list[float]


@dataclass(frozen=True)
class RecoveryReport:
    """Distance between a variable's RID and the DGP's own reliance distribution."""

    dgp: str
    var: int
    emd: float
    rid_mean: float
    dgp_mean: float
