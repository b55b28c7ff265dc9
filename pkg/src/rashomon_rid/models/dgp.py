"""Data-generating process identifiers and generation specs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

_RELEVANT: dict[str, frozenset[int]] = {
    "monk1": frozenset({1, 2, 5}),
    "monk3": frozenset({2, 4, 5}),
    "chen": frozenset({1, 2, 3, 4}),
    "friedman": frozenset({1, 2, 3, 4, 5}),
}
_ARITY = {"monk1": 6, "monk3": 6, "chen": 10, "friedman": 6}
# Sample sizes of the published training sets.
_DEFAULT_N = {"monk1": 124, "monk3": 124, "chen": 1000, "friedman": 200}
MONK3_NOISE = 0.05


class DgpId(str, Enum):
    """The four synthetic data-generating processes."""

    MONK1 = "monk1"
    MONK3 = "monk3"
    CHEN = "chen"
    FRIEDMAN = "friedman"

    @property
    def arity(self) -> int:
        return _ARITY[self.value]

    @property
    def default_n(self) -> int:
        return _DEFAULT_N[self.value]

    @property
    def is_monk(self) -> bool:
        return self in (DgpId.MONK1, DgpId.MONK3)

    @property
    def supports_label_noise(self) -> bool:
        return self is DgpId.MONK3

    @property
    def default_noise(self) -> float:
        """Label-flip probability of the published process."""
        return MONK3_NOISE if self is DgpId.MONK3 else 0.0

    @property
    def relevant_vars(self) -> frozenset[int]:
        """Variables the rule reads, 1-based (``X1`` is 1)."""
        return _RELEVANT[self.value]

    @property
    def relevant_columns(self) -> frozenset[int]:
        """The same variables as 0-based column indices."""
        return frozenset(var - 1 for var in _RELEVANT[self.value])

    @property
    def extraneous_columns(self) -> frozenset[int]:
        return frozenset(range(self.arity)) - self.relevant_columns


@dataclass(frozen=True)
class DgpSpec:
    """What to sample: process, size, Monk 3 label noise and seed."""

    id: DgpId
    n: int
    seed: int = 0
    noise: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.noise <= 1.0:
            raise ValueError("noise must lie in [0, 1]")
        if self.noise and not self.id.supports_label_noise:
            raise ValueError(f"{self.id.value} does not take label noise")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
