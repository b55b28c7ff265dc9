"""How the switched loss of subtractive model reliance is estimated."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class StrategyKind(str, Enum):
    E_DIVIDE = "e_divide"
    PERMUTATIONS = "permutations"


@dataclass(frozen=True)
class MrStrategy:
    """``e_divide`` or ``permutations(count)``."""

    kind: StrategyKind
    count: int = 0

    def __post_init__(self) -> None:
        if self.kind is StrategyKind.PERMUTATIONS and self.count < 1:
            raise ValueError("permutation count must be positive")

    @staticmethod
    def parse(text: str) -> MrStrategy:
        """Parse ``e_divide`` or ``perm:K``.

        Raises:
            ValueError: On any other spelling.
        """
        value = text.strip().lower()
        if value == StrategyKind.E_DIVIDE.value:
            return MrStrategy(StrategyKind.E_DIVIDE)
        if value.startswith("perm:"):
            try:
                count = int(value[len("perm:"):])
            except ValueError as error:
                raise ValueError(f"bad permutation count in {text!r}") from error
            return MrStrategy(StrategyKind.PERMUTATIONS, count)
        raise ValueError(f"unknown strategy {text!r} (expected e_divide or perm:K)")

    def __str__(self) -> str:
        if self.kind is StrategyKind.E_DIVIDE:
            return self.kind.value
        return f"perm:{self.count}"
