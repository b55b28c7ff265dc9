"""Quadratic-loss geometry of the linear model class."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np
import numpy.typing as npt

_SYMMETRY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class Ellipsoid:
    """``{theta : (theta - center)^T A (theta - center) <= epsilon}``.

    ``offset`` is the optimal sum of squared errors; a point on the boundary has
    SSE ``offset + epsilon``.
    """

    A: npt.NDArray[np.float64]
    center: npt.NDArray[np.float64]
    offset: float
    epsilon: float | None = None

    def __post_init__(self) -> None:
        p = self.center.shape[0]
        if self.A.shape != (p, p):
            raise ValueError("A must be p x p")
        if not np.allclose(self.A, self.A.T, rtol=0.0, atol=_SYMMETRY_TOLERANCE):
            raise ValueError("A must be symmetric")
        if self.offset < -_SYMMETRY_TOLERANCE:
            raise ValueError("optimal loss must be non-negative")
        if self.epsilon is not None and self.epsilon <= 0:
            raise ValueError("epsilon must be positive")

    @property
    def p(self) -> int:
        return int(self.center.shape[0])

    def with_epsilon(self, epsilon: float) -> Ellipsoid:
        return replace(self, epsilon=epsilon)

    def require_epsilon(self) -> float:
        if self.epsilon is None:
            raise ValueError("epsilon is not set on this ellipsoid")
        return self.epsilon


@dataclass(frozen=True)
class AxisInterval:
    """Extreme values ``[a_j, b_j]`` of coordinate ``j`` over the solid ellipsoid."""

    j: int
    a: float
    b: float

    @property
    def half_width(self) -> float:
        return (self.b - self.a) / 2.0


class CdfMethod(str, Enum):
    """How the linear-class RID is evaluated."""

    ANALYTIC = "analytic"
    MONTE_CARLO = "monte_carlo"
