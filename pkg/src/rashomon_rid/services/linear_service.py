"""Rashomon sets of least-squares linear models.

For squared-error loss the models within ``epsilon`` of the optimum form the
solid ellipsoid ``(theta - theta*)^T X^T X (theta - theta*) <= epsilon``.
Everything here is unnormalized SSE; the tree services use the normalized
zero-one objective instead.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt
from scipy import integrate, linalg, special

from rashomon_rid.models.distribution import ConsistencyError
from rashomon_rid.models.ellipsoid import AxisInterval, CdfMethod, Ellipsoid
from rashomon_rid.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

RANK_TOLERANCE = 1e-10
QUADRATURE_TOLERANCE = 1e-8
DEFAULT_SAMPLES = 100_000

FloatArray = npt.NDArray[np.float64]


class LinearService:
    """OLS level sets, coordinate extrema, volume-fraction RIDs and loss distributions."""

    @staticmethod
    def _eigen(A: FloatArray) -> tuple[FloatArray, FloatArray]:
        """Eigenpairs of ``A``.

        Raises:
            ValueError: If an eigenvalue falls below ``1e-10 * lambda_max``.
        """
        w, V = linalg.eigh(A)
        if w[-1] <= 0 or w[0] < RANK_TOLERANCE * w[-1]:
            raise ValueError("design matrix is rank deficient")
        return w, V

    @staticmethod
    def ols_fit(X: npt.ArrayLike, y: npt.ArrayLike) -> Ellipsoid:
        """Least-squares fit; the returned ellipsoid has no epsilon yet.

        Raises:
            ValueError: On shape mismatch or rank deficiency.
        """
        design = np.asarray(X, dtype=np.float64)
        target = np.asarray(y, dtype=np.float64).ravel()
        if design.ndim != 2 or design.shape[0] != target.size:
            raise ValueError("X must be n x p with one target per row")
        A = design.T @ design
        LinearService._eigen(A)
        center = linalg.solve(A, design.T @ target, assume_a="pos")
        offset = float(target @ (target - design @ center))
        logger.debug("ols: p=%d, optimal SSE %.6g", design.shape[1], offset)
        return Ellipsoid(A=A, center=center, offset=max(offset, 0.0))

    @staticmethod
    def level_set_value(e: Ellipsoid, theta: npt.ArrayLike) -> float:
        """SSE of ``theta`` through the quadratic-form identity."""
        diff = np.asarray(theta, dtype=np.float64) - e.center
        return float(diff @ e.A @ diff) + e.offset

    @staticmethod
    def inverse_sqrt(e: Ellipsoid) -> FloatArray:
        """``A^{-1/2}`` by symmetric eigendecomposition."""
        w, V = LinearService._eigen(e.A)
        result: FloatArray = (V / np.sqrt(w)) @ V.T
        return result

    @staticmethod
    def axis_extrema(e: Ellipsoid, j: int) -> AxisInterval:
        """Smallest and largest ``theta_j`` on the ellipsoid: ``theta*_j -+ sqrt(eps (A^-1)_jj)``."""
        epsilon = e.require_epsilon()
        unit = np.zeros(e.p)
        unit[j] = 1.0
        inverse_jj = float(linalg.solve(e.A, unit, assume_a="pos")[j])
        half = math.sqrt(epsilon * inverse_jj)
        center = float(e.center[j])
        return AxisInterval(j=j, a=center - half, b=center + half)

    @staticmethod
    def sample_ellipsoid(e: Ellipsoid, n: int, seed: int) -> FloatArray:
        """``n`` points uniform in the solid ellipsoid.

        Directions are normalized Gaussians, radii ``U^(1/p)``; the unit ball
        is mapped through ``sqrt(epsilon) A^{-1/2}``.
        """
        if n < 1:
            raise ValueError("n_samples must be at least 1")
        epsilon = e.require_epsilon()
        rng = SplitMix64(seed)
        gauss = rng.normal_array(n * e.p).reshape(n, e.p)
        norms = np.linalg.norm(gauss, axis=1, keepdims=True)
        norms[norms == 0.0] = 1.0
        radii = rng.double_array(n) ** (1.0 / e.p)
        ball = gauss / norms * radii[:, None]
        result: FloatArray = e.center + math.sqrt(epsilon) * ball @ LinearService.inverse_sqrt(e)
        return result

    @staticmethod
    def linear_rid_cdf(
        e: Ellipsoid,
        j: int,
        k: float,
        method: CdfMethod = CdfMethod.ANALYTIC,
        *,
        samples: int = DEFAULT_SAMPLES,
        seed: int = 0,
    ) -> float:
        """Fraction of the ellipsoid's volume with ``theta_j <= k``.

        The coordinate marginal of a uniform p-ellipsoid is a symmetric
        Beta((p+1)/2, (p+1)/2) on ``[a_j, b_j]``.

        Raises:
            ConsistencyError: If the incomplete beta does not evaluate.
            ValueError: If ``samples < 1`` for Monte Carlo.
        """
        if method is CdfMethod.MONTE_CARLO:
            points = LinearService.sample_ellipsoid(e, samples, seed)
            return float(np.count_nonzero(points[:, j] <= k)) / samples
        extrema = LinearService.axis_extrema(e, j)
        r = min(1.0, max(-1.0, (k - float(e.center[j])) / extrema.half_width))
        shape = (e.p + 1) / 2.0
        value = float(special.betainc(shape, shape, (r + 1.0) / 2.0))
        if not math.isfinite(value):
            raise ConsistencyError(f"incomplete beta failed at r={r!r}, p={e.p}")
        return value

    @staticmethod
    def rld_linear(e: Ellipsoid, k: float) -> float:
        """Share of the Rashomon volume whose loss is at most ``k``."""
        epsilon = e.require_epsilon()
        if k < e.offset:
            return 0.0
        return min(1.0, ((k - e.offset) / epsilon) ** (e.p / 2.0))

    @staticmethod
    def m_integral(e: Ellipsoid) -> float:
        """``integral of (1 - RLD(k)) dk`` over ``[c, c + eps]``, i.e. ``eps p / (p + 2)``.

        Raises:
            ConsistencyError: If quadrature disagrees with the closed form by more than 1e-8.
        """
        epsilon = e.require_epsilon()
        closed = epsilon * e.p / (e.p + 2)
        numeric, _ = integrate.quad(
            lambda k: 1.0 - LinearService.rld_linear(e, k),
            e.offset,
            e.offset + epsilon,
            epsabs=1e-12,
            epsrel=1e-12,
            limit=200,
        )
        if abs(numeric - closed) > QUADRATURE_TOLERANCE:
            raise ConsistencyError(f"m integral: closed form {closed!r} vs quadrature {numeric!r}")
        return closed

    @staticmethod
    def rid_deviation(e: Ellipsoid, j: int, lo: float, hi: float) -> float:
        """``integral over [lo, hi] of |1[theta*_j <= k] - F(k)| dk`` by quadrature."""
        if hi < lo:
            raise ValueError("hi must not be below lo")
        center = float(e.center[j])

        def gap(k: float) -> float:
            step = 1.0 if center <= k else 0.0
            return abs(step - LinearService.linear_rid_cdf(e, j, k))

        breaks = [center] if lo < center < hi else None
        value, _ = integrate.quad(gap, lo, hi, points=breaks, epsabs=1e-11, limit=200)
        return float(value)
