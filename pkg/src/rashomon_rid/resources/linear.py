"""Linear resource — least-squares Rashomon ellipsoids from CSV design matrices."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from rashomon_rid.dao.dataset_dao import DatasetDAO
from rashomon_rid.models.ellipsoid import CdfMethod
from rashomon_rid.resources.errors import UsageError, translated_errors
from rashomon_rid.services.linear_service import LinearService


class LinearResource:
    """Fits the OLS ellipsoid and reports extrema, CDF values and loss statistics.

    Built once at startup with all dependencies pre-wired.
    """

    def __init__(self, *, dataset_dao: DatasetDAO) -> None:
        self._dao = dataset_dao

    def analyze(
        self,
        design: str | Path,
        target: str | Path,
        epsilon: float,
        *,
        var: int | None = None,
        k: float | None = None,
        samples: int | None = None,
        seed: int = 0,
    ) -> dict[str, Any]:
        """Everything the ``linear`` command reports, as a JSON-ready dict.

        Raises:
            DataError: On unreadable files, shape mismatch or rank deficiency.
            UsageError: If only one of ``var`` and ``k`` is given.
        """
        with translated_errors():
            X = self._dao.load_matrix(design)
            y = self._dao.load_matrix(target)
            if y.shape[1] != 1:
                raise ValueError("the target file must hold exactly one column")
            e = LinearService.ols_fit(X, y[:, 0]).with_epsilon(epsilon)
            extrema = [LinearService.axis_extrema(e, j) for j in range(e.p)]
            output: dict[str, Any] = {
                "theta_star": e.center.tolist(),
                "c": e.offset,
                "epsilon": epsilon,
                "extrema": [[a.a, a.b] for a in extrema],
                "m_integral": LinearService.m_integral(e),
            }
            if (var is None) != (k is None):
                raise UsageError("--var and --k go together")
            if var is not None and k is not None:
                if not 0 <= var < e.p:
                    raise ValueError(f"coordinate {var} out of range for p={e.p}")
                cdf: dict[str, Any] = {
                    "var": var,
                    "k": k,
                    "analytic": LinearService.linear_rid_cdf(e, var, k),
                }
                if samples is not None:
                    cdf["monte_carlo"] = LinearService.linear_rid_cdf(
                        e, var, k, CdfMethod.MONTE_CARLO, samples=samples, seed=seed,
                    )
                output["cdf"] = cdf
            return output
