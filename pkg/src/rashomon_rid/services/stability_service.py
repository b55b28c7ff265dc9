"""Interval stability, coverage and recovery experiments."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations

import numpy as np
from scipy import stats

from rashomon_rid.config.settings import RunConfig
from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.dgp import DgpId, DgpSpec
from rashomon_rid.models.distribution import Interval, RIDResult, VIDistribution
from rashomon_rid.models.report import (
    CoverageReport,
    MethodStability,
    RecoveryReport,
    StabilityReport,
)
from rashomon_rid.plugins.dgp_predictor import DgpPredictor
from rashomon_rid.services.dataset_service import DatasetService
from rashomon_rid.services.dgp_service import DgpService
from rashomon_rid.services.importance_service import ImportanceService
from rashomon_rid.services.rashomon_service import RashomonService
from rashomon_rid.services.rid_service import RidService
from rashomon_rid.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

METHODS = ("rid", "mcr", "vic")
MEDIAN_CI_RESAMPLES = 1000
EPSILON_SCALES = (0.75, 1.0, 1.25)
# Stream index for the median-CI bootstrap, far from dataset and bootstrap indices.
_CI_STREAM = 1 << 62


class StabilityService:
    """Drivers that compare uncertainty intervals across datasets and against the DGP."""

    @staticmethod
    def jaccard(a: Interval, b: Interval) -> float:
        """Overlap length over union length.

        Two equal intervals score 1 even when degenerate; a point against any
        other interval scores 0.
        """
        if a.lo == b.lo and a.hi == b.hi:
            return 1.0
        overlap = max(0.0, min(a.hi, b.hi) - max(a.lo, b.lo))
        union = a.width + b.width - overlap
        if union <= 0.0:
            return 0.0
        return overlap / union

    @staticmethod
    def emd(f: VIDistribution, g: VIDistribution) -> float:
        """Earth mover's distance: the integral of ``|F - G|`` over the line."""
        return float(stats.wasserstein_distance(f.values, g.values, f.weights, g.weights))

    @staticmethod
    def non_overlapping(intervals: Sequence[Interval]) -> list[bool]:
        """Flag each interval that meets none of the others."""
        flags = []
        for i, a in enumerate(intervals):
            touches = any(
                a.lo <= b.hi and b.lo <= a.hi for other, b in enumerate(intervals) if other != i
            )
            flags.append(not touches)
        return flags

    @staticmethod
    def coverage_of(interval: Interval, values: Sequence[float]) -> float:
        """Fraction of ``values`` inside ``interval``."""
        if not values:
            raise ValueError("no values to cover")
        return sum(1 for value in values if interval.contains(value)) / len(values)

    @staticmethod
    def _generate(dgp: DgpId, n: int, seed: int) -> Dataset:
        return DgpService.generate(DgpSpec(dgp, n, seed, dgp.default_noise))

    @staticmethod
    def _intervals(d: Dataset, cfg: RunConfig) -> dict[str, list[Interval]]:
        """Per-variable RID, MCR and VIC intervals for one dataset."""
        metric = RidService.metric_for(cfg)
        support = (metric.support_min, metric.support_max)
        rid = RidService.estimate_rid(d, cfg, metric)
        binary = DatasetService.binarize(d, cfg.max_thresholds)
        rset = RashomonService.enumerate_rset(
            binary, cfg.epsilon, cfg.lambda_, cfg.depth, cfg.max_models,
        )
        matrix = RashomonService.importance_matrix(rset, d, metric, cfg.seed)
        mcr = [Interval(float(col.min()), float(col.max())) for col in matrix.T]
        vic = [VIDistribution.from_samples(col, support=support).bwr() for col in matrix.T]
        return {"rid": [dist.bwr() for dist in rid.per_variable], "mcr": mcr, "vic": vic}

    @staticmethod
    def _median_ci(scores: Sequence[float], seed: int) -> Interval:
        """95% interval of the median over resamples of the pairwise scores."""
        values = np.asarray(scores, dtype=np.float64)
        rng = SplitMix64(SplitMix64.split(seed, _CI_STREAM))
        picks = rng.below_array(MEDIAN_CI_RESAMPLES * values.size, values.size)
        medians = np.median(values[picks.reshape(MEDIAN_CI_RESAMPLES, values.size)], axis=1)
        lo, hi = np.quantile(medians, [0.025, 0.975])
        return Interval(float(lo), float(hi))

    @staticmethod
    def _method_stability(
        method: str, intervals: list[list[Interval]], seed: int,
    ) -> MethodStability:
        count = len(intervals)
        p = len(intervals[0])
        matrix = np.eye(count)
        scores = []
        for i, k in combinations(range(count), 2):
            score = float(
                np.mean(
                    [StabilityService.jaccard(intervals[i][v], intervals[k][v]) for v in range(p)],
                ),
            )
            matrix[i, k] = matrix[k, i] = score
            scores.append(score)
        by_variable = [
            StabilityService.non_overlapping([intervals[i][v] for i in range(count)])
            for v in range(p)
        ]
        return MethodStability(
            method=method,
            intervals=intervals,
            jaccard=matrix.tolist(),
            median=float(np.median(scores)),
            median_ci=StabilityService._median_ci(scores, seed),
            non_overlapping=[[by_variable[v][i] for v in range(p)] for i in range(count)],
        )

    @staticmethod
    def stability_experiment(
        dgp: DgpId,
        n_datasets: int,
        cfg: RunConfig,
        *,
        n: int | None = None,
        dataset_seeds: Sequence[int] | None = None,
    ) -> StabilityReport:
        """Median pairwise interval Jaccard of RID, MCR and VIC across fresh datasets.

        Dataset ``i`` is generated from ``split_rng(seed, i)`` unless
        ``dataset_seeds`` is given; its RID run uses that dataset seed as master.

        Raises:
            ValueError: If fewer than two datasets are requested.
        """
        if n_datasets < 2:
            raise ValueError("stability needs at least two datasets")
        seeds = (
            list(dataset_seeds)
            if dataset_seeds is not None
            else [DatasetService.split_rng(cfg.seed, i) for i in range(n_datasets)]
        )
        if len(seeds) != n_datasets:
            raise ValueError("need one seed per dataset")
        size = n if n is not None else dgp.default_n
        per_method: dict[str, list[list[Interval]]] = {method: [] for method in METHODS}
        for i, dataset_seed in enumerate(seeds):
            d = StabilityService._generate(dgp, size, dataset_seed)
            found = StabilityService._intervals(d, cfg.model_copy(update={"seed": dataset_seed}))
            for method in METHODS:
                per_method[method].append(found[method])
            logger.debug("stability: dataset %d/%d done", i + 1, n_datasets)
        methods = [
            StabilityService._method_stability(method, per_method[method], cfg.seed)
            for method in METHODS
        ]
        logger.info(
            "stability %s: %s",
            dgp.value,
            ", ".join(f"{m.method}={m.median:.3f}" for m in methods),
        )
        return StabilityReport(dgp.value, n_datasets, seeds, methods)

    @staticmethod
    def holdout_reliances(
        dgp: DgpId, n: int, cfg: RunConfig, n_test: int, variables: Sequence[int],
    ) -> list[list[float]]:
        """DGP reliance on each variable across ``n_test`` fresh datasets.

        Test set ``i`` comes from ``split_rng(seed, 2B + i)``.
        """
        predictor = DgpPredictor(dgp)
        strat = cfg.mr_strategy
        values: list[list[float]] = [[] for _ in variables]
        for i in range(n_test):
            test_seed = DatasetService.split_rng(cfg.seed, 2 * cfg.bootstraps + i)
            test = StabilityService._generate(dgp, n, test_seed)
            row = ImportanceService.sub_mr_matrix([predictor], test, variables, strat, test_seed)
            for k in range(len(variables)):
                values[k].append(float(row[0, k]))
        return values

    @staticmethod
    def coverage_all(
        dgp: DgpId,
        train: Dataset,
        cfg: RunConfig,
        n_test: int,
        rid: RIDResult | None = None,
    ) -> CoverageReport:
        """Coverage of the DGP's test-set reliances by each variable's RID box-and-whisker range."""
        if n_test < 1:
            raise ValueError("n_test must be at least 1")
        result = rid if rid is not None else RidService.estimate_rid(train, cfg)
        intervals = [dist.bwr() for dist in result.per_variable]
        variables = list(range(train.p))
        reliances = StabilityService.holdout_reliances(dgp, train.n, cfg, n_test, variables)
        coverage = [
            StabilityService.coverage_of(intervals[v], reliances[v]) for v in variables
        ]
        return CoverageReport(dgp.value, n_test, cfg.epsilon, intervals, coverage)

    @staticmethod
    def coverage_experiment(
        dgp: DgpId, train: Dataset, cfg: RunConfig, n_test: int, var: int,
    ) -> float:
        """Coverage for one variable."""
        if not 0 <= var < train.p:
            raise ValueError(f"variable index {var} out of range for p={train.p}")
        return StabilityService.coverage_all(dgp, train, cfg, n_test).coverage[var]

    @staticmethod
    def epsilon_sensitivity(
        dgp: DgpId,
        train: Dataset,
        cfg: RunConfig,
        n_test: int,
        scales: Sequence[float] = EPSILON_SCALES,
    ) -> list[CoverageReport]:
        """Coverage with the Rashomon threshold scaled around ``cfg.epsilon``."""
        reports = []
        for scale in scales:
            if scale <= 0:
                raise ValueError("epsilon scales must be positive")
            scaled = cfg.model_copy(update={"epsilon": cfg.epsilon * scale})
            reports.append(StabilityService.coverage_all(dgp, train, scaled, n_test))
        return reports

    @staticmethod
    def recovery_experiment(
        dgp: DgpId,
        d: Dataset,
        cfg: RunConfig,
        var: int,
        dgp_bootstraps: int,
        rid: RIDResult | None = None,
    ) -> RecoveryReport:
        """Distance between the RID of ``var`` and the DGP's own reliance distribution."""
        result = rid if rid is not None else RidService.estimate_rid(d, cfg)
        target = RidService.dgp_reliance_distribution(
            dgp,
            d,
            var,
            dgp_bootstraps,
            cfg.mr_strategy,
            DatasetService.split_rng(cfg.seed, 3 * cfg.bootstraps),
        )
        return RecoveryReport(
            dgp=dgp.value,
            var=var,
            emd=StabilityService.emd(result.per_variable[var], target),
            rid_mean=result.per_variable[var].mean(),
            dgp_mean=RidService.dgp_reliance_mean(target),
        )
