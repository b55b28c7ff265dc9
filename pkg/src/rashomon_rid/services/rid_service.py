"""Bootstrap estimate of the Rashomon importance distribution."""

from __future__ import annotations

import logging
import math

from joblib import Parallel, delayed

from rashomon_rid.config.settings import RunConfig
from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.dgp import DgpId
from rashomon_rid.models.distribution import BootstrapBlock, RIDResult, VIDistribution
from rashomon_rid.models.strategy import MrStrategy
from rashomon_rid.plugins.contracts.metric import ImportanceMetric
from rashomon_rid.plugins.dgp_predictor import DgpPredictor
from rashomon_rid.plugins.sub_mr import SubtractiveModelReliance
from rashomon_rid.services.dataset_service import DatasetService
from rashomon_rid.services.importance_service import ImportanceService
from rashomon_rid.services.rashomon_service import RashomonService, RashomonSetTooLargeError

logger = logging.getLogger(__name__)


def _bootstrap_block(
    d: Dataset, cfg: RunConfig, metric: ImportanceMetric, b: int,
) -> BootstrapBlock:
    """One bootstrap: resample, binarize, enumerate, score every member tree.

    Module-level so that worker processes can unpickle it.
    """
    sample = DatasetService.bootstrap_sample(d, DatasetService.split_rng(cfg.seed, b))
    binary = DatasetService.binarize(sample, cfg.max_thresholds)
    try:
        rset = RashomonService.enumerate_rset(
            binary, cfg.epsilon, cfg.lambda_, cfg.depth, cfg.max_models,
        )
    except RashomonSetTooLargeError as error:
        raise RashomonSetTooLargeError(error.count, error.limit, bootstrap=b) from error
    metric_seed = DatasetService.split_rng(cfg.seed, cfg.bootstraps + b)
    values = RashomonService.importance_matrix(rset, sample, metric, metric_seed)
    logger.debug(
        "bootstrap %d: |R|=%d, optimum %.6f, %d split columns",
        b, len(rset), rset.min_objective, binary.m,
    )
    return BootstrapBlock(
        index=b,
        values=values,
        weight=1.0 / (cfg.bootstraps * len(rset)),
        rset_size=len(rset),
        min_objective=rset.min_objective,
    )


class RidService:
    """Runs the bootstrap estimator and the ground-truth DGP reliance baseline."""

    @staticmethod
    def metric_for(cfg: RunConfig) -> ImportanceMetric:
        """The importance metric a config names."""
        return SubtractiveModelReliance(cfg.mr_strategy)

    @staticmethod
    def estimate_rid(
        d: Dataset, cfg: RunConfig, metric: ImportanceMetric | None = None,
    ) -> RIDResult:
        """RID of every variable from ``cfg.bootstraps`` resamples of ``d``.

        Bootstrap ``b`` draws rows from ``split_rng(seed, b)`` and scores
        with ``split_rng(seed, B + b)``; each (bootstrap, tree) pair weighs
        ``1 / (B |R_b|)``. Blocks are merged in bootstrap order, so the
        result is the same for any ``cfg.threads``.

        Raises:
            RashomonSetTooLargeError: With the offending bootstrap index.
            ValueError: If a bootstrap sample has no usable splits.
        """
        chosen = metric if metric is not None else RidService.metric_for(cfg)
        workers = min(cfg.threads, cfg.bootstraps)
        if workers > 1:
            blocks = Parallel(n_jobs=workers)(
                delayed(_bootstrap_block)(d, cfg, chosen, b) for b in range(cfg.bootstraps)
            )
        else:
            blocks = [_bootstrap_block(d, cfg, chosen, b) for b in range(cfg.bootstraps)]
        sizes = [block.rset_size for block in blocks]
        logger.info(
            "rid: B=%d, rashomon set sizes %d..%d (total %d)",
            cfg.bootstraps, min(sizes), max(sizes), sum(sizes),
        )
        return RIDResult.from_blocks(
            d.feature_names, blocks, cfg, support=(chosen.support_min, chosen.support_max),
        )

    @staticmethod
    def required_bootstraps(t: float, delta: float) -> int:
        """Bootstraps needed for the empirical CDF to sit within ``t`` with probability ``1 - delta``.

        Raises:
            ValueError: If ``t <= 0`` or ``delta`` is outside ``(0, 1)``.
        """
        if t <= 0:
            raise ValueError("t must be positive")
        if not 0.0 < delta < 1.0:
            raise ValueError("delta must lie in (0, 1)")
        return math.ceil(math.log(2.0 / delta) / (2.0 * t * t))

    @staticmethod
    def dgp_reliance_distribution(
        dgp: DgpId,
        d: Dataset,
        var: int,
        bootstraps: int,
        strat: MrStrategy,
        seed: int,
    ) -> VIDistribution:
        """Reliance of the noiseless DGP on ``var`` across bootstrap resamples of ``d``."""
        if bootstraps < 1:
            raise ValueError("bootstraps must be at least 1")
        predictor = DgpPredictor(dgp)
        values = []
        for b in range(bootstraps):
            sample = DatasetService.bootstrap_sample(d, DatasetService.split_rng(seed, b))
            metric_seed = DatasetService.split_rng(seed, bootstraps + b)
            values.append(ImportanceService.sub_mr(predictor, sample, var, strat, metric_seed))
        return VIDistribution.from_samples(values)

    @staticmethod
    def dgp_reliance_mean(dist: VIDistribution) -> float:
        """Ground-truth reliance: the average over bootstraps."""
        return dist.mean()
