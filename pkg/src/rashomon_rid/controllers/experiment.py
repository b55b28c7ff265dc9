"""Experiment controller — ``stability``, ``coverage`` and ``recovery``."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING, Any

from rashomon_rid.controllers.options import common_parser, config_from_args, run_config_parser
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.models.dgp import DgpId
from rashomon_rid.resources.errors import UsageError
from rashomon_rid.resources.state import ResourceState

if TYPE_CHECKING:
    from rashomon_rid.controllers.options import Subparsers

_DGPS = [d.value for d in DgpId]


def _scales(text: str | None) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as error:
        raise UsageError(f"--epsilon-scales expects comma-separated numbers: {error}") from error


class ExperimentController:
    """Validation experiments against the generating processes."""

    @staticmethod
    def register(subparsers: Subparsers) -> None:
        stability = subparsers.add_parser(
            "stability",
            parents=[common_parser(), run_config_parser()],
            help="Interval stability of RID, MCR and VIC across fresh datasets",
        )
        stability.add_argument("--dgp", required=True, choices=_DGPS)
        stability.add_argument("--datasets", type=int, required=True)
        stability.add_argument("--n", type=int, default=None, help="rows per dataset")
        stability.add_argument("--out", required=True)
        stability.set_defaults(handler=ExperimentController.stability)

        coverage = subparsers.add_parser(
            "coverage",
            parents=[common_parser(), run_config_parser()],
            help="Share of test-set DGP reliances inside the RID box-and-whisker ranges",
        )
        coverage.add_argument("--dgp", required=True, choices=_DGPS)
        coverage.add_argument("--n-test", type=int, required=True)
        coverage.add_argument("--n", type=int, default=None, help="training rows")
        coverage.add_argument("--data", default=None, help="training CSV (default: sampled)")
        coverage.add_argument("--label", default=None)
        coverage.add_argument("--epsilon-scales", default=None, metavar="S1,S2,...")
        coverage.add_argument("--out", default=None)
        coverage.set_defaults(handler=ExperimentController.coverage)

        recovery = subparsers.add_parser(
            "recovery",
            parents=[common_parser(), run_config_parser()],
            help="Distance between a variable's RID and the DGP's reliance distribution",
        )
        recovery.add_argument("--dgp", required=True, choices=_DGPS)
        recovery.add_argument("--var", required=True, metavar="NAME")
        recovery.add_argument("--dgp-bootstraps", type=int, default=None)
        recovery.add_argument("--n", type=int, default=None, help="training rows")
        recovery.add_argument("--data", default=None, help="training CSV (default: sampled)")
        recovery.add_argument("--label", default=None)
        recovery.add_argument("--out", default=None)
        recovery.set_defaults(handler=ExperimentController.recovery)

    @staticmethod
    def _emit(state: ResourceState, output: dict[str, Any], out: str | None) -> None:
        if out is not None:
            state.experiment.save(output, out)
        print(ResultDAO.dumps(output), end="")

    @staticmethod
    def stability(args: argparse.Namespace, state: ResourceState) -> int:
        cfg = config_from_args(args)
        report = state.experiment.stability(args.dgp, args.datasets, cfg, args.n)
        state.experiment.save(report, args.out)
        for method in report["methods"]:
            print(f"{method['method']:<4} median Jaccard {method['median']:.3f}")
        return 0

    @staticmethod
    def coverage(args: argparse.Namespace, state: ResourceState) -> int:
        cfg = config_from_args(args)
        scales = _scales(args.epsilon_scales)
        if args.data is not None:
            train = state.data.load(args.data, args.label)
        else:
            train = state.data.generate(args.dgp, args.n, cfg.seed)
        output = state.experiment.coverage(args.dgp, train, cfg, args.n_test, scales)
        ExperimentController._emit(state, output, args.out)
        return 0

    @staticmethod
    def recovery(args: argparse.Namespace, state: ResourceState) -> int:
        cfg = config_from_args(args)
        if args.data is not None:
            d = state.data.load(args.data, args.label)
        else:
            d = state.data.generate(args.dgp, args.n, cfg.seed)
        dgp_bootstraps = args.dgp_bootstraps if args.dgp_bootstraps is not None else cfg.bootstraps
        output = state.experiment.recovery(args.dgp, d, cfg, args.var, dgp_bootstraps)
        ExperimentController._emit(state, output, args.out)
        return 0
