"""RID controller — ``rid``, ``rset``, ``stats`` and ``bootstraps``."""

from __future__ import annotations

import argparse
import json
from typing import TYPE_CHECKING

from rashomon_rid.controllers.options import (
    common_parser,
    config_from_args,
    dataset_parser,
    run_config_parser,
)
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.resources.errors import UsageError
from rashomon_rid.resources.state import ResourceState

if TYPE_CHECKING:
    from rashomon_rid.controllers.options import Subparsers


class RidController:
    """Bootstrap RID runs and queries on saved results."""

    @staticmethod
    def register(subparsers: Subparsers) -> None:
        rid = subparsers.add_parser(
            "rid",
            parents=[common_parser(), dataset_parser(), run_config_parser()],
            help="Estimate the Rashomon importance distribution of every variable",
        )
        rid.add_argument("--out", required=True, help="result JSON")
        rid.add_argument("--csv", default=None, help="per-variable summary CSV")
        rid.add_argument("--svg", default=None, metavar="DIR", help="directory for CDF plots")
        rid.set_defaults(handler=RidController.rid)

        rset = subparsers.add_parser(
            "rset",
            parents=[common_parser(), dataset_parser(), run_config_parser()],
            help="Enumerate the Rashomon set of a dataset",
        )
        rset.add_argument("--out", default=None)
        rset.set_defaults(handler=RidController.rset)

        stats = subparsers.add_parser(
            "stats", parents=[common_parser()], help="Statistics of one variable in a RID result",
        )
        stats.add_argument("--rid", required=True, help="result JSON from the rid command")
        stats.add_argument("--var", required=True, metavar="NAME")
        stats.add_argument("--threshold", type=float, default=0.0)
        stats.add_argument(
            "--joint", default=None, metavar="K1,K2,...",
            help="also report the joint CDF at one threshold per variable",
        )
        stats.set_defaults(handler=RidController.stats)

        bootstraps = subparsers.add_parser(
            "bootstraps",
            parents=[common_parser()],
            help="Bootstraps needed for a CDF within t with probability 1 - delta",
        )
        bootstraps.add_argument("--t", type=float, required=True)
        bootstraps.add_argument("--delta", type=float, required=True)
        bootstraps.set_defaults(handler=RidController.bootstraps)

    @staticmethod
    def rid(args: argparse.Namespace, state: ResourceState) -> int:
        cfg = config_from_args(args)
        d = state.data.load(
            args.data, args.label, categorical=args.categorical, numeric=args.numeric,
        )
        result = state.rid.estimate(d, cfg)
        state.rid.save(result, args.out, csv=args.csv, svg=args.svg)
        print(f"{'variable':<12} {'mean':>10} {'q25':>10} {'q75':>10} {'P(>0)':>8}")
        for name, dist in zip(result.feature_names, result.per_variable):
            print(
                f"{name:<12} {dist.mean():>10.4f} {dist.quantile(0.25):>10.4f}"
                f" {dist.quantile(0.75):>10.4f} {dist.p_greater(0.0):>8.3f}",
            )
        return 0

    @staticmethod
    def rset(args: argparse.Namespace, state: ResourceState) -> int:
        cfg = config_from_args(args)
        d = state.data.load(
            args.data, args.label, categorical=args.categorical, numeric=args.numeric,
        )
        rset = state.rid.rashomon_set(d, cfg)
        if args.out is not None:
            state.rid.save_rset(rset, d, args.out)
        print(json.dumps(state.rid.rset_summary(rset)))
        return 0

    @staticmethod
    def stats(args: argparse.Namespace, state: ResourceState) -> int:
        result = state.rid.load(args.rid)
        output = state.rid.variable_stats(result, args.var, args.threshold)
        if args.joint is not None:
            try:
                thresholds = [float(part) for part in args.joint.split(",")]
            except ValueError as error:
                raise UsageError(f"--joint expects comma-separated numbers: {error}") from error
            output["joint_cdf"] = state.rid.joint_cdf(result, thresholds)
        print(ResultDAO.dumps(output), end="")
        return 0

    @staticmethod
    def bootstraps(args: argparse.Namespace, state: ResourceState) -> int:
        print(state.rid.required_bootstraps(args.t, args.delta))
        return 0
