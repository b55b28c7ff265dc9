"""Linear controller — the ``linear`` command."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from rashomon_rid.controllers.options import common_parser
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.resources.state import ResourceState

if TYPE_CHECKING:
    from rashomon_rid.controllers.options import Subparsers


class LinearController:
    """Least-squares Rashomon ellipsoid report."""

    @staticmethod
    def register(subparsers: Subparsers) -> None:
        linear = subparsers.add_parser(
            "linear",
            parents=[common_parser()],
            help="Rashomon set of least-squares linear models",
        )
        linear.add_argument("--design", required=True, help="CSV design matrix X")
        linear.add_argument("--y", required=True, help="CSV with one target column")
        linear.add_argument("--epsilon", type=float, required=True)
        linear.add_argument("--var", type=int, default=None, help="0-based coefficient index")
        linear.add_argument("--k", type=float, default=None)
        linear.add_argument("--samples", type=int, default=None, help="Monte Carlo samples")
        linear.add_argument("--seed", type=int, default=0)
        linear.add_argument("--out", default=None)
        linear.set_defaults(handler=LinearController.linear)

    @staticmethod
    def linear(args: argparse.Namespace, state: ResourceState) -> int:
        output = state.linear.analyze(
            args.design,
            args.y,
            args.epsilon,
            var=args.var,
            k=args.k,
            samples=args.samples,
            seed=args.seed,
        )
        if args.out is not None:
            state.experiment.save(output, args.out)
        print(ResultDAO.dumps(output), end="")
        return 0
