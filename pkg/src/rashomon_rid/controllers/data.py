"""Data controller — the ``gen`` command."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from rashomon_rid.controllers.options import common_parser
from rashomon_rid.models.dgp import DgpId
from rashomon_rid.resources.state import ResourceState

if TYPE_CHECKING:
    from rashomon_rid.controllers.options import Subparsers


class DataController:
    """Synthetic dataset generation."""

    @staticmethod
    def register(subparsers: Subparsers) -> None:
        gen = subparsers.add_parser(
            "gen", parents=[common_parser()], help="Sample a dataset from a generating process",
        )
        gen.add_argument("--dgp", required=True, choices=[d.value for d in DgpId])
        gen.add_argument("--n", type=int, default=None)
        gen.add_argument("--seed", type=int, default=0)
        gen.add_argument("--noise", type=float, default=None, help="label noise (monk3 only)")
        gen.add_argument("--out", required=True)
        gen.set_defaults(handler=DataController.gen)

    @staticmethod
    def gen(args: argparse.Namespace, state: ResourceState) -> int:
        d = state.data.generate(args.dgp, args.n, args.seed, args.noise)
        state.data.save(d, args.out)
        print(f"wrote {d.n} rows x {d.p} features to {args.out}")
        return 0
