"""Object graph factory and CLI entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import NoReturn

from rashomon_rid.controllers.data import DataController
from rashomon_rid.controllers.experiment import ExperimentController
from rashomon_rid.controllers.linear import LinearController
from rashomon_rid.controllers.rid import RidController
from rashomon_rid.dao.dataset_dao import DatasetDAO
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.resources.data import DataResource
from rashomon_rid.resources.errors import DataError, ResourceLimitError, UsageError
from rashomon_rid.resources.experiment import ExperimentResource
from rashomon_rid.resources.linear import LinearResource
from rashomon_rid.resources.rid import RidResource
from rashomon_rid.resources.state import ResourceState
from rashomon_rid.services.dataset_service import DatasetService

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_LIMIT = 3


class AppFactory:
    """Builds the resources command handlers run against. All methods are static."""

    @staticmethod
    def _build() -> ResourceState:
        """Construct the full object graph once.

        dataset_dao → dataset_service → DataResource
        dataset_dao → LinearResource
        result_dao ─┬→ RidResource
                    └→ ExperimentResource
        """
        dataset_dao = DatasetDAO()
        dataset_service = DatasetService(dataset_dao)
        result_dao = ResultDAO()
        return ResourceState(
            data=DataResource(dataset_service=dataset_service),
            rid=RidResource(result_dao=result_dao),
            linear=LinearResource(dataset_dao=dataset_dao),
            experiment=ExperimentResource(result_dao=result_dao),
        )

    @staticmethod
    def create_state() -> ResourceState:
        return AppFactory._build()


class _Parser(argparse.ArgumentParser):
    """Reports bad usage through UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


class CLI:
    """Command-line interface for rashomon-rid."""

    @staticmethod
    def _build_parser() -> argparse.ArgumentParser:
        """Build the CLI argument parser."""
        parser = _Parser(
            prog="rashomon-rid",
            description="Rashomon importance distributions for sparse decision trees",
        )
        subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)
        DataController.register(subparsers)
        RidController.register(subparsers)
        LinearController.register(subparsers)
        ExperimentController.register(subparsers)
        return parser

    @staticmethod
    def run(argv: list[str] | None = None, state: ResourceState | None = None) -> int:
        """Parse ``argv``, dispatch to the command handler and return the exit code."""
        parser = CLI._build_parser()
        try:
            args = parser.parse_args(argv)
        except UsageError as error:
            print(f"Error: {error}", file=sys.stderr)
            return EXIT_USAGE

        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE

        logging.basicConfig(
            level=args.log_level or "WARNING",
            format=LOG_FORMAT,
            stream=sys.stderr,
            force=True,
        )
        try:
            resources = state if state is not None else AppFactory.create_state()
            return int(args.handler(args, resources))
        except UsageError as error:
            print(f"Error: {error}", file=sys.stderr)
            return EXIT_USAGE
        except DataError as error:
            print(f"Error: {error}", file=sys.stderr)
            return EXIT_DATA
        except ResourceLimitError as error:
            print(f"Error: {error}", file=sys.stderr)
            return EXIT_LIMIT
        except KeyboardInterrupt:
            return EXIT_USAGE
        except Exception as error:
            logging.getLogger(__name__).debug("unhandled error", exc_info=True)
            print(f"Error: {error}", file=sys.stderr)
            return EXIT_USAGE

    @staticmethod
    def main(argv: list[str] | None = None) -> None:
        """CLI entry point."""
        sys.exit(CLI.run(argv))


if __name__ == "__main__":
    CLI.main()
