"""
asch command line.

Exit codes: 0 all checks passed, 1 a mathematical check failed,
2 usage or input format error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .. import __version__
from ..core.config import settings
from ..core.exceptions import AschError
from .commands import COMMAND_MODULES

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asch",
        description="Exact verification and dissection of symmetric association schemes.",
    )
    parser.add_argument("--version", action="version", version=f"asch {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return int(exit.code or 0)

    try:
        return args.handler(args)
    except AschError as error:
        logger.error(f"[ERROR] {type(error).__name__}: {error}")
        print(f"ERROR: {error}", file=sys.stderr)
        return error.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
