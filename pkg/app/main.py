import argparse
import logging
import sys
from typing import List, Optional

from app.commands import analyze, classify, construct, socle, stats
from app.config import settings
from app.errors import LevelableError
from app.models import ErrorResponse
from app.services.graph.generators.registry import FamilyRegistry
from app.services.graph.generators.specs import BUILTIN_FAMILIES

logger = logging.getLogger(__name__)


def register_families() -> None:
    for spec_class in BUILTIN_FAMILIES:
        FamilyRegistry.register(spec_class.family, spec_class)
    logger.info("Registered family plugins")


# Register family plugins
register_families()


def configure_logging() -> None:
    # stdout carries results; logs go to stderr
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelable",
        description="Decide levelability of graphs and emit verifiable certificates",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (analyze, classify, construct, socle, stats):
        module.register(subparsers)
    return parser


def _fail(error: ErrorResponse) -> int:
    sys.stderr.write(error.model_dump_json() + "\n")
    return 1


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success (verdicts included), 1 on domain errors. Usage errors
        exit with status 2 through argparse.
    """
    configure_logging()
    args = build_parser().parse_args(argv)
    logger.debug(f"Command: {args.command} (environment: {settings.environment})")
    try:
        return args.handler(args)
    except LevelableError as e:
        logger.info(f"{type(e).__name__}: {e}", exc_info=settings.is_development)
        return _fail(e.to_response())
    except OSError as e:
        return _fail(ErrorResponse(error=type(e).__name__, detail=str(e)))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
