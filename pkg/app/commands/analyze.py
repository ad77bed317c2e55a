"""
decide, mis and wcw subcommands
"""

import logging

from app.commands.common import emit, emit_model, read_graph
from app.models import MisResponse, WcwResponse, certificate_adapter
from app.services.level_decide import decide_levelable
from app.services.mis import (
    enumerate_max_independent_sets,
    independence_number,
    is_well_covered,
)
from app.services.wcw import wcw_basis

logger = logging.getLogger(__name__)


def run_decide(args) -> int:
    g = read_graph(args.file)
    certificate = decide_levelable(g)
    logger.debug(f"decide {args.file}: {certificate.verdict}")
    emit(certificate_adapter.dump_json(certificate).decode())
    return 0


def run_mis(args) -> int:
    g = read_graph(args.file)
    family = enumerate_max_independent_sets(g)
    emit_model(MisResponse(
        n=g.n,
        count=len(family),
        sets=[list(s) for s in family],
        independence_number=independence_number(g, family),
        well_covered=is_well_covered(g, family),
    ))
    return 0


def run_wcw(args) -> int:
    g = read_graph(args.file)
    basis = wcw_basis(g)
    emit_model(WcwResponse(
        n=basis.n, dim=basis.dim, rank=basis.rank, basis=[list(v) for v in basis.basis]
    ))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("decide", help="Decide levelability and print a certificate")
    parser.add_argument("file", help="Edge-list file, or - for stdin")
    parser.set_defaults(handler=run_decide)

    parser = subparsers.add_parser("mis", help="List the maximal independent sets")
    parser.add_argument("file", help="Edge-list file, or - for stdin")
    parser.set_defaults(handler=run_mis)

    parser = subparsers.add_parser("wcw", help="Basis of the well-covered weightings")
    parser.add_argument("file", help="Edge-list file, or - for stdin")
    parser.set_defaults(handler=run_wcw)
