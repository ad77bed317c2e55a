"""
classify and gen subcommands
"""

import logging

from app.commands.common import emit, emit_model, read_graph
from app.services.families.dispatcher import classify, classify_spec
from app.services.graph.core import serialize_graph
from app.services.graph.generators.registry import FamilyRegistry
from app.services.graph.generators.specs import generate_family

logger = logging.getLogger(__name__)


def run_classify(args) -> int:
    if (args.file is None) == (args.family is None):
        args.parser.error("give exactly one of FILE or --family FAMILY ARGS...")
    if args.family is not None:
        name, *family_args = args.family
        spec = FamilyRegistry.get(name).from_args(family_args)
        verdict = classify_spec(spec)
    else:
        verdict = classify(read_graph(args.file))
    emit_model(verdict.to_response())
    return 0


def run_gen(args) -> int:
    spec = FamilyRegistry.get(args.family).from_args(args.args)
    emit(serialize_graph(generate_family(spec)))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("classify", help="Classify by graph family")
    parser.add_argument("file", nargs="?", help="Edge-list file, or - for stdin")
    parser.add_argument(
        "--family",
        nargs="+",
        metavar="ARG",
        help="Family name followed by its parameters, e.g. --family bigstar 1,2,2,3",
    )
    parser.set_defaults(handler=run_classify, parser=parser)

    parser = subparsers.add_parser("gen", help="Print a family member as an edge list")
    parser.add_argument("family", help="Registered family name")
    parser.add_argument("args", nargs="*", help="Family parameters")
    parser.set_defaults(handler=run_gen)
