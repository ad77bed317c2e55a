"""
socle subcommand
"""

from app.commands.common import emit_model, read_graph
from app.errors import ExponentError
from app.services.algebra import ExponentVector, socle_report
from app.services.graph.generators.base import parse_int_list


def run_socle(args) -> int:
    g = read_graph(args.file)
    try:
        values = parse_int_list(args.exponents)
    except ValueError as e:
        raise ExponentError(str(e)) from e
    emit_model(socle_report(g, ExponentVector.of(values)))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("socle", help="Socle vector of the artinian quotient")
    parser.add_argument("file", help="Edge-list file, or - for stdin")
    parser.add_argument("--exponents", required=True, help="a_1,...,a_n, each >= 2")
    parser.set_defaults(handler=run_socle)
