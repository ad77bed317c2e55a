"""
construct subcommand: duplicate, expand, attach, profile, replicate

Weights may be omitted for an input graph; they are then taken from the
levelability decision, and a non-levelable input is an error.
"""

import logging
from typing import List, Optional

from app.commands.common import construction_response, emit_model, int_list, read_graph
from app.errors import ConstructionError
from app.models import LevelableCertificate
from app.services.constructions import (
    attach_graphs,
    duplicate_vertex,
    expand_vertex,
    realize_weight_profile,
    replicate_weights,
)
from app.services.graph.core import Graph
from app.services.level_decide import WeightFunction, decide_levelable, validate_weights

logger = logging.getLogger(__name__)


def weights_for(g: Graph, weights: Optional[List[int]], source: str) -> WeightFunction:
    if weights is not None:
        return validate_weights(g, weights)
    certificate = decide_levelable(g)
    if not isinstance(certificate, LevelableCertificate):
        raise ConstructionError(f"{source} is not levelable; no weights to transport")
    logger.info(f"Using decided weights for {source}")
    return validate_weights(g, certificate.weights)


def run_duplicate(args) -> int:
    g = read_graph(args.file)
    w = weights_for(g, int_list(args.weights), args.file)
    emit_model(construction_response(*duplicate_vertex(g, args.vertex, w)))
    return 0


def run_expand(args) -> int:
    g = read_graph(args.file)
    w = weights_for(g, int_list(args.weights), args.file)
    emit_model(construction_response(*expand_vertex(g, args.vertex, w)))
    return 0


def run_attach(args) -> int:
    g = read_graph(args.file)
    parts = []
    for part in args.part or []:
        path, _, weights = part.partition(":")
        h = read_graph(path)
        parts.append((h, weights_for(h, int_list(weights) if weights else None, path)))
    emit_model(construction_response(*attach_graphs(g, parts)))
    return 0


def run_profile(args) -> int:
    result = realize_weight_profile(int_list(args.weights), int_list(args.repeat))
    emit_model(construction_response(*result))
    return 0


def run_replicate(args) -> int:
    g = read_graph(args.file)
    w = weights_for(g, int_list(args.weights), args.file)
    emit_model(construction_response(*replicate_weights(g, w, int_list(args.multiplicities))))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="Weight-transporting constructions")
    kinds = parser.add_subparsers(dest="construction", required=True)

    for name, handler, help_text in (
        ("duplicate", run_duplicate, "Add a copy of a vertex with the same open neighborhood"),
        ("expand", run_expand, "Add a copy of a vertex with the same closed neighborhood"),
    ):
        sub = kinds.add_parser(name, help=help_text)
        sub.add_argument("file", help="Edge-list file, or - for stdin")
        sub.add_argument("--vertex", type=int, required=True)
        sub.add_argument("--weights", help="Comma-separated weights; decided when omitted")
        sub.set_defaults(handler=handler)

    sub = kinds.add_parser("attach", help="Join a graph H_i to every vertex x_i")
    sub.add_argument("file", help="Base graph")
    sub.add_argument(
        "--part",
        action="append",
        metavar="FILE[:w1,w2,...]",
        help="One per base vertex, in vertex order",
    )
    sub.set_defaults(handler=run_attach)

    sub = kinds.add_parser("profile", help="Connected levelable graph with a weight profile")
    sub.add_argument("--weights", required=True, help="c_1,...,c_n")
    sub.add_argument("--repeat", help="r_1,...,r_n (each >= 2) for clique attachment")
    sub.set_defaults(handler=run_profile)

    sub = kinds.add_parser("replicate", help="Repeat vertex weights by expansion")
    sub.add_argument("file", help="Edge-list file, or - for stdin")
    sub.add_argument("--multiplicities", required=True, help="r_1,...,r_n (each >= 1)")
    sub.add_argument("--weights", help="Comma-separated weights; decided when omitted")
    sub.set_defaults(handler=run_replicate)
