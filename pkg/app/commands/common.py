"""
Shared helpers for the command modules
"""

import sys
from typing import List, Optional

from pydantic import BaseModel

from app.errors import GraphFormatError, LevelableError, WeightError
from app.models import ConstructionResponse
from app.services.graph.core import Graph, parse_graph
from app.services.graph.generators.base import parse_int_list
from app.services.level_decide import WeightFunction


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        raise GraphFormatError(
            line, f"invalid UTF-8 byte 0x{raw[e.start]:02x} at offset {e.start}"
        ) from e


def read_graph(path: str) -> Graph:
    """Parse a graph file; "-" reads standard input"""
    if path == "-":
        buffer = getattr(sys.stdin, "buffer", None)
        return parse_graph(sys.stdin.read() if buffer is None else _decode(buffer.read()))
    with open(path, "rb") as f:
        return parse_graph(_decode(f.read()))


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def emit_model(model: BaseModel) -> None:
    emit(model.model_dump_json())


def int_list(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return parse_int_list(text)
    except LevelableError as e:
        raise WeightError(str(e)) from e


def construction_response(g: Graph, w: WeightFunction) -> ConstructionResponse:
    return ConstructionResponse(
        n=g.n,
        edges=list(g.edges),
        weights=list(w.weights),
        independence_weight=w.independence_weight,
    )
