from app.services.graph.core import (
    Graph,
    complement,
    connected_components,
    disjoint_union,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)

__all__ = [
    "Graph",
    "complement",
    "connected_components",
    "disjoint_union",
    "induced_subgraph",
    "parse_graph",
    "serialize_graph",
]
