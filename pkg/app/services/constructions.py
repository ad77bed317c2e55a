"""
Weight-transporting graph constructions

Each construction takes a graph with a valid weight function and returns a
larger graph with a weight function that is validated before it is returned.
Original vertices keep their indices; new vertices are appended in
construction order.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from app.errors import ConstructionError, WeightError
from app.services.graph.core import Edge, Graph
from app.services.level_decide import WeightFunction, validate_weights

logger = logging.getLogger(__name__)

Weighted = Tuple[Graph, WeightFunction]


def _check_weights(g: Graph, w: WeightFunction, what: str) -> None:
    try:
        checked = validate_weights(g, w.weights)
    except WeightError as e:
        raise ConstructionError(f"{what}: weights do not validate ({e})", cause=e) from e
    if checked.independence_weight != w.independence_weight:
        raise ConstructionError(
            f"{what}: independence weight is {checked.independence_weight}, "
            f"not {w.independence_weight}"
        )


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise ConstructionError(f"vertex {x} out of range 0..{g.n - 1}")


def _finish(g: Graph, weights: Sequence[int], what: str) -> Weighted:
    w = validate_weights(g, list(weights))
    logger.debug(f"{what}: {g.n} vertices, independence weight {w.independence_weight}")
    return g, w


def duplicate_vertex(g: Graph, x: int, w: WeightFunction) -> Weighted:
    """
    Add y with the open neighborhood of x. Every weight except x's doubles;
    x and y both get w(x), and the independence weight doubles.
    """
    _check_vertex(g, x)
    _check_weights(g, w, "duplicate_vertex")
    y = g.n
    edges = list(g.edges) + [(u, y) for u in g.adj[x]]
    weights = [v if i == x else 2 * v for i, v in enumerate(w.weights)]
    weights.append(w.weights[x])
    return _finish(Graph.from_edges(g.n + 1, edges), weights, "duplicate_vertex")


def expand_vertex(g: Graph, x: int, w: WeightFunction) -> Weighted:
    """Add y with the closed neighborhood of x, weighted w(x)"""
    _check_vertex(g, x)
    _check_weights(g, w, "expand_vertex")
    y = g.n
    edges = list(g.edges) + [(x, y)] + [(u, y) for u in g.adj[x]]
    weights = list(w.weights) + [w.weights[x]]
    return _finish(Graph.from_edges(g.n + 1, edges), weights, "expand_vertex")


def attached_graph(g: Graph, hs: Sequence[Graph]) -> Graph:
    """
    G(H_1, ..., H_n): a copy of each H_i is appended and every one of its
    vertices is joined to x_i.

    Raises:
        ConstructionError: On an arity mismatch or an empty H_i
    """
    if len(hs) != g.n:
        raise ConstructionError(f"expected {g.n} attached graphs, got {len(hs)}")
    edges: List[Edge] = list(g.edges)
    offset = g.n
    for x, h in enumerate(hs):
        if h.n < 1:
            raise ConstructionError(f"attached graph at vertex {x} is empty")
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        edges.extend((x, offset + i) for i in range(h.n))
        offset += h.n
    return Graph.from_edges(offset, edges)


def attach_graphs(g: Graph, hs: Sequence[Weighted]) -> Weighted:
    """x_i is weighted by the independence weight of H_i; H_i keeps its weights"""
    for i, (h, w) in enumerate(hs):
        _check_weights(h, w, f"attach_graphs H_{i}")
    combined = attached_graph(g, [h for h, _ in hs])
    weights = [w.independence_weight for _, w in hs]
    for _, w in hs:
        weights.extend(w.weights)
    return _finish(combined, weights, "attach_graphs")


def _base_path(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("a weight profile needs at least one entry")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def realize_weight_profile(
    weights: Sequence[int], repeats: Optional[Sequence[int]] = None
) -> Weighted:
    """
    Connected levelable graph realizing a weight profile.

    Without repeats, x_i on a path gets weights[i] pendant leaves (weight 1),
    so x_i weighs weights[i]. With repeats, x_i gets a clique of
    repeats[i] - 1 vertices, each weighted weights[i], so weights[i] occurs
    repeats[i] times.

    Raises:
        ConstructionError: On an empty profile, weights < 1 or repeats < 2
    """
    if any(c < 1 for c in weights):
        raise ConstructionError(f"profile weights must be >= 1, got {list(weights)}")
    base = _base_path(len(weights))

    if repeats is None:
        attached = [
            (Graph.empty(c), WeightFunction(weights=(1,) * c, independence_weight=c))
            for c in weights
        ]
    else:
        if len(repeats) != len(weights):
            raise ConstructionError(
                f"expected {len(weights)} repeat counts, got {len(repeats)}"
            )
        if any(r < 2 for r in repeats):
            raise ConstructionError(f"repeat counts must be >= 2, got {list(repeats)}")
        attached = [
            (Graph.complete(r - 1), WeightFunction(weights=(c,) * (r - 1), independence_weight=c))
            for c, r in zip(weights, repeats)
        ]
    return attach_graphs(base, attached)


def replicate_weights(g: Graph, w: WeightFunction, multiplicities: Sequence[int]) -> Weighted:
    """Expand vertex i multiplicities[i] - 1 times so w[i] occurs multiplicities[i] times"""
    if len(multiplicities) != g.n:
        raise ConstructionError(f"expected {g.n} multiplicities, got {len(multiplicities)}")
    if any(r < 1 for r in multiplicities):
        raise ConstructionError(f"multiplicities must be >= 1, got {list(multiplicities)}")
    for x, r in enumerate(multiplicities):
        for _ in range(r - 1):
            g, w = expand_vertex(g, x, w)
    return g, w
