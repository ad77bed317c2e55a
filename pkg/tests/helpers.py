import itertools

import networkx as nx
from hypothesis import strategies as st

from app.services.graph.core import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_force_mis(g: Graph):
    """Every subset that is independent and maximal, sorted"""
    out = []
    for r in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), r):
            if g.is_maximal_independent(subset):
                out.append(subset)
    return sorted(out)


def connected_atlas(max_n: int):
    """All connected graphs with 1..max_n vertices, up to isomorphism"""
    return [
        from_nx(h)
        for h in nx.graph_atlas_g()
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])
