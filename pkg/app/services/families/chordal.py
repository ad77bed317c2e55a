"""
Chordal graph utilities: LexBFS, perfect elimination orders, maximal
cliques and clique trees
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from app.services.graph.core import Graph, vertices_of


def lex_bfs(g: Graph) -> List[int]:
    """
    Lexicographic breadth-first search order. Ties go to the smallest vertex.

    Labels are lists of decreasing visit stamps, so comparing them as lists
    is the lexicographic order on labels.
    """
    labels: List[List[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n, 0, -1):
        best = None
        for v in range(g.n):
            if not visited[v] and (best is None or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for u in g.adj[best]:
            if not visited[u]:
                labels[u].append(step)
    return order


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's later neighbors form a clique; checked via the earliest later neighbor"""
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adj[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        rest = 0
        for u in later:
            if u != parent:
                rest |= 1 << u
        if rest & ~g.neighbor_masks[parent]:
            return False
    return True


def perfect_elimination_order(g: Graph) -> Optional[List[int]]:
    """A perfect elimination order, or None when g is not chordal"""
    order = list(reversed(lex_bfs(g)))
    return order if is_perfect_elimination_order(g, order) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def chordal_maximal_cliques(g: Graph, peo: Sequence[int]) -> List[Tuple[int, ...]]:
    """Maximal cliques of a chordal graph from its elimination order, sorted"""
    position = {v: i for i, v in enumerate(peo)}
    candidates = []
    for v in peo:
        mask = 1 << v
        for u in g.adj[v]:
            if position[u] > position[v]:
                mask |= 1 << u
        candidates.append(mask)
    maximal = {
        c for c in candidates if not any(c != d and c & d == c for d in candidates)
    }
    return sorted(tuple(vertices_of(c)) for c in maximal)


@dataclass(frozen=True)
class CliqueTree:
    """
    Maximum-weight spanning tree of the clique intersection graph.

    order lists clique indices in insertion order; parent[i] is the clique
    that clique i was attached to (None for the root). Every prefix of the
    order is a subtree, so each clique meets the earlier ones only inside
    its parent.
    """
    cliques: Tuple[Tuple[int, ...], ...]
    order: Tuple[int, ...]
    parent: Tuple[Optional[int], ...]


def clique_tree(cliques: Sequence[Tuple[int, ...]]) -> CliqueTree:
    """Prim's algorithm on intersection sizes; empty intersections are allowed"""
    k = len(cliques)
    sets = [set(c) for c in cliques]
    in_tree = [False] * k
    parent: List[Optional[int]] = [None] * k
    best = [-1] * k
    order = []
    if k:
        best[0] = 0
    for _ in range(k):
        pick = max((i for i in range(k) if not in_tree[i]), key=lambda i: (best[i], -i))
        in_tree[pick] = True
        order.append(pick)
        for i in range(k):
            if not in_tree[i]:
                weight = len(sets[i] & sets[pick])
                if weight > best[i]:
                    best[i] = weight
                    parent[i] = pick
    return CliqueTree(cliques=tuple(cliques), order=tuple(order), parent=tuple(parent))
