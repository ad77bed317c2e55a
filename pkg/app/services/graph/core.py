"""
Graph representation and basic operations

Vertices are the integers 0..n-1. A Graph is immutable once built; every
operation returns a new Graph.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from app.errors import GraphError, GraphFormatError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Finite simple graph.

    adj[i] is the sorted tuple of neighbors of vertex i. Symmetry, absence of
    self-loops and sortedness are checked at construction.
    """
    n: int
    adj: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be >= 0, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} neighbor sets, got {len(self.adj)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError(f"expected {self.n} labels, got {len(self.labels)}")
        for i, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {i} must be sorted and duplicate-free")
            for j in nbrs:
                if j == i:
                    raise GraphError(f"self-loop at vertex {i}")
                if not 0 <= j < self.n:
                    raise GraphError(f"vertex {j} out of range 0..{self.n - 1}")
                if i not in self.adj[j]:
                    raise GraphError(f"edge {{{i},{j}}} is not symmetric")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Edge], labels: Optional[Sequence[str]] = None
    ) -> "Graph":
        """Build a graph from an edge iterable; duplicates are merged"""
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        nbrs: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            n=n,
            adj=tuple(tuple(sorted(s)) for s in nbrs),
            labels=tuple(labels) if labels is not None else None,
        )

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges (u, v) with u < v, sorted lexicographically"""
        return tuple((i, j) for i in range(self.n) for j in self.adj[i] if i < j)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Neighborhoods as integer bitsets"""
        masks = []
        for nbrs in self.adj:
            mask = 0
            for j in nbrs:
                mask |= 1 << j
            masks.append(mask)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.neighbor_masks[u] >> v & 1)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.neighbor_masks[v] & mask) for v in vertices_of(mask))

    def is_maximal_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        if not self.is_independent(vertices_of(mask)):
            return False
        return all(
            self.neighbor_masks[v] & mask for v in range(self.n) if not mask >> v & 1
        )

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def vertices_of(mask: int) -> List[int]:
    """Indices of the set bits of mask, increasing"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def parse_graph(text: str) -> Graph:
    """
    Parse an edge-list document.

    The first non-comment line is "n m", followed by m lines "u v". Lines
    starting with '#' and blank lines are ignored.

    Raises:
        GraphFormatError: with the offending line number
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Edge] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(lineno, f"expected two integers, got {line!r}")

        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(lineno, f"malformed header {line!r}")
            header = (a, b)
            continue

        n, m = header
        if len(edges) >= m:
            raise GraphFormatError(lineno, f"more than the {m} declared edges")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(lineno, f"vertex index out of range 0..{n - 1}")
        if a == b:
            raise GraphFormatError(lineno, f"self-loop at vertex {a}")
        edges.append((a, b))

    if header is None:
        raise GraphFormatError(max(last_line, 1), "missing header 'n m'")
    if len(edges) != header[1]:
        raise GraphFormatError(
            max(last_line, 1), f"declared {header[1]} edges, found {len(edges)}"
        )
    return Graph.from_edges(header[0], edges)


def serialize_graph(g: Graph) -> str:
    """Edge-list document with edges sorted lexicographically"""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def complement(g: Graph) -> Graph:
    edges = [
        (i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.has_edge(i, j)
    ]
    return Graph.from_edges(g.n, edges, labels=g.labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of h are shifted by g.n"""
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = g.labels + h.labels
    return Graph.from_edges(g.n + h.n, edges, labels=labels)


def connected_components(g: Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by minimum vertex"""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = []
        while queue:
            v = queue.popleft()
            members.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(sorted(members))
    return components


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertices, relabelled 0..k-1 in the given order"""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise GraphError("induced_subgraph vertices must be distinct")
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    edges = [
        (index[u], index[w]) for u in vertices for w in g.adj[u] if w in index and u < w
    ]
    labels = tuple(g.labels[v] for v in vertices) if g.labels is not None else None
    return Graph.from_edges(len(vertices), edges, labels=labels)
