"""
Maximal independent set enumeration

Maximal independent sets of G are the maximal cliques of its complement, so
the enumerator is Bron-Kerbosch with pivoting run on complement bitsets.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Tuple

from app.config import settings
from app.errors import EnumerationCapExceeded
from app.services.graph.core import Graph, vertices_of

logger = logging.getLogger(__name__)

VertexSet = Tuple[int, ...]


@dataclass(frozen=True)
class MaxIndFamily:
    """Maximal independent sets of a graph, each sorted, family sorted lexicographically"""
    sets: Tuple[VertexSet, ...]
    source_n: int

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __getitem__(self, index: int) -> VertexSet:
        return self.sets[index]

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        out = []
        for s in self.sets:
            mask = 0
            for v in s:
                mask |= 1 << v
            out.append(mask)
        return tuple(out)

    @property
    def sizes(self) -> List[int]:
        return [len(s) for s in self.sets]


def choose_pivot(candidates: int, co_nbrs: List[int]) -> int:
    """Candidate of maximum degree among the candidates, smallest index on ties"""
    pivot, best = -1, -1
    for u in vertices_of(candidates):
        degree = bin(candidates & co_nbrs[u]).count("1")
        if degree > best:
            pivot, best = u, degree
    return pivot


def enumerate_max_independent_sets(
    g: Graph, max_sets: Optional[int] = None
) -> MaxIndFamily:
    """
    Enumerate MaxInd(g).

    Args:
        g: Graph
        max_sets: Cap on the family size, defaults to settings.max_sets

    Returns:
        MaxIndFamily in lexicographic order

    Raises:
        EnumerationCapExceeded: If more than max_sets sets exist
    """
    cap = settings.max_sets if max_sets is None else max_sets
    full = (1 << g.n) - 1
    # co_nbrs[v]: neighbors of v in the complement
    co_nbrs = [full & ~(g.neighbor_masks[v] | 1 << v) for v in range(g.n)]
    found: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise EnumerationCapExceeded(cap)
            return

        if not p:
            return
        pivot = choose_pivot(p, co_nbrs)
        for v in vertices_of(p & ~co_nbrs[pivot]):
            expand(r | 1 << v, p & co_nbrs[v], x & co_nbrs[v])
            p &= ~(1 << v)
            x |= 1 << v

    try:
        expand(0, full, 0)
    except EnumerationCapExceeded:
        logger.warning(f"Enumeration cap {cap} hit on a graph with {g.n} vertices")
        raise

    sets = sorted(tuple(vertices_of(mask)) for mask in found)
    logger.debug(f"Enumerated {len(sets)} maximal independent sets (n={g.n})")
    return MaxIndFamily(sets=tuple(sets), source_n=g.n)


def independence_number(g: Graph, family: Optional[MaxIndFamily] = None) -> int:
    family = family or enumerate_max_independent_sets(g)
    return max(family.sizes)


def is_well_covered(g: Graph, family: Optional[MaxIndFamily] = None) -> bool:
    """True iff every maximal independent set has the same cardinality"""
    family = family or enumerate_max_independent_sets(g)
    return len(set(family.sizes)) == 1


def minimal_vertex_covers(
    g: Graph, family: Optional[MaxIndFamily] = None
) -> List[VertexSet]:
    """Minimal vertex covers, the complements of the maximal independent sets"""
    family = family or enumerate_max_independent_sets(g)
    full = (1 << g.n) - 1
    return sorted(tuple(vertices_of(full & ~mask)) for mask in family.masks)
