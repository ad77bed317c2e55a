"""
Trees, caterpillars and big stars
"""

import logging
from typing import List

from app.errors import NotATree
from app.services.families.types import Citations, FamilyTags, FamilyVerdict
from app.services.graph.core import Graph
from app.services.graph.generators.specs import BigStarSpec, CaterpillarSpec
from app.services.level_decide import validate_weights

logger = logging.getLogger(__name__)


def tree_levelable(g: Graph) -> bool:
    """Every vertex of degree >= 2 has a neighbor of degree 1"""
    return all(
        any(g.degree(u) == 1 for u in g.adj[v]) for v in range(g.n) if g.degree(v) >= 2
    )


def tree_weights(g: Graph) -> List[int]:
    """Internal vertices weigh their number of leaf neighbors, leaves weigh 1"""
    return [
        sum(1 for u in g.adj[v] if g.degree(u) == 1) if g.degree(v) >= 2 else 1
        for v in range(g.n)
    ]


def _tree_verdict(g: Graph, levelable: bool, family: str, citation: str) -> FamilyVerdict:
    weights = validate_weights(g, tree_weights(g)) if levelable else None
    return FamilyVerdict(family=family, levelable=levelable, citation=citation, weights=weights)


def classify_tree(g: Graph) -> FamilyVerdict:
    """
    Raises:
        NotATree: If g is not connected with n - 1 edges
    """
    if not g.is_tree():
        raise NotATree(f"graph with {g.n} vertices and {g.m} edges is not a tree")
    return _tree_verdict(g, tree_levelable(g), FamilyTags.TREE, Citations.TREE)


def normalize_caterpillar(spec: CaterpillarSpec) -> CaterpillarSpec:
    """
    Shorten the spine until both ends carry a leg: a legless end vertex is
    itself a leg of its neighbor.
    """
    legs = list(spec.legs)
    while len(legs) >= 2 and legs[0] == 0:
        legs.pop(0)
        legs[0] += 1
    while len(legs) >= 2 and legs[-1] == 0:
        legs.pop()
        legs[-1] += 1
    return CaterpillarSpec(spine=len(legs), legs=legs)


def classify_caterpillar(spec: CaterpillarSpec) -> FamilyVerdict:
    g = spec.build()
    normal = normalize_caterpillar(spec)
    # a lone legless spine vertex is K1
    levelable = g.n == 1 or all(count >= 1 for count in normal.legs)
    if normal.legs != spec.legs:
        logger.debug(f"Caterpillar legs {spec.legs} normalized to {normal.legs}")
    return _tree_verdict(g, levelable, FamilyTags.CATERPILLAR, Citations.CATERPILLAR)


def classify_big_star(spec: BigStarSpec) -> FamilyVerdict:
    g = spec.build()
    levelable = max(spec.arms) <= 2 and 1 in spec.arms
    return _tree_verdict(g, levelable, FamilyTags.BIG_STAR, Citations.BIG_STAR)
