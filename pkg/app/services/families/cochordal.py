"""
Co-chordal graphs

The clique complex of a chordal complement is a quasi-forest whose facets
are the maximal independent sets of the graph. Walking its facets in leaf
order, each new facet meets the processed part only inside its branch, so
the new vertices can be weighted to reach the common facet sum.
"""

import logging
from typing import Optional

from app.services.families.chordal import (
    chordal_maximal_cliques,
    clique_tree,
    perfect_elimination_order,
)
from app.services.families.types import Citations, FamilyTags, FamilyVerdict
from app.services.graph.core import Graph, complement
from app.services.level_decide import WeightFunction, validate_weights

logger = logging.getLogger(__name__)


def cochordal_weights(g: Graph) -> Optional[WeightFunction]:
    """
    Weights making g weighted well-covered, or None when the complement is
    not chordal.
    """
    h = complement(g)
    peo = perfect_elimination_order(h)
    if peo is None:
        return None
    if g.n == 0:
        return WeightFunction(weights=(), independence_weight=0)

    tree = clique_tree(chordal_maximal_cliques(h, peo))
    weights = [0] * g.n
    root = tree.cliques[tree.order[0]]
    for v in root:
        weights[v] = 1
    c = len(root)

    for index in tree.order[1:]:
        facet = tree.cliques[index]
        branch = set(tree.cliques[tree.parent[index]])
        shared = sum(weights[v] for v in facet if v in branch)
        new = [v for v in facet if v not in branch]
        # smallest d with d * (c - shared) > len(new)
        d = len(new) // (c - shared) + 1
        weights = [d * w for w in weights]
        c, shared = d * c, d * shared
        remainder = c - shared
        for v in new[:-1]:
            weights[v] = 1
        weights[new[-1]] = remainder - (len(new) - 1)

    logger.debug(f"Co-chordal weights over {len(tree.cliques)} facets: c={c}")
    return validate_weights(g, weights)


def classify_cochordal(g: Graph) -> Optional[FamilyVerdict]:
    weights = cochordal_weights(g)
    if weights is None:
        return None
    return FamilyVerdict(
        family=FamilyTags.COCHORDAL,
        levelable=True,
        citation=Citations.COCHORDAL,
        weights=weights,
    )
