"""
Complete multipartite graphs and graphs with independence number at most 2
"""

from functools import reduce
from math import lcm
from typing import List, Optional, Sequence

from app.services.families.types import Citations, FamilyTags, FamilyVerdict
from app.services.graph.core import Graph, complement, connected_components
from app.services.graph.generators.specs import CompleteMultipartiteSpec
from app.services.level_decide import WeightFunction, validate_weights
from app.services.mis import enumerate_max_independent_sets, independence_number


def multipartite_weights(part_sizes: Sequence[int]) -> WeightFunction:
    """
    Weight lcm(a_1..a_d)/a_i on every vertex of part i, validated on the
    realized K_{a_1..a_d}.
    """
    spec = CompleteMultipartiteSpec(part_sizes=list(part_sizes))
    g = spec.build()
    d = reduce(lcm, part_sizes, 1)
    weights = [d // size for size in part_sizes for _ in range(size)]
    return validate_weights(g, weights)


def multipartite_parts(g: Graph) -> Optional[List[List[int]]]:
    """The parts when g is complete multipartite (complement a union of cliques)"""
    if g.n == 0:
        return None
    h = complement(g)
    parts = connected_components(h)
    for part in parts:
        if any(h.degree(v) != len(part) - 1 for v in part):
            return None
    return parts


def classify_complete_multipartite(g: Graph) -> Optional[FamilyVerdict]:
    parts = multipartite_parts(g)
    if parts is None:
        return None
    d = reduce(lcm, (len(p) for p in parts), 1)
    weights = [0] * g.n
    for part in parts:
        for v in part:
            weights[v] = d // len(part)
    return FamilyVerdict(
        family=FamilyTags.COMPLETE_MULTIPARTITE,
        levelable=True,
        citation=Citations.COMPLETE_MULTIPARTITE,
        weights=validate_weights(g, weights),
    )


def classify_alpha_le2(g: Graph) -> Optional[FamilyVerdict]:
    """Levelable verdict when alpha(g) <= 2, None otherwise"""
    family = enumerate_max_independent_sets(g)
    alpha = independence_number(g, family)
    if alpha > 2:
        return None
    dominating = {s[0] for s in family if len(s) == 1}
    weights = [2 if alpha == 2 and v in dominating else 1 for v in range(g.n)]
    return FamilyVerdict(
        family=FamilyTags.ALPHA_LE2,
        levelable=True,
        citation=Citations.ALPHA_LE2,
        weights=validate_weights(g, weights, family),
    )
