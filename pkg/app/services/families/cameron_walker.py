"""
Cameron-Walker graphs, classified from their constructor-supplied structure
"""

import logging

from app.services.families.types import Citations, FamilyTags, FamilyVerdict
from app.services.graph.generators.specs import CameronWalkerSpec
from app.services.level_decide import validate_weights

logger = logging.getLogger(__name__)


def classify_cameron_walker(spec: CameronWalkerSpec) -> FamilyVerdict:
    """
    Levelable iff no V-vertex is exceptional. The weights are q_i on U, r_j
    on V and 1 on every leaf and triangle vertex.

    Raises:
        FamilySpecError: If the parameters violate the family invariants
    """
    g = spec.build()
    exceptional = spec.exceptional()
    if exceptional:
        logger.debug(f"Cameron-Walker graph has exceptional V-vertices {exceptional}")
        return FamilyVerdict(
            family=FamilyTags.CAMERON_WALKER,
            levelable=False,
            citation=Citations.CAMERON_WALKER,
        )

    weights = list(spec.legs) + list(spec.triangles) + [1] * (g.n - spec.a - spec.b)
    return FamilyVerdict(
        family=FamilyTags.CAMERON_WALKER,
        levelable=True,
        citation=Citations.CAMERON_WALKER,
        weights=validate_weights(g, weights),
    )
