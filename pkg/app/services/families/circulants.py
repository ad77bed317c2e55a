"""
Cubic circulants C_2n(a, n)

C_2n(a, n) is t = gcd(2n, a) disjoint copies of one of two connected cubic
circulants, so the verdict reduces to a finite list of levelable cases.
"""

import logging
from math import gcd

from app.services.families.types import Citations, FamilyTags, FamilyVerdict
from app.services.graph.generators.specs import cubic_circulant
from app.services.level_decide import validate_weights

logger = logging.getLogger(__name__)


def cubic_circulant_levelable(n: int, a: int) -> bool:
    t = gcd(2 * n, a)
    order = 2 * n // t
    if order % 2 == 0:
        # copies of C_order(1, order/2)
        return n // t in (2, 3, 4)
    # copies of C_2order(2, order)
    return order in (3, 5)


def classify_cubic_circulant(n: int, a: int) -> FamilyVerdict:
    """
    Args:
        n: Half the vertex count
        a: The non-diameter distance, 1 <= a < n

    Raises:
        FamilySpecError: If a is out of range
    """
    g = cubic_circulant(n, a).build()
    levelable = cubic_circulant_levelable(n, a)
    logger.debug(f"C_{2 * n}({a},{n}): t={gcd(2 * n, a)}, levelable={levelable}")
    weights = validate_weights(g, [1] * g.n) if levelable else None
    return FamilyVerdict(
        family=FamilyTags.CUBIC_CIRCULANT,
        levelable=levelable,
        citation=Citations.CUBIC_CIRCULANT,
        weights=weights,
    )
