"""
Standardized verdict type for the family classifiers
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from app.models import FamilyVerdictResponse
from app.services.level_decide import WeightFunction


class FamilyTags:
    """Family tags reported by the classifiers"""
    PATH = "path"
    CYCLE = "cycle"
    TREE = "tree"
    CATERPILLAR = "caterpillar"
    BIG_STAR = "bigstar"
    CUBIC_CIRCULANT = "cubic-circulant"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    ALPHA_LE2 = "alpha-le-2"
    COCHORDAL = "cochordal"
    CAMERON_WALKER = "cameron-walker"
    GENERIC = "generic"


class Citations:
    PATH = "paths: P_n is levelable iff n in {2,3,4}"
    CYCLE = "cycles: C_n is levelable iff n in {2,3,4,5,7}"
    TREE = "trees: levelable iff every non-leaf vertex is adjacent to a leaf"
    CATERPILLAR = "caterpillars: levelable iff every central path vertex has a leg"
    BIG_STAR = "big stars: levelable iff every arm has length <= 2 and some arm has length 1"
    CUBIC_CIRCULANT = (
        "cubic circulants: C_2n(a,n) splits into t = gcd(2n,a) copies; "
        "C_2m(1,m) levelable iff m in {2,3,4}, C_4m(2,2m) with m odd iff m in {3,5}"
    )
    COMPLETE_MULTIPARTITE = "complete multipartite: weight lcm(a_1..a_d)/a_i on part i"
    ALPHA_LE2 = "independence number <= 2: weight 2 on dominating vertices, 1 elsewhere"
    COCHORDAL = "co-chordal graphs are levelable: weights by induction along a leaf order"
    CAMERON_WALKER = "Cameron-Walker graphs: levelable iff no exceptional vertex"
    GENERIC = "exact LP feasibility of the well-covered weighting system"


@dataclass
class FamilyVerdict:
    """
    Verdict of a closed-form classifier.

    weights, when present, has already been validated on the graph. A
    non-levelable verdict carries at most one of witness (an obstruction
    quadruple) and farkas_multipliers.
    """
    family: str
    levelable: bool
    citation: str
    weights: Optional[WeightFunction] = None
    witness: Optional[List[List[int]]] = None
    farkas_multipliers: Optional[List[Fraction]] = None

    def to_response(self) -> FamilyVerdictResponse:
        return FamilyVerdictResponse(
            family=self.family,
            levelable=self.levelable,
            weights=list(self.weights.weights) if self.weights else None,
            independence_weight=self.weights.independence_weight if self.weights else None,
            citation=self.citation,
            witness=self.witness,
            farkas_multipliers=self.farkas_multipliers,
        )
