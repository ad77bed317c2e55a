"""
Closed-form classifiers for named graph families
"""

from app.services.families.cameron_walker import classify_cameron_walker
from app.services.families.circulants import classify_cubic_circulant
from app.services.families.cochordal import cochordal_weights
from app.services.families.dispatcher import classify, classify_spec
from app.services.families.multipartite import classify_alpha_le2, multipartite_weights
from app.services.families.obstructions import cycle_obstruction, path_obstruction
from app.services.families.trees import classify_big_star, classify_caterpillar, classify_tree
from app.services.families.types import FamilyTags, FamilyVerdict

__all__ = [
    "FamilyTags",
    "FamilyVerdict",
    "classify",
    "classify_alpha_le2",
    "classify_big_star",
    "classify_cameron_walker",
    "classify_caterpillar",
    "classify_cubic_circulant",
    "classify_spec",
    "classify_tree",
    "cochordal_weights",
    "cycle_obstruction",
    "multipartite_weights",
    "path_obstruction",
]
