"""
Family dispatcher

Tries the structural recognizers in a fixed order and falls back to the
exact decision procedure. A family is only claimed when it is recognized
from the graph itself.
"""

import logging
from typing import List, Optional

from app.models import LevelableCertificate, ObstructionWitness
from app.services.families.cameron_walker import classify_cameron_walker
from app.services.families.circulants import classify_cubic_circulant
from app.services.families.cochordal import classify_cochordal
from app.services.families.multipartite import (
    classify_alpha_le2,
    classify_complete_multipartite,
)
from app.services.families.obstructions import cycle_obstruction, path_obstruction
from app.services.families.trees import (
    classify_big_star,
    classify_caterpillar,
    classify_tree,
    tree_weights,
)
from app.services.families.types import Citations, FamilyTags, FamilyVerdict
from app.services.graph.core import Graph
from app.services.graph.generators.base import FamilySpec
from app.services.graph.generators.specs import (
    BigStarSpec,
    CameronWalkerSpec,
    CaterpillarSpec,
    CirculantSpec,
)
from app.services.level_decide import ObstructionQuadruple, decide_levelable, validate_weights

logger = logging.getLogger(__name__)

LEVELABLE_CYCLES = (2, 3, 4, 5, 7)


def path_order(g: Graph) -> Optional[List[int]]:
    """Vertices along g when g is a path on >= 2 vertices, starting at the smaller end"""
    if g.n < 2 or not g.is_tree() or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    start = min(v for v in range(g.n) if g.degree(v) == 1)
    return _walk(g, start)


def cycle_order(g: Graph) -> Optional[List[int]]:
    """Vertices around g when g is a cycle on >= 3 vertices, from 0 toward its smaller neighbor"""
    if g.n < 3 or any(g.degree(v) != 2 for v in range(g.n)) or not g.is_connected():
        return None
    return _walk(g, 0)


def _walk(g: Graph, start: int) -> List[int]:
    order, prev, current = [start], None, start
    while len(order) < g.n:
        nxt = next(u for u in g.adj[current] if u != prev)
        order.append(nxt)
        prev, current = current, nxt
    return order


def _relabel(quad: ObstructionQuadruple, order: List[int]) -> List[List[int]]:
    return [sorted(order[v] for v in s) for s in quad.as_lists()]


def _classify_path(g: Graph, order: List[int]) -> FamilyVerdict:
    if g.n <= 4:
        return FamilyVerdict(
            family=FamilyTags.PATH,
            levelable=True,
            citation=Citations.PATH,
            weights=validate_weights(g, tree_weights(g)),
        )
    return FamilyVerdict(
        family=FamilyTags.PATH,
        levelable=False,
        citation=Citations.PATH,
        witness=_relabel(path_obstruction(g.n), order),
    )


def _classify_cycle(g: Graph, order: List[int]) -> FamilyVerdict:
    if g.n in LEVELABLE_CYCLES:
        return FamilyVerdict(
            family=FamilyTags.CYCLE,
            levelable=True,
            citation=Citations.CYCLE,
            weights=validate_weights(g, [1] * g.n),
        )
    return FamilyVerdict(
        family=FamilyTags.CYCLE,
        levelable=False,
        citation=Citations.CYCLE,
        witness=_relabel(cycle_obstruction(g.n), order),
    )


def _classify_generic(g: Graph) -> FamilyVerdict:
    certificate = decide_levelable(g)
    if isinstance(certificate, LevelableCertificate):
        return FamilyVerdict(
            family=FamilyTags.GENERIC,
            levelable=True,
            citation=Citations.GENERIC,
            weights=validate_weights(g, certificate.weights),
        )
    witness = certificate.witness
    if isinstance(witness, ObstructionWitness):
        return FamilyVerdict(
            family=FamilyTags.GENERIC,
            levelable=False,
            citation=Citations.GENERIC,
            witness=witness.sets,
        )
    return FamilyVerdict(
        family=FamilyTags.GENERIC,
        levelable=False,
        citation=Citations.GENERIC,
        farkas_multipliers=list(witness.farkas_multipliers),
    )


def classify(g: Graph) -> FamilyVerdict:
    """
    Recognize path, cycle, tree, complete multipartite, independence number
    <= 2 and co-chordal graphs in that order; otherwise decide generically.
    """
    order = path_order(g)
    if order is not None:
        return _classify_path(g, order)

    order = cycle_order(g)
    if order is not None:
        return _classify_cycle(g, order)

    if g.is_tree():
        return classify_tree(g)

    for recognizer in (classify_complete_multipartite, classify_alpha_le2, classify_cochordal):
        verdict = recognizer(g)
        if verdict is not None:
            logger.debug(f"Classified as {verdict.family}")
            return verdict

    logger.info(f"No closed-form family matched (n={g.n}); deciding generically")
    return _classify_generic(g)


def classify_spec(spec: FamilySpec) -> FamilyVerdict:
    """Use the family's own classifier when one exists, else classify the realized graph"""
    if isinstance(spec, CaterpillarSpec):
        return classify_caterpillar(spec)
    if isinstance(spec, BigStarSpec):
        return classify_big_star(spec)
    if isinstance(spec, CameronWalkerSpec):
        return classify_cameron_walker(spec)
    if isinstance(spec, CirculantSpec) and _is_cubic(spec):
        a = next(s for s in spec.connection if 2 * s != spec.n)
        return classify_cubic_circulant(spec.n // 2, a)
    return classify(spec.build())


def _is_cubic(spec: CirculantSpec) -> bool:
    return (
        spec.n % 2 == 0
        and len(spec.connection) == 2
        and spec.n // 2 in spec.connection
        and min(spec.connection) < spec.n // 2
    )
