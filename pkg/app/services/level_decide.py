"""
Levelability decision with certificates

A graph is decided one connected component at a time: it is levelable iff
every component is. Witnesses for a non-levelable graph name the component
they live on, using the graph's own vertex numbers.
"""

import logging
from dataclasses import dataclass
from numbers import Integral
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from app.config import settings
from app.errors import NonPositiveWeight, UnequalSums, WeightError
from app.models import (
    InfeasibilityWitness,
    LevelableCertificate,
    NotLevelableCertificate,
    ObstructionWitness,
)
from app.services.graph.core import Graph, connected_components, induced_subgraph
from app.services.lp import check_farkas, positive_kernel_vector
from app.services.mis import (
    MaxIndFamily,
    VertexSet,
    enumerate_max_independent_sets,
    minimal_vertex_covers,
)
from app.services.wcw import constraint_matrix, integer_normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightFunction:
    """Strictly positive integer weights with their common maximal-independent-set sum"""
    weights: Tuple[int, ...]
    independence_weight: int

    @classmethod
    def from_family(cls, family: MaxIndFamily, weights: Sequence[int]) -> "WeightFunction":
        """
        Validate weights against a known MaxInd family.

        Raises:
            WeightError: On a length mismatch or a non-integer weight
            NonPositiveWeight: For the first weight below 1
            UnequalSums: Naming the first set and the first set that disagrees with it
        """
        if len(weights) != family.source_n:
            raise WeightError(f"expected {family.source_n} weights, got {len(weights)}")
        for index, value in enumerate(weights):
            if not isinstance(value, Integral):
                raise WeightError(f"weight at vertex {index} is {value!r}, must be an integer")
            if value < 1:
                raise NonPositiveWeight(index, value)

        first = family[0]
        c = sum(weights[v] for v in first)
        for s in family:
            total = sum(weights[v] for v in s)
            if total != c:
                raise UnequalSums(first=(first, c), second=(s, total))
        return cls(weights=tuple(int(v) for v in weights), independence_weight=int(c))

    @property
    def total(self) -> int:
        return sum(self.weights)

    def scaled(self, m: int) -> "WeightFunction":
        if m < 1:
            raise WeightError(f"scale factor must be >= 1, got {m}")
        return WeightFunction(
            weights=tuple(m * v for v in self.weights),
            independence_weight=m * self.independence_weight,
        )

    def to_certificate(self) -> LevelableCertificate:
        return LevelableCertificate(
            weights=list(self.weights), independence_weight=self.independence_weight
        )


def validate_weights(
    g: Graph, w: Sequence[int], family: Optional[MaxIndFamily] = None
) -> WeightFunction:
    """
    Check that w makes g weighted well-covered.

    Returns:
        The WeightFunction with its independence weight
    """
    if len(w) != g.n:
        raise WeightError(f"expected {g.n} weights, got {len(w)}")
    family = family or enumerate_max_independent_sets(g)
    return WeightFunction.from_family(family, w)


@dataclass(frozen=True)
class ObstructionQuadruple:
    f1: VertexSet
    f2: VertexSet
    f3: VertexSet
    f4: VertexSet

    def as_lists(self) -> List[List[int]]:
        return [list(self.f1), list(self.f2), list(self.f3), list(self.f4)]


@dataclass(frozen=True)
class ObstructionSearch:
    """Outcome of the quadruple scan; quadruple None with exhausted False means none exists"""
    quadruple: Optional[ObstructionQuadruple]
    checked: int
    exhausted: bool


def _mask(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def is_obstruction(family: MaxIndFamily, quad: ObstructionQuadruple) -> bool:
    """All four sets maximal independent, F3 and F4 disjoint, F3 | F4 strictly inside F1 | F2"""
    members = set(family.sets)
    sets = (quad.f1, quad.f2, quad.f3, quad.f4)
    if not all(tuple(sorted(s)) in members for s in sets):
        return False
    m1, m2, m3, m4 = (_mask(s) for s in sets)
    inner, outer = m3 | m4, m1 | m2
    return not (m3 & m4) and inner & ~outer == 0 and inner != outer


def find_obstruction(
    family: MaxIndFamily, budget: Optional[int] = None
) -> ObstructionSearch:
    """
    Lexicographically first quadruple (i < j, k < l) over the sorted family.

    Only disjoint pairs (k, l) are candidates; each (i, j, k, l) examined
    counts against the budget.
    """
    budget = settings.obstruction_budget if budget is None else budget
    masks = family.masks
    s = len(masks)
    disjoint = [
        (k, l, masks[k] | masks[l])
        for k in range(s)
        for l in range(k + 1, s)
        if not masks[k] & masks[l]
    ]

    checked = 0
    for i in range(s):
        for j in range(i + 1, s):
            outer = masks[i] | masks[j]
            for k, l, inner in disjoint:
                if checked >= budget:
                    logger.info(f"Obstruction scan stopped after {checked} checks")
                    return ObstructionSearch(quadruple=None, checked=checked, exhausted=True)
                checked += 1
                if inner & ~outer == 0 and inner != outer:
                    quad = ObstructionQuadruple(
                        family[i], family[j], family[k], family[l]
                    )
                    return ObstructionSearch(quadruple=quad, checked=checked, exhausted=False)
    return ObstructionSearch(quadruple=None, checked=checked, exhausted=False)


# Counters over every decide_levelable call in this process
_decision_stats: Dict[str, int] = {
    "decisions": 0,
    "not_levelable": 0,
    "without_quadruple": 0,
    "scan_exhausted": 0,
}


def get_decision_stats() -> Dict[str, int]:
    return dict(_decision_stats)


def reset_decision_stats() -> None:
    """Zero all counters (useful for testing)"""
    for key in _decision_stats:
        _decision_stats[key] = 0


def _decide_component(
    g: Graph,
    component: List[int],
    max_sets: Optional[int],
    max_iterations: Optional[int],
    budget: Optional[int],
):
    """WeightFunction of the component, or a NotLevelableCertificate"""
    sub = induced_subgraph(g, component)
    family = enumerate_max_independent_sets(sub, max_sets=max_sets)
    matrix = constraint_matrix(family)
    result = positive_kernel_vector(matrix, sub.n, max_iterations=max_iterations)

    if result.feasible:
        return WeightFunction.from_family(family, integer_normalize(result.solution))

    _decision_stats["not_levelable"] += 1
    search = find_obstruction(family, budget=budget)
    if search.quadruple is not None:
        sets = [[component[v] for v in s] for s in search.quadruple.as_lists()]
        witness = ObstructionWitness(component=component, sets=sets)
    else:
        _decision_stats["without_quadruple"] += 1
        if search.exhausted:
            _decision_stats["scan_exhausted"] += 1
        logger.info(
            f"No obstruction quadruple on component of size {sub.n}; "
            f"returning Farkas multipliers"
        )
        witness = InfeasibilityWitness(
            component=component, farkas_multipliers=list(result.farkas)
        )
    return NotLevelableCertificate(witness=witness)


def decide_levelable(
    g: Graph,
    max_sets: Optional[int] = None,
    max_iterations: Optional[int] = None,
    budget: Optional[int] = None,
):
    """
    Decide whether g is levelable.

    Args:
        g: Graph
        max_sets: Enumeration cap per component
        max_iterations: Simplex pivot cap per component
        budget: Obstruction scan budget per component

    Returns:
        LevelableCertificate or NotLevelableCertificate

    Raises:
        EnumerationCapExceeded: If a component has too many maximal independent sets
        LPIterationCapExceeded: If the simplex runs out of pivots
    """
    _decision_stats["decisions"] += 1
    weights = [0] * g.n
    c = 0
    for component in connected_components(g):
        outcome = _decide_component(g, component, max_sets, max_iterations, budget)
        if isinstance(outcome, NotLevelableCertificate):
            logger.info(
                f"Not levelable: component {component[:8]}{'...' if len(component) > 8 else ''} "
                f"({outcome.witness.kind})"
            )
            return outcome
        for v, wv in zip(component, outcome.weights):
            weights[v] = wv
        c += outcome.independence_weight

    # every maximal independent set of g picks one set per component
    common = reduce(gcd, weights, 0)
    if common > 1:
        weights = [v // common for v in weights]
        c //= common
    logger.info(f"Levelable: n={g.n}, independence weight {c}")
    return WeightFunction(weights=tuple(weights), independence_weight=c).to_certificate()


def verify_certificate(g: Graph, certificate) -> bool:
    """Re-check a certificate from scratch with exact arithmetic"""
    if isinstance(certificate, LevelableCertificate):
        try:
            w = validate_weights(g, certificate.weights)
        except WeightError:
            return False
        return w.independence_weight == certificate.independence_weight

    witness = certificate.witness
    component = list(witness.component)
    if not component or len(set(component)) != len(component):
        return False
    if any(not 0 <= v < g.n for v in component):
        return False
    inside = set(component)
    # the witness must live on a union of components
    if any(u not in inside for v in component for u in g.adj[v]):
        return False

    sub = induced_subgraph(g, component)
    family = enumerate_max_independent_sets(sub)
    local = {v: i for i, v in enumerate(component)}

    if isinstance(witness, ObstructionWitness):
        if len(witness.sets) != 4 or any(v not in local for s in witness.sets for v in s):
            return False
        quad = ObstructionQuadruple(
            *(tuple(sorted(local[v] for v in s)) for s in witness.sets)
        )
        return is_obstruction(family, quad)

    matrix = constraint_matrix(family)
    return check_farkas(matrix, sub.n, [Fraction(u) for u in witness.farkas_multipliers])


def vertex_cover_weight_check(
    g: Graph, w: WeightFunction, family: Optional[MaxIndFamily] = None
) -> bool:
    """Every minimal vertex cover weighs total - independence weight"""
    family = family or enumerate_max_independent_sets(g)
    target = w.total - w.independence_weight
    return all(
        sum(w.weights[v] for v in cover) == target
        for cover in minimal_vertex_covers(g, family)
    )
