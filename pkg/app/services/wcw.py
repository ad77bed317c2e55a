"""
Well-covered weightings over the rationals

WCW(G) is the kernel of the consecutive-difference matrix of MaxInd(G).
Elimination is fraction-free on integer rows (content removed after every
step); Fractions only appear when a kernel vector is read off.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from app.errors import LevelableError, WeightError
from app.services.graph.core import Graph
from app.services.mis import MaxIndFamily, enumerate_max_independent_sets

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]
RationalVector = Tuple[Fraction, ...]


def integer_normalize(values: Sequence[Fraction]) -> List[int]:
    """
    Smallest integer vector on the same ray: clear denominators, then divide
    by the gcd. The zero vector maps to zeros.
    """
    fracs = [Fraction(v) for v in values]
    scale = reduce(lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * scale) for f in fracs]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return ints
    return [v // g for v in ints]


def _primitive(row: List[int]) -> List[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        row = [v // g for v in row]
    return row


def _eliminate(row: List[int], pivot_row: List[int], col: int) -> List[int]:
    a, b = pivot_row[col], row[col]
    if b == 0:
        return row
    return _primitive([a * x - b * y for x, y in zip(row, pivot_row)])


def constraint_matrix(family: MaxIndFamily) -> IntMatrix:
    """
    Row k is indicator(W_k) - indicator(W_{k+1}); the kernel is WCW(G).

    Raises:
        LevelableError: If the family is empty
    """
    if len(family) == 0:
        raise LevelableError("constraint matrix needs a nonempty family")
    n = family.source_n
    indicators = []
    for s in family:
        row = [0] * n
        for v in s:
            row[v] = 1
        indicators.append(row)
    return [
        [x - y for x, y in zip(indicators[k], indicators[k + 1])]
        for k in range(len(indicators) - 1)
    ]


def reduced_echelon(matrix: IntMatrix, ncols: int) -> Tuple[IntMatrix, List[int]]:
    """
    Reduced echelon form up to row scaling.

    Returns:
        (rows, pivots): rows[i] has a positive entry at pivots[i] and zeros
        in every other pivot column; pivots are increasing
    """
    rows = [_primitive(list(r)) for r in matrix if any(r)]
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        pick = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if pick is None:
            continue
        rows[top], rows[pick] = rows[pick], rows[top]
        if rows[top][col] < 0:
            rows[top] = [-v for v in rows[top]]
        for i in range(len(rows)):
            if i != top:
                rows[i] = _eliminate(rows[i], rows[top], col)
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def matrix_rank(matrix: IntMatrix, ncols: int) -> int:
    return len(reduced_echelon(matrix, ncols)[1])


def row_basis(matrix: IntMatrix) -> List[int]:
    """Indices of a maximal linearly independent subset of the rows, chosen greedily"""
    kept: List[int] = []
    echelon: Dict[int, List[int]] = {}  # pivot column -> reduced row
    for index, original in enumerate(matrix):
        row = _primitive(list(original))
        for col in sorted(echelon):
            row = _eliminate(row, echelon[col], col)
        lead = next((c for c, v in enumerate(row) if v), None)
        if lead is None:
            continue
        echelon[lead] = row
        kept.append(index)
    return kept


@dataclass(frozen=True)
class WcwBasis:
    """Canonical basis of WCW(G): one vector per free column of the echelon form"""
    n: int
    dim: int
    rank: int
    basis: Tuple[RationalVector, ...]
    free_columns: Tuple[int, ...]
    constraint_rows: Tuple[Tuple[int, ...], ...]

    def contains(self, vector: Sequence[Fraction]) -> bool:
        """Membership in the span, using the canonical parametrization"""
        if len(vector) != self.n:
            return False
        combo = [Fraction(0)] * self.n
        for f, b in zip(self.free_columns, self.basis):
            coef = Fraction(vector[f])
            for i in range(self.n):
                combo[i] += coef * b[i]
        return all(c == Fraction(v) for c, v in zip(combo, vector))


def kernel_basis(matrix: IntMatrix, ncols: int) -> Tuple[List[RationalVector], List[int], int]:
    """
    Returns:
        (basis, free_columns, rank) of the right kernel
    """
    rows, pivots = reduced_echelon(matrix, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            vec[p] = Fraction(-row[f], row[p])
        basis.append(tuple(vec))
    return basis, free, len(pivots)


def wcw_basis(g: Graph, family: Optional[MaxIndFamily] = None) -> WcwBasis:
    """
    Exact basis of WCW(g).

    Raises:
        EnumerationCapExceeded: propagated from the enumeration
    """
    family = family or enumerate_max_independent_sets(g)
    matrix = constraint_matrix(family)
    basis, free, rank = kernel_basis(matrix, g.n)
    logger.debug(f"WCW: n={g.n}, rank={rank}, dim={len(basis)}")
    return WcwBasis(
        n=g.n,
        dim=len(basis),
        rank=rank,
        basis=tuple(basis),
        free_columns=tuple(free),
        constraint_rows=tuple(tuple(r) for r in matrix),
    )


def is_wcw_weighting(
    g: Graph, w: Sequence[Fraction], family: Optional[MaxIndFamily] = None
) -> bool:
    """
    True iff every maximal independent set has the same w-sum.

    Raises:
        WeightError: If len(w) != g.n
    """
    if len(w) != g.n:
        raise WeightError(f"expected {g.n} weights, got {len(w)}")
    family = family or enumerate_max_independent_sets(g)
    sums = {sum((Fraction(w[v]) for v in s), Fraction(0)) for s in family}
    return len(sums) == 1
