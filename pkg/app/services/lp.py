"""
Exact rational feasibility LP

Phase I of the simplex method on Fractions with Bland's rule. Either returns a
feasible point or dual multipliers proving that none exists (Farkas).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from app.config import settings
from app.errors import LPIterationCapExceeded
from app.services.wcw import IntMatrix, integer_normalize, row_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: Optional[Tuple[Fraction, ...]] = None
    farkas: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0


def phase_one(
    a: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    max_iterations: Optional[int] = None,
) -> FeasibilityResult:
    """
    Decide whether A y = b has a solution y >= 0.

    On infeasibility, farkas is u with u^T A >= 0 and u^T b < 0.

    Raises:
        LPIterationCapExceeded: If more than max_iterations pivots are needed
    """
    cap = settings.lp_max_iterations if max_iterations is None else max_iterations
    m = len(b)
    n = len(a[0]) if m else 0
    signs = [-1 if b[i] < 0 else 1 for i in range(m)]

    # columns 0..n-1 are y, n..n+m-1 artificials, last is the right-hand side
    width = n + m + 1
    tableau: List[List[Fraction]] = []
    for i in range(m):
        row = [Fraction(signs[i] * v) for v in a[i]]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(Fraction(signs[i] * b[i]))
        tableau.append(row)
    basis = [n + i for i in range(m)]

    # reduced costs of min sum(artificials); last entry is -objective
    cost = [Fraction(0)] * width
    for j in range(width):
        column_sum = sum((tableau[i][j] for i in range(m)), Fraction(0))
        cost[j] = (Fraction(1) if n <= j < n + m else Fraction(0)) - column_sum
    cost[-1] = -sum((tableau[i][-1] for i in range(m)), Fraction(0))

    pivots = 0
    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    leaving, best = i, ratio
        # the phase-one objective is bounded below, so some row qualifies
        assert leaving is not None

        pivots += 1
        if pivots > cap:
            logger.warning(f"Simplex pivot cap {cap} exceeded ({m} rows, {n} columns)")
            raise LPIterationCapExceeded(cap)

        pivot_row = tableau[leaving]
        factor = pivot_row[entering]
        pivot_row = [v / factor for v in pivot_row]
        tableau[leaving] = pivot_row
        for i in range(m):
            if i != leaving and tableau[i][entering]:
                scale = tableau[i][entering]
                tableau[i] = [x - scale * y for x, y in zip(tableau[i], pivot_row)]
        scale = cost[entering]
        cost = [x - scale * y for x, y in zip(cost, pivot_row)]
        basis[leaving] = entering

    objective = -cost[-1]
    if objective == 0:
        y = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                y[var] = tableau[i][-1]
        return FeasibilityResult(feasible=True, solution=tuple(y), pivots=pivots)

    # dual of the flipped system is 1 - cost(artificial k); u' = -dual
    farkas = tuple(signs[k] * (cost[n + k] - 1) for k in range(m))
    return FeasibilityResult(feasible=False, farkas=farkas, pivots=pivots)


def positive_kernel_vector(
    matrix: IntMatrix, n: int, max_iterations: Optional[int] = None
) -> FeasibilityResult:
    """
    Decide whether matrix x = 0 has a solution with every x_i >= 1.

    Only a row basis of the matrix enters the LP. Farkas multipliers are
    expanded back to one entry per original row (zeros on dropped rows) and
    scaled to coprime integers.
    """
    if not matrix:
        return FeasibilityResult(feasible=True, solution=tuple([Fraction(1)] * n))

    kept = row_basis(matrix)
    a = [[Fraction(v) for v in matrix[i]] for i in kept]
    # x = 1 + y with y >= 0
    b = [-sum(row, Fraction(0)) for row in a]
    result = phase_one(a, b, max_iterations=max_iterations)
    logger.debug(
        f"Phase one: {len(kept)}/{len(matrix)} rows, {result.pivots} pivots, "
        f"feasible={result.feasible}"
    )

    if result.feasible:
        x = tuple(1 + y for y in result.solution)
        return FeasibilityResult(feasible=True, solution=x, pivots=result.pivots)

    full = [Fraction(0)] * len(matrix)
    for index, u in zip(kept, result.farkas):
        full[index] = u
    farkas = tuple(Fraction(v) for v in integer_normalize(full))
    return FeasibilityResult(feasible=False, farkas=farkas, pivots=result.pivots)


def check_farkas(matrix: IntMatrix, n: int, multipliers: Sequence[Fraction]) -> bool:
    """
    True iff r = u^T A is componentwise >= 0 with positive sum, which rules out
    every x >= 1 with A x = 0.
    """
    if len(multipliers) != len(matrix):
        return False
    r = [
        sum((Fraction(u) * row[j] for u, row in zip(multipliers, matrix)), Fraction(0))
        for j in range(n)
    ]
    return all(v >= 0 for v in r) and sum(r) > 0
