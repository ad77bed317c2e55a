"""
Closed-form obstruction quadruples for non-levelable paths and cycles

Sets are built on 1-based labels, as in the hand proofs, and shifted to
0-based vertices on return.
"""

from typing import Iterable

from app.errors import FamilySpecError
from app.services.level_decide import ObstructionQuadruple


def _quad(*sets: Iterable[int]) -> ObstructionQuadruple:
    return ObstructionQuadruple(*(tuple(sorted(v - 1 for v in s)) for s in sets))


def _span(start: int, stop: int) -> range:
    """start, start+2, ... up to stop inclusive"""
    return range(start, stop + 1, 2)


def path_obstruction(n: int) -> ObstructionQuadruple:
    """
    Raises:
        FamilySpecError: For n < 5, where P_n is levelable
    """
    if n < 5:
        raise FamilySpecError(f"P_{n} is levelable; obstructions exist for n >= 5")
    m = n // 2
    if n % 2:
        return _quad(
            _span(1, 2 * m + 1),
            _span(2, 2 * m),
            [1, *_span(4, 2 * m)],
            [2, *_span(5, 2 * m + 1)],
        )
    return _quad(
        _span(1, 2 * m - 1),
        _span(2, 2 * m),
        [1, *_span(4, 2 * m)],
        [2, *_span(5, 2 * m - 1)],
    )


def cycle_obstruction(n: int) -> ObstructionQuadruple:
    """
    Raises:
        FamilySpecError: For n in {2, 3, 4, 5, 7}, where C_n is levelable
    """
    if n in (2, 3, 4, 5, 7) or n < 2:
        raise FamilySpecError(f"no obstruction for C_{n}; exists for n = 6 and n >= 8")
    if n == 6:
        return _quad([1, 3, 5], [2, 4, 6], [1, 4], [2, 5])
    if n % 2 == 0:
        return _quad(
            _span(1, n - 1),
            _span(2, n),
            [*_span(1, n - 5), n - 2],
            [*_span(2, n - 4), n - 1],
        )
    return _quad(
        _span(1, n - 2),
        _span(2, n - 1),
        [*_span(1, n - 8), n - 5, n - 2],
        [*_span(2, n - 7), n - 4, n - 1],
    )
