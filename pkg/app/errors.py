"""
Domain exceptions

Every fault raised by the services derives from LevelableError, itself a
ValueError, so callers that only know about ValueError keep working.
"""

from typing import Optional, Sequence, Tuple

from app.models import ErrorResponse


class LevelableError(ValueError):
    """Base class for all domain errors"""

    def to_response(self) -> ErrorResponse:
        return ErrorResponse(error=type(self).__name__, detail=str(self))


class GraphError(LevelableError):
    """Invalid graph or vertex reference"""


class GraphFormatError(GraphError):
    """Malformed edge-list document"""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class FamilySpecError(LevelableError):
    """Family parameters violate the family's invariants"""


class EnumerationCapExceeded(LevelableError):
    """Maximal independent set family grew past the configured cap"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} maximal independent sets; raise LEVELABLE_MAX_SETS")


class LPIterationCapExceeded(LevelableError):
    """Simplex ran out of pivots"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"simplex exceeded {cap} pivots")


class WeightError(LevelableError):
    """Weight vector does not make the graph weighted well-covered"""


class NonPositiveWeight(WeightError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"weight at vertex {index} is {value}, must be >= 1")


class UnequalSums(WeightError):
    def __init__(self, first: Tuple[Sequence[int], int], second: Tuple[Sequence[int], int]):
        self.first = (tuple(first[0]), first[1])
        self.second = (tuple(second[0]), second[1])
        super().__init__(
            f"maximal independent sets disagree: {set(self.first[0]) or '{}'}:{self.first[1]} "
            f"vs {set(self.second[0]) or '{}'}:{self.second[1]}"
        )


class NotATree(LevelableError):
    """Tree classifier called on a graph that is not a tree"""


class ExponentError(LevelableError):
    """Exponent vector entries must all be >= 2"""


class MonomialCapExceeded(LevelableError):
    def __init__(self, candidates: int, cap: int):
        self.candidates = candidates
        self.cap = cap
        super().__init__(f"{candidates} candidate exponent tuples exceeds cap {cap}")


class ConstructionError(LevelableError):
    """Construction inputs are inconsistent"""

    def __init__(self, message: str, cause: Optional[Exception] = None):
        self.cause = cause
        super().__init__(message)
