"""
Artinian monomial quotients of edge ideals

For the quotient of k[x_1..x_n] by the edge ideal and the pure powers
x_i^{a_i}, the standard monomials are the exponent tuples 0 <= e_i < a_i
with independent support. Everything here is computed by enumerating them.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from operator import mul
from typing import List, Optional, Sequence, Tuple

from app.config import settings
from app.errors import ExponentError, LevelableError, MonomialCapExceeded
from app.models import SocleResponse
from app.services.graph.core import Graph
from app.services.mis import enumerate_max_independent_sets, is_well_covered

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class FacetComplex:
    """Simplicial complex given by its facets"""
    n: int
    facets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.facets:
            raise LevelableError("a facet complex needs at least one facet")
        masks = [reduce(lambda m, v: m | 1 << v, f, 0) for f in self.facets]
        for i, p in enumerate(masks):
            for j, q in enumerate(masks):
                if i != j and p & q == p:
                    raise LevelableError(
                        f"facets {self.facets[i]} and {self.facets[j]} are comparable"
                    )


@dataclass(frozen=True)
class ExponentVector:
    a: Tuple[int, ...]

    def __post_init__(self):
        for i, value in enumerate(self.a):
            if value < 2:
                raise ExponentError(f"exponent at vertex {i} is {value}, must be >= 2")

    @classmethod
    def of(cls, values: Sequence[int]) -> "ExponentVector":
        return cls(a=tuple(values))

    def __len__(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class SocleVector:
    s: Tuple[int, ...]

    @property
    def top_degree(self) -> int:
        return len(self.s) - 1

    @property
    def level(self) -> bool:
        return all(v == 0 for v in self.s[:-1])


@dataclass(frozen=True)
class MonomialBasis:
    """Standard monomials ordered by degree, then lexicographically"""
    monomials: Tuple[Monomial, ...]
    graded_dims: Tuple[int, ...]

    @property
    def top_degree(self) -> int:
        return len(self.graded_dims) - 1


def independence_complex(g: Graph) -> FacetComplex:
    return FacetComplex(n=g.n, facets=enumerate_max_independent_sets(g).sets)


def _check_length(n: int, a: ExponentVector) -> None:
    if len(a) != n:
        raise ExponentError(f"expected {n} exponents, got {len(a)}")


def _independent_supports(g: Graph) -> List[int]:
    """Every independent set as a bitmask"""
    out = []

    def grow(mask: int, start: int, blocked: int) -> None:
        out.append(mask)
        for v in range(start, g.n):
            if not blocked >> v & 1:
                grow(mask | 1 << v, v + 1, blocked | g.neighbor_masks[v] | 1 << v)

    grow(0, 0, 0)
    return out


def monomial_basis(
    g: Graph, a: ExponentVector, monomial_cap: Optional[int] = None
) -> MonomialBasis:
    """
    Raises:
        ExponentError: On a length mismatch
        MonomialCapExceeded: If prod(a_i) exceeds the cap
    """
    _check_length(g.n, a)
    cap = settings.monomial_cap if monomial_cap is None else monomial_cap
    candidates = reduce(mul, a.a, 1)
    if candidates > cap:
        raise MonomialCapExceeded(candidates, cap)

    monomials: List[Monomial] = []
    for support in _independent_supports(g):
        exps: List[List[int]] = [[0]] * g.n
        for v in range(g.n):
            if support >> v & 1:
                exps[v] = list(range(1, a.a[v]))
        tuples: List[Monomial] = [()]
        for options in exps:
            tuples = [t + (e,) for t in tuples for e in options]
        monomials.extend(tuples)

    monomials.sort(key=lambda m: (sum(m), m))
    top = sum(monomials[-1])
    dims = [0] * (top + 1)
    for m in monomials:
        dims[sum(m)] += 1
    logger.debug(f"Quotient basis: {len(monomials)} monomials, top degree {top}")
    return MonomialBasis(monomials=tuple(monomials), graded_dims=tuple(dims))


def is_socle_monomial(g: Graph, a: ExponentVector, m: Monomial) -> bool:
    """x_i * m vanishes for every i: by a pure power, or by an edge to the support"""
    support = 0
    for v, e in enumerate(m):
        if e:
            support |= 1 << v
    for i, e in enumerate(m):
        if e:
            if e != a.a[i] - 1:
                return False
        elif not g.neighbor_masks[i] & support:
            return False
    return True


def socle_vector(
    g: Graph, a: ExponentVector, basis: Optional[MonomialBasis] = None
) -> SocleVector:
    basis = basis or monomial_basis(g, a)
    counts = [0] * (basis.top_degree + 1)
    for m in basis.monomials:
        if is_socle_monomial(g, a, m):
            counts[sum(m)] += 1
    return SocleVector(s=tuple(counts))


def is_level_quotient(g: Graph, a: ExponentVector) -> bool:
    return socle_vector(g, a).level


def facet_system_feasible(fc: FacetComplex, a: ExponentVector) -> bool:
    """
    a solves sum_{F_k} a_i - sum_{F_k+1} a_i = |F_k| - |F_k+1| for consecutive
    facets, i.e. a - 1 weights every facet equally.
    """
    _check_length(fc.n, a)
    sums = [sum(a.a[i] for i in f) for f in fc.facets]
    sizes = [len(f) for f in fc.facets]
    return all(
        sums[k] - sums[k + 1] == sizes[k] - sizes[k + 1] for k in range(len(sums) - 1)
    )


def socle_report(g: Graph, a: ExponentVector) -> SocleResponse:
    basis = monomial_basis(g, a)
    socle = socle_vector(g, a, basis)
    return SocleResponse(
        socle=list(socle.s),
        level=socle.level,
        top_degree=socle.top_degree,
        graded_dims=list(basis.graded_dims),
        well_covered=is_well_covered(g),
    )
