"""
Built-in graph families

Vertex numbering is part of each family's contract:
- path, cycle: 0..n-1 along the path or cycle
- multipartite: parts in block order
- circulant: 0..n-1 around the circle
- caterpillar: spine first, then legs grouped by spine vertex
- bigstar: center 0, then each arm from the center outward
- cameron-walker: U, V, leaves per U vertex, triangle pairs per V vertex
- star: center 0, leaves 1..n
"""

import logging
from fractions import Fraction
from typing import ClassVar, List, Sequence, Tuple

import numpy as np
from pydantic import Field

from app.errors import FamilySpecError
from app.models import Rational
from app.services.graph.core import Edge, Graph, connected_components
from app.services.graph.generators.base import FamilySpec, parse_int, parse_int_list

logger = logging.getLogger(__name__)


def _expect_args(family: str, args: Sequence[str], count: int, usage: str) -> None:
    if len(args) != count:
        raise FamilySpecError(f"{family} expects {usage}, got {len(args)} argument(s)")


class PathSpec(FamilySpec):
    family: ClassVar[str] = "path"
    n: int

    def validate_spec(self) -> None:
        if self.n < 2:
            raise FamilySpecError(f"path needs n >= 2, got {self.n}")

    def realize(self) -> Graph:
        return Graph.from_edges(self.n, [(i, i + 1) for i in range(self.n - 1)])

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "PathSpec":
        _expect_args(cls.family, args, 1, "N")
        return cls(n=parse_int(args[0], "n"))


class CycleSpec(FamilySpec):
    """Cycle{2} is the single edge K2"""

    family: ClassVar[str] = "cycle"
    n: int

    def validate_spec(self) -> None:
        if self.n < 2:
            raise FamilySpecError(f"cycle needs n >= 2, got {self.n}")

    def realize(self) -> Graph:
        if self.n == 2:
            return Graph.from_edges(2, [(0, 1)])
        return Graph.from_edges(self.n, [(i, (i + 1) % self.n) for i in range(self.n)])

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "CycleSpec":
        _expect_args(cls.family, args, 1, "N")
        return cls(n=parse_int(args[0], "n"))


class CompleteMultipartiteSpec(FamilySpec):
    family: ClassVar[str] = "multipartite"
    part_sizes: List[int]

    def validate_spec(self) -> None:
        if not self.part_sizes:
            raise FamilySpecError("multipartite needs at least one part")
        for size in self.part_sizes:
            if size < 1:
                raise FamilySpecError(f"part sizes must be >= 1, got {size}")

    def parts(self) -> List[List[int]]:
        out, start = [], 0
        for size in self.part_sizes:
            out.append(list(range(start, start + size)))
            start += size
        return out

    def realize(self) -> Graph:
        parts = self.parts()
        edges = [
            (u, v)
            for i, pi in enumerate(parts)
            for pj in parts[i + 1:]
            for u in pi
            for v in pj
        ]
        return Graph.from_edges(sum(self.part_sizes), edges)

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "CompleteMultipartiteSpec":
        if not args:
            raise FamilySpecError("multipartite expects part sizes, e.g. 2,3")
        return cls(part_sizes=parse_int_list(",".join(args)))


class CirculantSpec(FamilySpec):
    """C_n(S): edge {i,j} iff |i-j| or n-|i-j| lies in S"""

    family: ClassVar[str] = "circulant"
    n: int
    connection: List[int]

    def validate_spec(self) -> None:
        if self.n < 1:
            raise FamilySpecError(f"circulant needs n >= 1, got {self.n}")
        for s in self.connection:
            if not 1 <= s <= self.n // 2:
                raise FamilySpecError(
                    f"connection set must lie in 1..{self.n // 2}, got {s}"
                )
        if len(set(self.connection)) != len(self.connection):
            raise FamilySpecError("connection set has repeated entries")

    def realize(self) -> Graph:
        edges = [(i, (i + s) % self.n) for i in range(self.n) for s in self.connection]
        return Graph.from_edges(self.n, edges)

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "CirculantSpec":
        if len(args) < 2:
            raise FamilySpecError("circulant expects N S, e.g. 10 2,5")
        return cls(
            n=parse_int(args[0], "n"), connection=parse_int_list(",".join(args[1:]))
        )


def cubic_circulant(n: int, a: int) -> CirculantSpec:
    """The 3-regular circulant C_{2n}(a, n)"""
    if not 1 <= a < n:
        raise FamilySpecError(f"cubic circulant needs 1 <= a < n, got a={a}, n={n}")
    return CirculantSpec(n=2 * n, connection=[a, n])


class CaterpillarSpec(FamilySpec):
    family: ClassVar[str] = "caterpillar"
    spine: int
    legs: List[int]

    def validate_spec(self) -> None:
        if self.spine < 1:
            raise FamilySpecError(f"caterpillar needs a spine of length >= 1, got {self.spine}")
        if len(self.legs) != self.spine:
            raise FamilySpecError(
                f"expected {self.spine} leg counts, got {len(self.legs)}"
            )
        for count in self.legs:
            if count < 0:
                raise FamilySpecError(f"leg counts must be >= 0, got {count}")

    def realize(self) -> Graph:
        edges: List[Edge] = [(i, i + 1) for i in range(self.spine - 1)]
        nxt = self.spine
        for i, count in enumerate(self.legs):
            for _ in range(count):
                edges.append((i, nxt))
                nxt += 1
        return Graph.from_edges(nxt, edges)

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "CaterpillarSpec":
        if not args:
            raise FamilySpecError("caterpillar expects leg counts, e.g. 1,0,1")
        legs = parse_int_list(",".join(args))
        return cls(spine=len(legs), legs=legs)


class BigStarSpec(FamilySpec):
    """q paths of lengths n_1..n_q glued at center 0"""

    family: ClassVar[str] = "bigstar"
    arms: List[int]

    def validate_spec(self) -> None:
        if len(self.arms) < 3:
            raise FamilySpecError(f"big star needs q >= 3 arms, got {len(self.arms)}")
        for length in self.arms:
            if length < 1:
                raise FamilySpecError(f"arm lengths must be >= 1, got {length}")

    def realize(self) -> Graph:
        edges: List[Edge] = []
        nxt = 1
        for length in self.arms:
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Graph.from_edges(nxt, edges)

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "BigStarSpec":
        if not args:
            raise FamilySpecError("bigstar expects arm lengths, e.g. 1,2,2,3")
        return cls(arms=parse_int_list(",".join(args)))


class CameronWalkerSpec(FamilySpec):
    """
    Cameron-Walker graph from its bipartite skeleton.

    skeleton holds (i, j) pairs joining U-vertex i to V-vertex j; legs[i] is
    the number of leaves on U-vertex i and triangles[j] the number of pendant
    triangles on V-vertex j. A V-vertex without triangles is exceptional.
    """

    family: ClassVar[str] = "cameron-walker"
    a: int
    b: int
    skeleton: List[Tuple[int, int]]
    legs: List[int]
    triangles: List[int]

    def validate_spec(self) -> None:
        if self.a < 1 or self.b < 1:
            raise FamilySpecError(f"need a, b >= 1, got a={self.a}, b={self.b}")
        if len(self.legs) != self.a:
            raise FamilySpecError(f"expected {self.a} leg counts, got {len(self.legs)}")
        if len(self.triangles) != self.b:
            raise FamilySpecError(
                f"expected {self.b} triangle counts, got {len(self.triangles)}"
            )
        for i, q in enumerate(self.legs):
            if q < 1:
                raise FamilySpecError(f"U-vertex {i} needs at least one leaf, got {q}")
        for j, r in enumerate(self.triangles):
            if r < 0:
                raise FamilySpecError(f"triangle counts must be >= 0, got {r} at V-vertex {j}")
        for i, j in self.skeleton:
            if not (0 <= i < self.a and 0 <= j < self.b):
                raise FamilySpecError(f"skeleton edge ({i}, {j}) out of range")

        skeleton_graph = Graph.from_edges(self.a + self.b, self.skeleton_edges())
        if not skeleton_graph.is_connected():
            raise FamilySpecError("bipartite skeleton must be connected")
        for j in self.exceptional():
            if skeleton_graph.degree(self.a + j) < 2:
                raise FamilySpecError(
                    f"exceptional V-vertex {j} needs >= 2 neighbors in U"
                )

    def skeleton_edges(self) -> List[Edge]:
        return [(i, self.a + j) for i, j in self.skeleton]

    def exceptional(self) -> List[int]:
        return [j for j, r in enumerate(self.triangles) if r == 0]

    def realize(self) -> Graph:
        return realize_cameron_walker(self)

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "CameronWalkerSpec":
        _expect_args(cls.family, args, 5, "A B SKELETON LEGS TRIANGLES")
        skeleton = []
        for pair in args[2].split(","):
            try:
                i, j = pair.split("-")
                skeleton.append((int(i), int(j)))
            except ValueError as e:
                raise FamilySpecError(f"skeleton edges look like 0-0,1-0; got {pair!r}") from e
        return cls(
            a=parse_int(args[0], "a"),
            b=parse_int(args[1], "b"),
            skeleton=skeleton,
            legs=parse_int_list(args[3]),
            triangles=parse_int_list(args[4]),
        )


def realize_cameron_walker(spec: CameronWalkerSpec) -> Graph:
    """
    U-vertices are 0..a-1 and V-vertices a..a+b-1. Then come the leaves of
    each U-vertex in order, then the triangle pairs of each V-vertex.
    """
    edges = spec.skeleton_edges()
    nxt = spec.a + spec.b
    for i, q in enumerate(spec.legs):
        for _ in range(q):
            edges.append((i, nxt))
            nxt += 1
    for j, r in enumerate(spec.triangles):
        v = spec.a + j
        for _ in range(r):
            edges.extend([(v, nxt), (v, nxt + 1), (nxt, nxt + 1)])
            nxt += 2
    return Graph.from_edges(nxt, edges)


def edge_draw(seed: int, i: int, j: int) -> float:
    """Uniform draw for the pair (i, j), independent of every other pair"""
    bit_generator = np.random.Philox(np.random.SeedSequence(seed, spawn_key=(i, j)))
    return float(np.random.Generator(bit_generator).random())


class RandomGnpSpec(FamilySpec):
    """Erdos-Renyi G(n, p) keyed by (seed, i, j)"""

    family: ClassVar[str] = "gnp"
    n: int
    p: Rational
    seed: int = Field(default=0)

    def validate_spec(self) -> None:
        if self.n < 0:
            raise FamilySpecError(f"gnp needs n >= 0, got {self.n}")
        if not 0 < self.p < 1:
            raise FamilySpecError(f"gnp needs 0 < p < 1, got {self.p}")
        if self.seed < 0:
            raise FamilySpecError(f"seed must be >= 0, got {self.seed}")

    def realize(self) -> Graph:
        threshold = float(self.p)
        edges = [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if edge_draw(self.seed, i, j) < threshold
        ]
        return Graph.from_edges(self.n, edges)

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "RandomGnpSpec":
        _expect_args(cls.family, args, 3, "N P SEED")
        try:
            p = Fraction(args[1])
        except (ValueError, ZeroDivisionError) as e:
            raise FamilySpecError(f"p must be a rational such as 1/2, got {args[1]!r}") from e
        return cls(n=parse_int(args[0], "n"), p=p, seed=parse_int(args[2], "seed"))


class StarSpec(FamilySpec):
    """K_{1,n} with center 0"""

    family: ClassVar[str] = "star"
    n: int

    def validate_spec(self) -> None:
        if self.n < 1:
            raise FamilySpecError(f"star needs n >= 1 leaves, got {self.n}")

    def realize(self) -> Graph:
        return Graph.from_edges(self.n + 1, [(0, i) for i in range(1, self.n + 1)])

    @classmethod
    def from_args(cls, args: Sequence[str]) -> "StarSpec":
        _expect_args(cls.family, args, 1, "N")
        return cls(n=parse_int(args[0], "n"))


BUILTIN_FAMILIES = (
    PathSpec,
    CycleSpec,
    CompleteMultipartiteSpec,
    CirculantSpec,
    CaterpillarSpec,
    BigStarSpec,
    CameronWalkerSpec,
    RandomGnpSpec,
    StarSpec,
)


def generate_family(spec: FamilySpec) -> Graph:
    """
    Realize a family spec.

    Raises:
        FamilySpecError: If the parameters violate the family invariants
    """
    g = spec.build()
    logger.debug(
        f"Generated {spec.family} with {g.n} vertices, {g.m} edges, "
        f"{len(connected_components(g))} component(s)"
    )
    return g
