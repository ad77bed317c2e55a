import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings

from app.errors import EnumerationCapExceeded
from app.services.graph.core import Graph, complement
from app.services.graph.generators.specs import CompleteMultipartiteSpec
from app.services.mis import (
    choose_pivot,
    enumerate_max_independent_sets,
    independence_number,
    is_well_covered,
    minimal_vertex_covers,
)
from tests.helpers import brute_force_mis, cycle, graphs, path, to_nx

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


class TestEnumeration:
    def test_p5(self):
        family = enumerate_max_independent_sets(path(5))
        assert family.sets == ((0, 2, 4), (0, 3), (1, 3), (1, 4))
        assert family.source_n == 5

    def test_c6(self):
        family = enumerate_max_independent_sets(cycle(6))
        assert set(family.sets) == {(0, 2, 4), (1, 3, 5), (0, 3), (1, 4), (2, 5)}
        assert list(family.sets) == sorted(family.sets)

    def test_k3(self):
        assert enumerate_max_independent_sets(Graph.complete(3)).sets == ((0,), (1,), (2,))

    def test_empty_graph_has_the_empty_set(self):
        assert enumerate_max_independent_sets(Graph.empty(0)).sets == ((),)

    def test_edgeless(self):
        assert enumerate_max_independent_sets(Graph.empty(3)).sets == ((0, 1, 2),)

    @pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (4, 4)])
    def test_complete_bipartite_has_two(self, a, b):
        g = CompleteMultipartiteSpec(part_sizes=[a, b]).build()
        assert len(enumerate_max_independent_sets(g)) == 2

    @pytest.mark.parametrize("d", [1, 2, 5, 8])
    def test_complete_graph_has_d(self, d):
        assert len(enumerate_max_independent_sets(Graph.complete(d))) == d

    def test_pivot_has_most_candidate_neighbors(self):
        # complement: path 0 - 1 - 2
        assert choose_pivot(0b111, [0b010, 0b101, 0b010]) == 1
        assert choose_pivot(0b101, [0b010, 0b101, 0b010]) == 0

    def test_pivot_ties_go_to_smallest_index(self):
        # complement: edges 1 - 2 and 3 - 4
        co_nbrs = [0, 0b00100, 0b00010, 0b10000, 0b01000]
        assert choose_pivot(0b11110, co_nbrs) == 1
        assert choose_pivot(0b11000, co_nbrs) == 3

    def test_cap_is_an_error(self):
        # 3^3 maximal independent sets in three disjoint triangles
        g = Graph.from_edges(
            9, [(3 * k + i, 3 * k + j) for k in range(3) for i in range(3) for j in range(i + 1, 3)]
        )
        assert len(enumerate_max_independent_sets(g)) == 27
        with pytest.raises(EnumerationCapExceeded):
            enumerate_max_independent_sets(g, max_sets=26)


class TestDerivedQuantities:
    def test_independence_numbers(self):
        assert independence_number(path(5)) == 3
        assert independence_number(Graph.complete(6)) == 1
        assert independence_number(complement(cycle(6))) == 2
        assert independence_number(Graph.empty(0)) == 0

    def test_well_covered(self):
        assert is_well_covered(cycle(7))
        assert not is_well_covered(path(5))
        assert is_well_covered(path(4))

    def test_minimal_vertex_covers(self):
        assert minimal_vertex_covers(path(5)) == [(0, 2, 3), (0, 2, 4), (1, 2, 4), (1, 3)]


class TestEnumerationOracles:
    @PROPERTY_SETTINGS
    @given(g=graphs(max_n=10))
    def test_matches_brute_force(self, g):
        assert list(enumerate_max_independent_sets(g).sets) == brute_force_mis(g)

    @PROPERTY_SETTINGS
    @given(g=graphs(min_n=1, max_n=12))
    def test_matches_cliques_of_complement(self, g):
        expected = sorted(
            tuple(sorted(c)) for c in nx.find_cliques(nx.complement(to_nx(g)))
        )
        assert list(enumerate_max_independent_sets(g).sets) == expected

    @pytest.mark.slow
    def test_random_corpus_against_brute_force(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(0, 10)
            p = rng.random()
            edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
            g = Graph.from_edges(n, edges)
            family = enumerate_max_independent_sets(g)
            assert list(family.sets) == brute_force_mis(g)
            for s in family:
                assert g.is_maximal_independent(s)
