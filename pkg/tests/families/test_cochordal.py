import networkx as nx
from hypothesis import HealthCheck, given, settings

from app.services.families.chordal import (
    chordal_maximal_cliques,
    clique_tree,
    is_chordal,
    lex_bfs,
    perfect_elimination_order,
)
from app.services.families.cochordal import classify_cochordal, cochordal_weights
from app.services.graph.core import Graph, complement
from app.services.graph.generators.specs import CompleteMultipartiteSpec
from app.services.level_decide import validate_weights
from app.services.mis import enumerate_max_independent_sets
from tests.helpers import cycle, graphs, path, to_nx

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


class TestChordal:
    def test_lex_bfs_visits_everything(self):
        assert sorted(lex_bfs(cycle(6))) == list(range(6))

    def test_cycles(self):
        assert is_chordal(cycle(3))
        assert not is_chordal(cycle(4))
        assert perfect_elimination_order(cycle(5)) is None

    def test_trees_are_chordal(self):
        assert is_chordal(path(7))

    def test_cliques_of_a_fan(self):
        # triangles 0-1-2 and 1-2-3 sharing the edge 1-2
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        cliques = chordal_maximal_cliques(g, perfect_elimination_order(g))
        assert cliques == [(0, 1, 2), (1, 2, 3)]
        tree = clique_tree(cliques)
        assert tree.order == (0, 1)
        assert tree.parent == (None, 0)

    @PROPERTY_SETTINGS
    @given(g=graphs(min_n=1, max_n=10))
    def test_matches_networkx(self, g):
        assert is_chordal(g) == nx.is_chordal(to_nx(g))

    @PROPERTY_SETTINGS
    @given(g=graphs(min_n=1, max_n=10))
    def test_clique_tree_has_running_intersections(self, g):
        peo = perfect_elimination_order(g)
        if peo is None:
            return
        cliques = chordal_maximal_cliques(g, peo)
        assert cliques == sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(g)))
        tree = clique_tree(cliques)
        seen = set()
        for index in tree.order:
            clique = set(tree.cliques[index])
            parent = tree.parent[index]
            branch = set(tree.cliques[parent]) if parent is not None else set()
            assert clique & seen <= branch
            seen |= clique


class TestCochordalWeights:
    def test_two_facets(self):
        # the only edge is 0-3, so the facets are {0,1,2} and {1,2,3}
        g = Graph.from_edges(4, [(0, 3)])
        w = cochordal_weights(g)
        assert w is not None
        assert validate_weights(g, list(w.weights)) == w
        assert w.independence_weight == 6

    def test_k23(self):
        g = CompleteMultipartiteSpec(part_sizes=[2, 3]).build()
        w = cochordal_weights(g)
        assert validate_weights(g, list(w.weights)) == w

    def test_not_cochordal(self):
        assert cochordal_weights(path(5)) is None
        assert classify_cochordal(cycle(6)) is None

    def test_empty_graph(self):
        assert cochordal_weights(Graph.empty(0)).weights == ()

    def test_complement_of_a_tree(self):
        g = complement(Graph.from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]))
        verdict = classify_cochordal(g)
        assert verdict.levelable
        assert verdict.family == "cochordal"

    @PROPERTY_SETTINGS
    @given(g=graphs(min_n=1, max_n=9))
    def test_weights_whenever_complement_is_chordal(self, g):
        w = cochordal_weights(g)
        assert (w is not None) == nx.is_chordal(nx.complement(to_nx(g)))
        if w is not None:
            family = enumerate_max_independent_sets(g)
            assert all(v >= 1 for v in w.weights)
            assert {sum(w.weights[v] for v in s) for s in family} == {w.independence_weight}
