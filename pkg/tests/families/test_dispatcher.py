import networkx as nx
import pytest

from app.config import settings
from app.models import FamilyVerdictResponse, LevelableCertificate
from app.services.families import FamilyTags, classify, classify_spec
from app.services.families.dispatcher import LEVELABLE_CYCLES, cycle_order, path_order
from app.services.graph.core import Graph, complement, disjoint_union
from app.services.graph.generators.specs import (
    BigStarSpec,
    CameronWalkerSpec,
    CaterpillarSpec,
    CirculantSpec,
    CycleSpec,
    PathSpec,
)
from app.services.level_decide import ObstructionQuadruple, decide_levelable, is_obstruction
from app.services.mis import enumerate_max_independent_sets
from tests.helpers import cycle, from_nx, path


def _witness_holds(g, witness) -> bool:
    quad = ObstructionQuadruple(*(tuple(s) for s in witness))
    return is_obstruction(enumerate_max_independent_sets(g), quad)


class TestClassify:
    def test_c6(self):
        verdict = classify(cycle(6))
        assert verdict.family == FamilyTags.CYCLE
        assert not verdict.levelable
        assert _witness_holds(cycle(6), verdict.witness)

    def test_p4(self):
        verdict = classify(path(4))
        assert verdict.family == FamilyTags.PATH
        assert verdict.levelable
        assert verdict.weights.weights == (1, 1, 1, 1)

    def test_relabeled_cycle_witness(self):
        # C8 visited as 0, 3, 6, 1, 4, 7, 2, 5
        order = [(3 * i) % 8 for i in range(8)]
        g = Graph.from_edges(8, [(order[i], order[(i + 1) % 8]) for i in range(8)])
        assert cycle_order(g) is not None
        verdict = classify(g)
        assert verdict.family == FamilyTags.CYCLE
        assert _witness_holds(g, verdict.witness)

    def test_relabeled_path_witness(self):
        g = Graph.from_edges(6, [(4, 1), (1, 5), (5, 0), (0, 2), (2, 3)])
        assert path_order(g) == [3, 2, 0, 5, 1, 4]
        verdict = classify(g)
        assert verdict.family == FamilyTags.PATH
        assert _witness_holds(g, verdict.witness)

    def test_single_vertex_is_a_tree(self):
        assert classify(Graph.empty(1)).family == FamilyTags.TREE

    def test_recognizer_order(self):
        assert classify(Graph.complete(4)).family == FamilyTags.COMPLETE_MULTIPARTITE
        assert classify(complement(cycle(6))).family == FamilyTags.ALPHA_LE2
        assert classify(Graph.from_edges(4, [(0, 3)])).family == FamilyTags.COCHORDAL
        spider = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
        assert classify(spider).family == FamilyTags.TREE

    def test_petersen_falls_back_to_lp(self):
        g = from_nx(nx.petersen_graph())
        verdict = classify(g)
        assert verdict.family == FamilyTags.GENERIC
        assert verdict.levelable == isinstance(decide_levelable(g), LevelableCertificate)

    def test_response_shape(self):
        response = classify(path(3)).to_response()
        assert isinstance(response, FamilyVerdictResponse)
        assert response.model_dump(mode="json") == {
            "family": "path",
            "levelable": True,
            "weights": [1, 2, 1],
            "independence_weight": 2,
            "citation": response.citation,
            "witness": None,
            "farkas_multipliers": None,
        }

    def test_generic_verdict_keeps_obstruction(self):
        g = disjoint_union(path(5), Graph.complete(3))
        verdict = classify(g)
        assert verdict.family == FamilyTags.GENERIC
        assert not verdict.levelable
        assert verdict.witness == [[0, 2, 4], [1, 3], [0, 3], [1, 4]]
        assert verdict.farkas_multipliers is None

    def test_generic_verdict_keeps_farkas_multipliers(self, monkeypatch):
        monkeypatch.setattr(settings, "obstruction_budget", 0)
        g = disjoint_union(path(5), Graph.complete(3))
        verdict = classify(g)
        assert verdict.family == FamilyTags.GENERIC
        assert verdict.witness is None
        certificate = decide_levelable(g, budget=0)
        assert verdict.farkas_multipliers == certificate.witness.farkas_multipliers
        assert any(verdict.farkas_multipliers)
        response = verdict.to_response().model_dump(mode="json")
        assert all(isinstance(y, str) for y in response["farkas_multipliers"])


class TestPathsAndCycles:
    @pytest.mark.parametrize("n", range(2, 26))
    def test_paths(self, n):
        verdict = classify_spec(PathSpec(n=n))
        assert verdict.levelable == (n in (2, 3, 4))

    @pytest.mark.parametrize("n", range(2, 26))
    def test_cycles(self, n):
        verdict = classify_spec(CycleSpec(n=n))
        assert verdict.levelable == (n in LEVELABLE_CYCLES)
        if not verdict.levelable:
            assert _witness_holds(cycle(n), verdict.witness)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 26))
    def test_lp_agrees(self, n):
        assert isinstance(decide_levelable(path(n)), LevelableCertificate) == (n <= 4)
        g = CycleSpec(n=n).build()
        assert isinstance(decide_levelable(g), LevelableCertificate) == (n in LEVELABLE_CYCLES)


class TestClassifySpec:
    def test_routes_to_family_classifiers(self):
        assert classify_spec(CaterpillarSpec(spine=2, legs=[1, 1])).family == FamilyTags.CATERPILLAR
        assert classify_spec(BigStarSpec(arms=[1, 2, 2])).family == FamilyTags.BIG_STAR
        cw = CameronWalkerSpec(a=1, b=1, skeleton=[(0, 0)], legs=[1], triangles=[1])
        assert classify_spec(cw).family == FamilyTags.CAMERON_WALKER

    def test_cubic_circulant(self):
        verdict = classify_spec(CirculantSpec(n=10, connection=[2, 5]))
        assert verdict.family == FamilyTags.CUBIC_CIRCULANT
        assert verdict.levelable

    def test_other_circulants_use_the_graph(self):
        verdict = classify_spec(CirculantSpec(n=10, connection=[1, 2]))
        assert verdict.family != FamilyTags.CUBIC_CIRCULANT
