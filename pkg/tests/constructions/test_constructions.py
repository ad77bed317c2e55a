import random
from collections import Counter

import pytest

from app.errors import ConstructionError, UnequalSums
from app.models import LevelableCertificate, NotLevelableCertificate
from app.services.constructions import (
    attach_graphs,
    attached_graph,
    duplicate_vertex,
    expand_vertex,
    realize_weight_profile,
    replicate_weights,
)
from app.services.graph.core import Graph
from app.services.level_decide import WeightFunction, decide_levelable, validate_weights
from tests.helpers import cycle, path

P3_WEIGHTS = WeightFunction(weights=(1, 2, 1), independence_weight=2)
C5_WEIGHTS = WeightFunction(weights=(1,) * 5, independence_weight=2)


class TestDuplicateAndExpand:
    def test_duplicate_end_of_p3(self):
        g, w = duplicate_vertex(path(3), 0, P3_WEIGHTS)
        assert g.edges == ((0, 1), (1, 2), (1, 3))
        assert w.weights == (1, 4, 2, 1)
        assert w.independence_weight == 4

    def test_expand_middle_of_p3(self):
        g, w = expand_vertex(path(3), 1, P3_WEIGHTS)
        assert g.adj[3] == (0, 1, 2)
        assert w.weights == (1, 2, 1, 2)
        assert w.independence_weight == 2

    def test_iterated_duplication_of_c5(self):
        g, w = cycle(5), C5_WEIGHTS
        for x in (0, 2, 5):
            g, w = duplicate_vertex(g, x, w)
        assert g.n == 8
        assert w.independence_weight == 16
        assert isinstance(decide_levelable(g), LevelableCertificate)

    def test_rejects_invalid_weights(self):
        with pytest.raises(ConstructionError) as exc:
            duplicate_vertex(path(5), 0, WeightFunction(weights=(1,) * 5, independence_weight=3))
        assert isinstance(exc.value.cause, UnequalSums)

    def test_rejects_wrong_independence_weight(self):
        with pytest.raises(ConstructionError):
            expand_vertex(path(3), 0, WeightFunction(weights=(1, 2, 1), independence_weight=3))

    def test_rejects_vertex_out_of_range(self):
        with pytest.raises(ConstructionError):
            expand_vertex(path(3), 3, P3_WEIGHTS)


class TestAttach:
    def test_corona_of_p3(self):
        g = attached_graph(path(3), [Graph.empty(1)] * 3)
        assert g.n == 6
        assert g.edges == ((0, 1), (0, 3), (1, 2), (1, 4), (2, 5))

    def test_weights_follow_attached_graphs(self):
        k2 = (Graph.complete(2), WeightFunction(weights=(1, 1), independence_weight=1))
        p3 = (path(3), P3_WEIGHTS)
        g, w = attach_graphs(path(2), [k2, p3])
        assert g.n == 7
        assert w.weights == (1, 2, 1, 1, 1, 2, 1)
        assert w.independence_weight == 3

    def test_non_levelable_part_spoils_the_result(self):
        g = attached_graph(path(2), [path(5), Graph.empty(1)])
        assert isinstance(decide_levelable(g), NotLevelableCertificate)

    def test_arity_mismatch(self):
        with pytest.raises(ConstructionError):
            attached_graph(path(3), [Graph.empty(1)] * 2)

    def test_empty_attached_graph(self):
        with pytest.raises(ConstructionError):
            attached_graph(path(2), [Graph.empty(1), Graph.empty(0)])


class TestWeightProfiles:
    def test_pendant_mode(self):
        g, w = realize_weight_profile([3, 1, 2])
        assert g.is_connected()
        assert w.weights[:3] == (3, 1, 2)
        assert set(w.weights[3:]) == {1}
        assert w.independence_weight == 6

    def test_clique_mode(self):
        g, w = realize_weight_profile([3, 1], repeats=[2, 3])
        counts = Counter(w.weights)
        assert counts[3] == 2
        assert counts[1] == 3
        assert g.n == 5

    def test_single_entry(self):
        g, w = realize_weight_profile([4])
        assert g.n == 5
        assert w.weights == (4, 1, 1, 1, 1)

    @pytest.mark.parametrize(
        "weights, repeats", [([], None), ([2, 0], None), ([2, 2], [2]), ([2, 2], [2, 1])]
    )
    def test_bad_profiles(self, weights, repeats):
        with pytest.raises(ConstructionError):
            realize_weight_profile(weights, repeats)

    def test_replicate(self):
        g, w = replicate_weights(path(3), P3_WEIGHTS, [1, 3, 1])
        assert g.n == 5
        assert w.weights == (1, 2, 1, 2, 2)
        assert validate_weights(g, list(w.weights)) == w

    def test_replicate_length_mismatch(self):
        with pytest.raises(ConstructionError):
            replicate_weights(path(3), P3_WEIGHTS, [1, 1])


ATTACHABLE = [
    path(2), path(3), path(4), cycle(3), cycle(4), cycle(5),
    Graph.complete(3), Graph.empty(1), Graph.empty(2),
]


def _with_decided_weights(h: Graph):
    certificate = decide_levelable(h)
    return h, WeightFunction(
        weights=tuple(certificate.weights), independence_weight=certificate.independence_weight
    )


def _assert_levelable(g: Graph, w: WeightFunction) -> None:
    assert validate_weights(g, list(w.weights)) == w
    assert isinstance(decide_levelable(g), LevelableCertificate)


@pytest.mark.slow
@pytest.mark.parametrize("op", [duplicate_vertex, expand_vertex])
def test_random_vertex_operations_stay_levelable(op):
    rng = random.Random(5)
    g, w = cycle(5), C5_WEIGHTS
    for _ in range(100):
        if g.n >= 12:
            g, w = cycle(5), C5_WEIGHTS
        g, w = op(g, rng.randrange(g.n), w)
        _assert_levelable(g, w)


@pytest.mark.slow
def test_random_attachments_stay_levelable():
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(1, 3)
        edges = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < 0.5]
        base = Graph.from_edges(k, edges)
        parts = [_with_decided_weights(rng.choice(ATTACHABLE)) for _ in range(k)]
        _assert_levelable(*attach_graphs(base, parts))


@pytest.mark.slow
def test_random_profiles_stay_levelable():
    rng = random.Random(13)
    for _ in range(100):
        weights = [rng.randint(1, 3) for _ in range(rng.randint(1, 4))]
        repeats = None if rng.random() < 0.5 else [rng.randint(2, 3) for _ in weights]
        g, w = realize_weight_profile(weights, repeats)
        _assert_levelable(g, w)
        assert w.weights[: len(weights)] == tuple(weights)
