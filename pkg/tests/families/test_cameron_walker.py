import pytest

from app.errors import FamilySpecError
from app.models import LevelableCertificate
from app.services.families.cameron_walker import classify_cameron_walker
from app.services.graph.generators.specs import CameronWalkerSpec
from app.services.level_decide import decide_levelable

FIGURE_CW = CameronWalkerSpec(
    a=3, b=2, skeleton=[(0, 0), (1, 0), (1, 1), (2, 1)], legs=[1, 1, 1], triangles=[1, 0]
)


def test_exceptional_vertex_is_not_levelable():
    verdict = classify_cameron_walker(FIGURE_CW)
    assert not verdict.levelable
    assert verdict.weights is None
    assert not isinstance(decide_levelable(FIGURE_CW.build()), LevelableCertificate)


def test_single_skeleton_edge():
    spec = CameronWalkerSpec(a=1, b=1, skeleton=[(0, 0)], legs=[2], triangles=[1])
    verdict = classify_cameron_walker(spec)
    assert verdict.levelable
    assert verdict.weights.weights == (2, 1, 1, 1, 1, 1)
    assert verdict.weights.independence_weight == 3


@pytest.mark.parametrize(
    "spec",
    [
        CameronWalkerSpec(a=2, b=1, skeleton=[(0, 0), (1, 0)], legs=[1, 3], triangles=[2]),
        CameronWalkerSpec(
            a=2, b=2, skeleton=[(0, 0), (0, 1), (1, 1)], legs=[2, 1], triangles=[1, 1]
        ),
        CameronWalkerSpec(a=2, b=1, skeleton=[(0, 0), (1, 0)], legs=[1, 1], triangles=[0]),
        CameronWalkerSpec(
            a=3, b=2, skeleton=[(0, 0), (1, 0), (1, 1), (2, 1)], legs=[2, 1, 1], triangles=[0, 0]
        ),
    ],
)
def test_agrees_with_lp(spec):
    decided = isinstance(decide_levelable(spec.build()), LevelableCertificate)
    assert classify_cameron_walker(spec).levelable == decided


def test_exceptional_vertex_needs_two_neighbors():
    spec = CameronWalkerSpec(a=1, b=1, skeleton=[(0, 0)], legs=[1], triangles=[0])
    with pytest.raises(FamilySpecError):
        classify_cameron_walker(spec)
