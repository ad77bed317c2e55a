import pytest

from app.errors import FamilySpecError
from app.services.families.obstructions import cycle_obstruction, path_obstruction
from app.services.level_decide import is_obstruction
from app.services.mis import enumerate_max_independent_sets
from tests.helpers import cycle, path


class TestPathObstructions:
    def test_p5(self):
        quad = path_obstruction(5)
        assert quad.as_lists() == [[0, 2, 4], [1, 3], [0, 3], [1, 4]]

    def test_p6(self):
        quad = path_obstruction(6)
        assert quad.as_lists() == [[0, 2, 4], [1, 3, 5], [0, 3, 5], [1, 4]]

    @pytest.mark.parametrize("n", range(5, 26))
    def test_is_an_obstruction(self, n):
        family = enumerate_max_independent_sets(path(n))
        assert is_obstruction(family, path_obstruction(n))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_levelable_paths_have_none(self, n):
        with pytest.raises(FamilySpecError):
            path_obstruction(n)


class TestCycleObstructions:
    def test_c6(self):
        assert cycle_obstruction(6).as_lists() == [[0, 2, 4], [1, 3, 5], [0, 3], [1, 4]]

    @pytest.mark.parametrize("n", [6, *range(8, 26)])
    def test_is_an_obstruction(self, n):
        family = enumerate_max_independent_sets(cycle(n))
        assert is_obstruction(family, cycle_obstruction(n))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 7])
    def test_levelable_cycles_have_none(self, n):
        with pytest.raises(FamilySpecError):
            cycle_obstruction(n)
