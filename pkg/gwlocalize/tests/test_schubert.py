import pytest

from gwlocalize.engine.exceptions import InvalidInput
from gwlocalize.engine.schubert import grassmannian_lines_degree, lines_on_hypersurface


class TestGrassmannian:
    def test_degrees(self):
        assert grassmannian_lines_degree(4, 0, 3) == 2
        assert grassmannian_lines_degree(6, 0, 4) == 5
        assert grassmannian_lines_degree(0, 2, 3) == 1
        assert grassmannian_lines_degree(1, 0, 3) == 0


class TestLines:
    def test_cubic_surface(self):
        assert lines_on_hypersurface(3, 3) == 27

    def test_quintic_threefold(self):
        assert lines_on_hypersurface(4, 5) == 2875

    def test_infinitely_many_lines(self):
        with pytest.raises(InvalidInput):
            lines_on_hypersurface(3, 2)
