import pytest

from gwlocalize.engine.cache import EnumerationCache
from gwlocalize.engine.exactnum import sample_weights
from gwlocalize.engine.graphs import Branch, DashedVertex, RefinedTree


@pytest.fixture
def weights():
    return sample_weights(4, 0)


@pytest.fixture
def line_weights():
    return sample_weights(1, 7)


@pytest.fixture
def mixed_tree():
    """
    Three thick edges of degree 2 to label 1 below a root labelled 0 with
    mark 2, two further branches and two contracted vertices.
    """
    return RefinedTree.of(
        root_mu=0,
        root_tails=(2,),
        thick=[
            Branch.of(2, 1),
            Branch.of(2, 1, children=[Branch.of(3, 2), Branch.of(1, 3)]),
            Branch.of(2, 1, tails=(1,)),
        ],
        others=[Branch.of(2, 2), Branch.of(3, 1)],
        dashed=[
            DashedVertex.of(children=[Branch.of(2, 1), Branch.of(3, 2, children=[Branch.of(1, 1)])]),
            DashedVertex.of(tails=(3,), children=[Branch.of(1, 1)]),
        ],
    )


@pytest.fixture
def single_thick_edge():
    return RefinedTree.of(root_mu=0, thick=[Branch.of(2, 1)])


@pytest.fixture
def cache(tmp_path):
    return EnumerationCache(tmp_path / "cache")
