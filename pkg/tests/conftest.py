import pytest

from power_graph_coloring.algebra.generators import generate
from power_graph_coloring.algebra.magma import build_magma
from power_graph_coloring.config import Limits
from power_graph_coloring.graph.power_graph import build_power_graph
from power_graph_coloring.models.family import FamilySpec
from power_graph_coloring.models.graph import PowerGraph, bit
from power_graph_coloring.models.magma import Magma


@pytest.fixture
def z2() -> Magma:
    return generate(FamilySpec.cyclic(2))


@pytest.fixture
def z5() -> Magma:
    return generate(FamilySpec.cyclic(5))


@pytest.fixture
def z6() -> Magma:
    return generate(FamilySpec.cyclic(6))


@pytest.fixture
def z12() -> Magma:
    return generate(FamilySpec.cyclic(12))


@pytest.fixture
def m32() -> Magma:
    """Monogenic semigroup of index 3 and period 2; element i is g^(i+1)."""
    return generate(FamilySpec.monogenic(3, 2))


@pytest.fixture
def m32_graph(m32: Magma) -> PowerGraph:
    return build_power_graph(m32)


@pytest.fixture
def counterexample() -> Magma:
    # g·g = h, h·h = g, g·h = g, h·g = h
    return build_magma([[1, 0], [1, 0]], names=["g", "h"], metadata="counterexample")


@pytest.fixture
def limits() -> Limits:
    return Limits.from_env(environ={})


def edgeless(n: int) -> PowerGraph:
    return PowerGraph(n_vertices=n, undirected=(0,) * n, directed=tuple(bit(v) for v in range(n)))


@pytest.fixture
def edgeless_graph():
    return edgeless
