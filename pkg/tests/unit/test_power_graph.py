import networkx as nx
from pytest_cases import parametrize_with_cases

import cases_magmas
from power_graph_coloring.algebra.magma import build_magma
from power_graph_coloring.graph.power_graph import build_power_graph, connected_components
from power_graph_coloring.models.graph import PowerGraph
from power_graph_coloring.models.magma import Magma


def to_networkx(graph: PowerGraph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.vertices)
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def test_z5_is_complete(z5: Magma) -> None:
    graph = build_power_graph(z5)
    assert len(graph.edges()) == 10
    assert all(graph.degree(v) == 4 for v in graph.vertices)


def test_trivial_magma_graph() -> None:
    graph = build_power_graph(build_magma([[0]]))
    assert graph.n_vertices == 1
    assert graph.edges() == []
    assert graph.directed == (1,)


def test_monogenic_edges(m32_graph: PowerGraph) -> None:
    assert m32_graph.edges() == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
    assert not m32_graph.adjacent(1, 2)
    assert m32_graph.arcs() == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
    assert m32_graph.is_power(2, 3) and m32_graph.is_power(3, 2) is False


def test_out_degrees(m32_graph: PowerGraph) -> None:
    assert [m32_graph.out_degree(v) for v in m32_graph.vertices] == [3, 1, 1, 0]


def test_components(z5: Magma, m32_graph: PowerGraph) -> None:
    assert connected_components(build_power_graph(z5)) == [[0, 1, 2, 3, 4]]
    assert connected_components(m32_graph, []) == []
    assert connected_components(m32_graph, [1, 2]) == [[1], [2]]


@parametrize_with_cases("magma", cases=cases_magmas)
def test_components_agree_with_networkx(magma: Magma) -> None:
    graph = build_power_graph(magma)
    nx_graph = to_networkx(graph)
    ours = connected_components(graph)
    theirs = sorted(sorted(c) for c in nx.connected_components(nx_graph))
    assert ours == theirs
    subset = [p.element for p in magma.profiles if not p.cyclic or p.order > 1]
    induced = sorted(sorted(c) for c in nx.connected_components(nx_graph.subgraph(subset)))
    assert connected_components(graph, subset) == induced


@parametrize_with_cases("magma", cases=cases_magmas)
def test_induced_edges_match_networkx(magma: Magma) -> None:
    graph = build_power_graph(magma)
    cyclic = [p.element for p in magma.profiles if p.cyclic]
    expected = sorted(tuple(sorted(e)) for e in to_networkx(graph).subgraph(cyclic).edges())
    assert sorted(graph.induced_edges(cyclic)) == expected
