"""End-to-end checks of the coloring theorem on the default corpus and the symbolic windows."""

from itertools import combinations

import pytest
from sympy import totient

from power_graph_coloring.algebra.generators import generate
from power_graph_coloring.algebra.magma import check_power_associativity, power
from power_graph_coloring.cli import run_cli
from power_graph_coloring.config import Limits
from power_graph_coloring.engine import PowerGraphEngine
from power_graph_coloring.formats.cayley import parse_magma, parse_magma_json, serialize_magma, serialize_magma_json
from power_graph_coloring.graph.coloring import (
    color_finite,
    cyclic_clique_decomposition,
    cyclic_orders,
    verify_proper_coloring,
)
from power_graph_coloring.graph.oracle import (
    brute_force_chromatic_number,
    chromatic_number,
    greedy_color,
    is_clique_union,
    max_clique,
)
from power_graph_coloring.graph.power_graph import build_power_graph
from power_graph_coloring.models.family import FamilySpec
from power_graph_coloring.models.graph import PowerGraph
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.models.window import Window
from power_graph_coloring.symbolic.families import (
    FreeMonogenicFamily,
    IntegerFamily,
    ProductFamily,
    SymbolicFamily,
)

ORACLE_LIMIT = 64


@pytest.fixture(scope="module")
def limits() -> Limits:
    return Limits.from_env(environ={})


@pytest.fixture(scope="module")
def corpus(limits: Limits) -> list[tuple[Magma, PowerGraph]]:
    engine = PowerGraphEngine(limits=limits)
    magmas = [generate(spec, limits.max_magma_size) for spec in engine.default_corpus()]
    return [(magma, build_power_graph(magma)) for magma in magmas]


@pytest.mark.slow
def test_corpus_coloring_is_proper(corpus: list[tuple[Magma, PowerGraph]]) -> None:
    for magma, graph in corpus:
        assert verify_proper_coloring(graph, color_finite(magma, graph)) == [], magma.metadata


@pytest.mark.slow
def test_cyclic_cliques_have_totient_size(corpus: list[tuple[Magma, PowerGraph]]) -> None:
    for magma, graph in corpus:
        for n in cyclic_orders(magma):
            members = [p.element for p in magma.profiles if p.cyclic and p.order == n]
            report = is_clique_union(graph, members, cyclic_clique_decomposition(magma, graph, n))
            assert report, (magma.metadata, n, report.witness)
            assert set(report.clique_sizes) == {int(totient(n))}, (magma.metadata, n)


@pytest.mark.slow
def test_equal_pre_periods_are_never_adjacent(corpus: list[tuple[Magma, PowerGraph]]) -> None:
    for magma, graph in corpus:
        tails = [p for p in magma.profiles if not p.cyclic]
        for x, y in combinations(tails, 2):
            if x.pre_period == y.pre_period:
                assert not graph.undirected[x.element] >> y.element & 1, (magma.metadata, x.element, y.element)


@pytest.mark.slow
def test_tail_powers_become_cyclic(corpus: list[tuple[Magma, PowerGraph]]) -> None:
    for magma, _ in corpus:
        for profile in magma.profiles:
            if profile.cyclic:
                continue
            g, p, n = profile.element, profile.pre_period, profile.order
            for q in range(p + 1, n + 1):
                h = power(magma, g, q)
                assert magma.profiles[h].cyclic, (magma.metadata, g, q)
                assert power(magma, h, n - p + 1) == h, (magma.metadata, g, q)


@pytest.mark.slow
def test_oracles_agree(corpus: list[tuple[Magma, PowerGraph]], limits: Limits) -> None:
    for magma, graph in corpus:
        if graph.n_vertices > ORACLE_LIMIT:
            continue
        chi = chromatic_number(graph, ORACLE_LIMIT)
        assert len(max_clique(graph)) <= chi <= greedy_color(graph).palette_size, magma.metadata
        # power graphs are perfect
        assert chi == len(max_clique(graph)), magma.metadata
        assert color_finite(magma, graph).palette_size >= chi, magma.metadata
        if graph.n_vertices <= limits.brute_force_limit:
            assert brute_force_chromatic_number(graph, limits.brute_force_limit) == chi, magma.metadata


@pytest.mark.slow
def test_corpus_survives_serialization(corpus: list[tuple[Magma, PowerGraph]]) -> None:
    for magma, _ in corpus:
        assert parse_magma(serialize_magma(magma)) == magma, magma.metadata
        assert parse_magma_json(serialize_magma_json(magma)) == magma, magma.metadata


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_cyclic_groups_are_complete(p: int) -> None:
    graph = build_power_graph(generate(FamilySpec.cyclic(p)))
    assert len(graph.edges()) == p * (p - 1) // 2
    assert chromatic_number(graph) == p
    if p <= 7:
        assert brute_force_chromatic_number(graph) == p


@pytest.mark.slow
def test_corpus_verification_passes(limits: Limits) -> None:
    report = PowerGraphEngine(limits=limits).verify_corpus()
    assert len(report.reports) == 157
    assert report.failures == []


@pytest.mark.slow
@pytest.mark.parametrize(
    "family",
    [IntegerFamily(), *(ProductFamily(k) for k in range(2, 13)), FreeMonogenicFamily()],
    ids=str,
)
def test_window_claims(family: SymbolicFamily, limits: Limits) -> None:
    report = PowerGraphEngine(limits=limits).analyze_window(family, Window(w=50, e=24))
    assert report.ok, [c for c in report.claims if c.detail]


def test_counterexample_is_rejected(tmp_path) -> None:
    source = tmp_path / "counterexample.txt"
    source.write_text("2\n1 0\n1 0\n# name: g\n# name: h\n", encoding="utf-8")
    magma = PowerGraphEngine(limits=Limits.from_env(environ={})).load(str(source))
    check = check_power_associativity(magma)
    assert not check
    assert check.witness == (0, 2, 2)
    assert run_cli(["analyze", str(source)]) == 1
