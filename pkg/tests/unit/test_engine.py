from concurrent.futures import ThreadPoolExecutor

import pytest

from power_graph_coloring.config import Limits
from power_graph_coloring.engine import RANDOM_PRODUCT_MAX_SIZE, PowerGraphEngine
from power_graph_coloring.exceptions import ParameterOutOfRange
from power_graph_coloring.graph.power_graph import build_power_graph
from power_graph_coloring.models.family import FamilyKind, FamilySpec
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.models.report import Verdict
from power_graph_coloring.models.window import Window
from power_graph_coloring.symbolic.families import ProductFamily


@pytest.fixture
def engine(limits: Limits) -> PowerGraphEngine:
    return PowerGraphEngine(limits=limits)


def test_analyze_z12(engine: PowerGraphEngine, z12: Magma) -> None:
    report = engine.analyze(z12)
    assert report.ok
    assert report.power_associative
    assert report.chromatic.exact == 12
    assert report.max_clique_size == 12
    assert report.palette_size == 12
    assert report.palette_bound == 12
    assert [e.color for e in report.elements[:2]] == ["A(1,1)", "A(12,1)"]
    assert report.elements[1].out_degree == 11


def test_analyze_rejects_non_power_associative(engine: PowerGraphEngine, counterexample: Magma) -> None:
    report = engine.analyze(counterexample)
    assert not report.ok
    assert report.power_associativity_witness == (0, 2, 2)
    assert report.claims[0].verdict == Verdict.FAIL
    assert all(c.verdict == Verdict.SKIPPED for c in report.claims[1:])
    assert report.elements == []


def test_chromatic_summary_falls_back_to_bounds(z5: Magma) -> None:
    engine = PowerGraphEngine(limits=Limits(exact_chi_limit=4))
    summary, clique_size = engine.chromatic_summary(build_power_graph(z5))
    assert summary.exact is None
    assert (summary.lower, summary.upper, clique_size) == (5, 5, 5)
    assert "exact limit" in summary.skipped_reason
    report = engine.analyze(z5)
    assert report.ok
    verdicts = {c.claim: c.verdict for c in report.claims}
    assert verdicts["palette_vs_chi"] == Verdict.SKIPPED


def test_load_uses_magma_size_limit(limits: Limits) -> None:
    engine = PowerGraphEngine(limits=limits.model_copy(update={"max_magma_size": 10}))
    assert engine.load("cyclic(10)").size == 10
    with pytest.raises(ParameterOutOfRange):
        engine.load("cyclic(11)")


def test_default_corpus(engine: PowerGraphEngine) -> None:
    corpus = engine.default_corpus()
    assert corpus[0] == FamilySpec.cyclic(1)
    assert FamilySpec.quaternion8() in corpus
    assert FamilySpec.monogenic(8, 8) in corpus
    assert sum(spec.kind == FamilyKind.PRODUCT for spec in corpus) == 10
    assert all(spec.check() for spec in corpus)


def test_random_products_are_seeded(limits: Limits) -> None:
    first = PowerGraphEngine(limits=limits).random_products(10)
    second = PowerGraphEngine(limits=limits).random_products(10)
    assert first == second
    assert len(set(first)) == 10
    assert all(spec.size <= RANDOM_PRODUCT_MAX_SIZE for spec in first)
    other = PowerGraphEngine(limits=limits.model_copy(update={"corpus_seed": 7})).random_products(10)
    assert other != first


def test_verify_corpus_keeps_order(limits: Limits, mocker) -> None:
    specs = [FamilySpec.cyclic(4), FamilySpec.monogenic(3, 2), FamilySpec.dihedral(3)]
    mocker.patch("power_graph_coloring.engine.ProcessPoolExecutor", ThreadPoolExecutor)
    parallel = PowerGraphEngine(limits=limits, max_workers=2).verify_corpus(specs)
    serial = PowerGraphEngine(limits=limits, max_workers=1).verify_corpus(specs)
    assert parallel.ok and serial.ok
    assert [r.magma.metadata for r in parallel.reports] == ["cyclic(4)", "monogenic(3,2)", "dihedral(3)"]
    assert parallel == serial


def test_analyze_window(engine: PowerGraphEngine) -> None:
    report = engine.analyze_window(ProductFamily(2), Window(w=4, e=8))
    assert report.ok
    assert report.family == "ZxZ2"
    assert report.n_elements == 18
    assert report.n_infinite == 16
    assert report.n_components == 4
    assert report.coloring["(1,1)"] == "C(2,2)"
    # (4,1) is only a power of itself inside W=4
    assert [split.component_key for split in report.splits] == ["+", "-"]
    assert [len(piece) for piece in report.splits[0].pieces] == [7, 1]
    assert report.splits[0].pieces[1] == ["(4,1)"]


def test_analyze_window_rejects_bad_bounds(engine: PowerGraphEngine) -> None:
    with pytest.raises(ParameterOutOfRange):
        engine.analyze_window(ProductFamily(2), Window(w=0, e=8))
