from concurrent.futures import ProcessPoolExecutor

import numpy as np

from power_graph_coloring.algebra.generators import generate, load_source
from power_graph_coloring.algebra.magma import check_power_associativity
from power_graph_coloring.config import Limits
from power_graph_coloring.graph.coloring import color_finite, color_palette_bound
from power_graph_coloring.graph.oracle import exact_coloring, greedy_color, max_clique
from power_graph_coloring.graph.power_graph import build_power_graph
from power_graph_coloring.models.family import FamilySpec
from power_graph_coloring.models.graph import PowerGraph
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.models.report import (
    AnalysisReport,
    ChromaticSummary,
    CorpusReport,
    ElementReport,
    MagmaSummary,
    WindowReport,
)
from power_graph_coloring.models.window import Window
from power_graph_coloring.symbolic.families import SymbolicFamily
from power_graph_coloring.symbolic.window import (
    build_window_graph,
    color_window,
    infinite_components,
    window_component_splits,
)
from power_graph_coloring.utils.logging import get_logger
from power_graph_coloring.verification import (
    check_power_associativity_claim,
    magma_claims,
    skipped_magma_claims,
    window_claims,
)

RANDOM_PRODUCTS = 10
RANDOM_PRODUCT_MAX_SIZE = 64


def _analyze_job(job: tuple[FamilySpec, Limits]) -> AnalysisReport:
    spec, limits = job
    return PowerGraphEngine(limits=limits, max_workers=1).analyze_spec(spec)


class PowerGraphEngine:
    """Engine running analyses and claim verification on finite magmas and symbolic windows."""

    def __init__(self, limits: Limits | None = None, max_workers: int | None = None) -> None:
        """Initialize the PowerGraphEngine.

        Args:
            limits: Tunable limits, defaults to ``Limits.from_env()``
            max_workers: Worker processes for corpus verification (defaults to ``limits.workers``)
        """
        self.logger = get_logger(self.__class__.__name__)
        self.limits = limits or Limits.from_env()
        self.max_workers = max_workers or self.limits.workers

    def load(self, source: str) -> Magma:
        """Load a Cayley file or generate a family expression."""
        return load_source(source, self.limits.max_magma_size)

    def chromatic_summary(self, graph: PowerGraph) -> tuple[ChromaticSummary, int | None]:
        """Exact chi when the graph is small enough, otherwise clique and greedy bounds.

        Returns:
            The summary and the maximum clique size (``None`` when the clique limit is exceeded)
        """
        n = graph.n_vertices
        clique = max_clique(graph, self.limits.max_clique_limit) if n <= self.limits.max_clique_limit else None
        clique_size = len(clique) if clique is not None else None
        if n <= self.limits.exact_chi_limit:
            chi = exact_coloring(graph, self.limits.exact_chi_limit, clique).palette_size
            return ChromaticSummary(exact=chi, lower=chi, upper=chi), clique_size
        reason = f"{n} vertices exceed the exact limit of {self.limits.exact_chi_limit}"
        self.logger.debug(f"Exact chromatic number skipped: {reason}")
        lower = clique_size if clique_size is not None else min(n, 1)
        upper = greedy_color(graph).palette_size
        return ChromaticSummary(exact=None, lower=lower, upper=upper, skipped_reason=reason), clique_size

    def analyze(self, magma: Magma) -> AnalysisReport:
        """Profile, color and verify one magma.

        Args:
            magma: Any finite magma; non power-associative input yields a failing report with a witness

        Returns:
            The complete analysis report
        """
        summary = MagmaSummary(size=magma.size, metadata=magma.metadata, names=magma.names)
        associativity = check_power_associativity(magma)
        associativity_claim = check_power_associativity_claim(magma, associativity)
        if not associativity:
            name = magma.metadata or "magma"
            self.logger.warning(f"{name} is not power-associative, witness {associativity.witness}")
            return AnalysisReport(
                magma=summary,
                power_associative=False,
                power_associativity_witness=associativity.witness,
                claims=[associativity_claim, *skipped_magma_claims()],
            )

        graph = build_power_graph(magma)
        coloring = color_finite(magma, graph)
        chromatic, clique_size = self.chromatic_summary(graph)
        claims, violations = magma_claims(
            magma, graph, coloring, chromatic, clique_size or chromatic.lower, self.limits
        )
        elements = [
            ElementReport(profile=profile, out_degree=graph.out_degree(profile.element), color=str(coloring[g]))
            for g, profile in enumerate(magma.profiles)
        ]
        report = AnalysisReport(
            magma=summary,
            power_associative=True,
            elements=elements,
            palette_size=coloring.palette_size,
            palette_bound=color_palette_bound(magma),
            chromatic=chromatic,
            max_clique_size=clique_size,
            claims=[associativity_claim, *claims],
            violations=violations,
        )
        self.logger.debug(f"Analyzed {magma.metadata or 'magma'}: palette {report.palette_size}, chi {chromatic}")
        return report

    def analyze_spec(self, spec: FamilySpec) -> AnalysisReport:
        return self.analyze(generate(spec, self.limits.max_magma_size))

    def default_corpus(self) -> list[FamilySpec]:
        """The verification corpus, including seeded random direct products."""
        corpus = [FamilySpec.cyclic(n) for n in range(1, 65)]
        corpus += [FamilySpec.dihedral(n) for n in range(3, 17)]
        corpus += [FamilySpec.monogenic(m, r) for m in range(1, 9) for r in range(1, 9)]
        corpus += [FamilySpec.symmetric(n) for n in (3, 4)]
        corpus += [FamilySpec.quaternion8()]
        corpus += [FamilySpec.full_transformation(n) for n in (2, 3)]
        return corpus + self.random_products(RANDOM_PRODUCTS)

    def random_products(self, count: int) -> list[FamilySpec]:
        """Distinct products of two small factors with at most 64 elements, drawn with the corpus seed."""
        factors = [FamilySpec.cyclic(n) for n in range(2, 9)]
        factors += [FamilySpec.dihedral(n) for n in range(3, 6)]
        factors += [FamilySpec.monogenic(m, r) for m in range(2, 5) for r in range(1, 4)]
        factors += [FamilySpec.symmetric(3), FamilySpec.quaternion8(), FamilySpec.full_transformation(2)]
        rng = np.random.default_rng(self.limits.corpus_seed)
        products: list[FamilySpec] = []
        while len(products) < count:
            left, right = (factors[int(i)] for i in rng.integers(0, len(factors), size=2))
            spec = FamilySpec.product(left, right)
            if (spec.size or 0) <= RANDOM_PRODUCT_MAX_SIZE and spec not in products:
                products.append(spec)
        return products

    def verify_corpus(self, specs: list[FamilySpec] | None = None) -> CorpusReport:
        """Analyze every magma of the corpus, in parallel when ``max_workers > 1``.

        Reports keep the corpus order whatever the number of workers.
        """
        specs = specs if specs is not None else self.default_corpus()
        self.logger.info(f"Verifying {len(specs)} magmas with {self.max_workers} worker(s)")
        if self.max_workers > 1:
            with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
                jobs = executor.map(_analyze_job, [(spec, self.limits) for spec in specs])
                reports = list(self.logger.progress(jobs, description="Verifying corpus"))
        else:
            progress = self.logger.progress(specs, description="Verifying corpus")
            reports = [self.analyze_spec(spec) for spec in progress]
        corpus = CorpusReport(reports=reports)
        for failure in corpus.failures:
            self.logger.error(f"Claims failed for {failure.magma.metadata}")
        return corpus

    def analyze_window(self, family: SymbolicFamily, window: Window) -> WindowReport:
        """Color a symbolic family inside a window and verify the window claims."""
        window.check()
        with self.logger.status(f"[bold green]Building the {family.label} window..."):
            window_graph = build_window_graph(family, window)
        coloring = color_window(family, window, window_graph)
        claims = window_claims(family, window_graph, coloring)
        splits = window_component_splits(family, window, window_graph)
        for split in splits:
            self.logger.debug(f"Component {split.component_key} is split into {len(split.pieces)} window pieces")
        infinite = sum(1 for x in window_graph.elements if family.is_infinite_order(x))
        return WindowReport(
            family=family.label,
            w=window.w,
            e=window.e,
            n_elements=len(window_graph.elements),
            n_infinite=infinite,
            n_components=len(infinite_components(family, window_graph)),
            palette_size=coloring.palette_size,
            claims=claims,
            splits=splits,
            coloring=coloring.rendered(),
        )
