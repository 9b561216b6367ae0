from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from power_graph_coloring.models.magma import ElementProfile


class CliqueUnionReport(BaseModel):
    """Result of checking that a partition of a vertex set is a disjoint union of cliques."""

    model_config = ConfigDict(frozen=True)

    is_clique_union: bool
    clique_sizes: tuple[int, ...]
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.is_clique_union


class IndependenceCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    independent: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.independent


class Verdict(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class ClaimVerdict(BaseModel):
    """Tri-state outcome of one verified claim; ``detail`` explains a failure or a skip."""

    model_config = ConfigDict(frozen=True)

    claim: str
    verdict: Verdict
    detail: str | None = None

    @classmethod
    def passed(cls, claim: str, detail: str | None = None) -> "ClaimVerdict":
        return cls(claim=claim, verdict=Verdict.PASS, detail=detail)

    @classmethod
    def failed(cls, claim: str, detail: str) -> "ClaimVerdict":
        return cls(claim=claim, verdict=Verdict.FAIL, detail=detail)

    @classmethod
    def skipped(cls, claim: str, reason: str) -> "ClaimVerdict":
        return cls(claim=claim, verdict=Verdict.SKIPPED, detail=reason)


class ChromaticSummary(BaseModel):
    """Exact chi when computed, otherwise the clique/greedy bounds and the reason."""

    model_config = ConfigDict(frozen=True)

    exact: int | None
    lower: int
    upper: int
    skipped_reason: str | None = None


class MagmaSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    size: int
    metadata: str | None
    names: tuple[str, ...] | None = None


class ElementReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    profile: ElementProfile
    out_degree: int
    color: str


class AnalysisReport(BaseModel):
    """Everything the engine learns about one finite magma."""

    model_config = ConfigDict(frozen=True)

    magma: MagmaSummary
    power_associative: bool
    power_associativity_witness: tuple[int, int, int] | None = None
    elements: list[ElementReport] = Field(default_factory=list)
    palette_size: int | None = None
    palette_bound: int | None = None
    chromatic: ChromaticSummary | None = None
    max_clique_size: int | None = None
    claims: list[ClaimVerdict] = Field(default_factory=list)
    violations: list[tuple[int, int]] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.power_associative and all(c.verdict != Verdict.FAIL for c in self.claims)


class CorpusReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    reports: list[AnalysisReport]

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.reports)

    @property
    def failures(self) -> list[AnalysisReport]:
        return [report for report in self.reports if not report.ok]


class ComponentSplit(BaseModel):
    """A true component of P_*(G) that the finite window breaks into several pieces."""

    model_config = ConfigDict(frozen=True)

    component_key: str
    pieces: list[list[str]]


class WindowReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    w: int
    e: int
    n_elements: int
    n_infinite: int
    n_components: int
    palette_size: int
    claims: list[ClaimVerdict]
    splits: list[ComponentSplit] = Field(default_factory=list)
    coloring: dict[str, str] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.verdict != Verdict.FAIL for c in self.claims)
