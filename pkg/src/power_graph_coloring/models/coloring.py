from typing import Annotated, Generic, Literal, TypeVar

from pydantic import BaseModel, ConfigDict, Field


class CyclicColor(BaseModel):
    """Namespace A: position ``i`` inside a clique of cyclic elements of order ``n``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["A"] = "A"
    n: int = Field(ge=1)
    i: int = Field(ge=1)

    def __str__(self) -> str:
        return f"A({self.n},{self.i})"


class PrePeriodColor(BaseModel):
    """Namespace B: pre-period ``p`` of a non-cyclic element of finite order."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["B"] = "B"
    p: int = Field(ge=1)

    def __str__(self) -> str:
        return f"B({self.p})"


class RelationColor(BaseModel):
    """Namespace C: the pair (m, n) with x^m = y^n for the component representative x."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["C"] = "C"
    m: int = Field(ge=1)
    n: int = Field(ge=1)

    def __str__(self) -> str:
        return f"C({self.m},{self.n})"


ColorTag = Annotated[CyclicColor | PrePeriodColor | RelationColor, Field(discriminator="kind")]

VertexT = TypeVar("VertexT")
TagT = TypeVar("TagT")


class Coloring(BaseModel, Generic[VertexT, TagT]):
    """A vertex -> color assignment. Algebraic colorings use ColorTag, oracle colorings use int."""

    model_config = ConfigDict(frozen=True)

    assignment: dict[VertexT, TagT]

    @property
    def palette(self) -> frozenset[TagT]:
        return frozenset(self.assignment.values())

    @property
    def palette_size(self) -> int:
        return len(self.palette)

    def __getitem__(self, vertex: VertexT) -> TagT:
        return self.assignment[vertex]

    def rendered(self) -> dict[str, str]:
        return {str(v): str(tag) for v, tag in self.assignment.items()}


TagColoring = Coloring[int, ColorTag]


class CyclicOfOrder(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["cyclic"] = "cyclic"
    n: int = Field(ge=1)


class NonCyclicFinite(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["non_cyclic"] = "non_cyclic"
    p: int = Field(ge=1)


ElementClass = Annotated[CyclicOfOrder | NonCyclicFinite, Field(discriminator="kind")]
