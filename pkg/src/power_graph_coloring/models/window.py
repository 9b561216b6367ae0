from enum import StrEnum
from functools import cached_property
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from power_graph_coloring.exceptions import ParameterOutOfRange
from power_graph_coloring.models.graph import PowerGraph

# Closed-form coordinates must stay representable as signed 64-bit integers.
COORDINATE_CEILING = 2**62


class FamilyTag(StrEnum):
    Z = "Z"
    ZXZK = "ZxZk"
    FREE_MONO = "FreeMono"


class WindowElement(BaseModel):
    """An element of a symbolic infinite family.

    ``a`` is the exponent of the generator t for Z, the first coordinate for Z x Z_k
    and the exponent e of g^e for the free monogenic semigroup. ``b`` is the Z_k
    coordinate and ``k`` the modulus, both only meaningful for Z x Z_k.
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyTag
    a: int
    b: int = 0
    k: int | None = None

    @model_validator(mode="after")
    def _check_coordinates(self) -> Self:
        if self.family == FamilyTag.ZXZK:
            if self.k is None or self.k < 1:
                raise ParameterOutOfRange("k", self.k, "Z x Z_k elements need a modulus k >= 1")
            if not 0 <= self.b < self.k:
                raise ParameterOutOfRange("b", self.b, f"must lie in [0, {self.k})")
            return self
        if self.b != 0 or self.k is not None:
            raise ParameterOutOfRange("b", self.b, "only Z x Z_k elements carry a second coordinate")
        if self.family == FamilyTag.FREE_MONO and self.a < 1:
            raise ParameterOutOfRange("a", self.a, "free monogenic exponents start at 1")
        return self

    @property
    def canonical_key(self) -> tuple[int, ...]:
        if self.family == FamilyTag.FREE_MONO:
            return (self.a,)
        if self.family == FamilyTag.Z:
            return (abs(self.a), self.a)
        return (abs(self.a), self.a, self.b)

    def __lt__(self, other: "WindowElement") -> bool:
        return self.canonical_key < other.canonical_key

    def __str__(self) -> str:
        match self.family:
            case FamilyTag.Z:
                return f"t^{self.a}"
            case FamilyTag.ZXZK:
                return f"({self.a},{self.b})"
        return f"g^{self.a}"


class Window(BaseModel):
    """Finite shadow of an infinite family: coordinates bounded by ``w``, exponents by ``e``.

    ``pair_bound`` optionally caps the (m, n) pairs used for relation colors.
    """

    model_config = ConfigDict(frozen=True)

    w: int
    e: int
    pair_bound: int | None = None

    def check(self) -> Self:
        """Validate the bounds.

        Raises:
            ParameterOutOfRange: If a bound is not positive or W·E leaves the 64-bit range
        """
        if self.w < 1:
            raise ParameterOutOfRange("W", self.w, "must be at least 1")
        if self.e < 1:
            raise ParameterOutOfRange("E", self.e, "must be at least 1")
        if self.pair_bound is not None and self.pair_bound < 1:
            raise ParameterOutOfRange("pair_bound", self.pair_bound, "must be at least 1")
        if self.w * self.e >= COORDINATE_CEILING:
            raise ParameterOutOfRange("W*E", self.w * self.e, "powers inside the window would exceed 64 bits")
        return self


class WindowGraph(BaseModel):
    """Power graph of the elements inside a window, vertex i being ``elements[i]``.

    Arcs are the powers y -> y^j with 1 <= j <= E that stay inside the window.
    """

    model_config = ConfigDict(frozen=True)

    family: str
    window: Window
    elements: tuple[WindowElement, ...]
    graph: PowerGraph

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        """Vertex of each element, keyed by its coordinates (a, b)."""
        return {(x.a, x.b): i for i, x in enumerate(self.elements)}

    def position(self, x: WindowElement) -> int:
        return self.index[(x.a, x.b)]
