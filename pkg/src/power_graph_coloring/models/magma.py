from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field


class ElementProfile(BaseModel):
    """Monogenic data of one element: the power sequence is a tail of length index_m - 1
    followed by a cycle of length period_r."""

    model_config = ConfigDict(frozen=True)

    element: int = Field(ge=0)
    order: int = Field(ge=1)
    index_m: int = Field(ge=1)
    period_r: int = Field(ge=1)
    cyclic: bool
    # Absent (not 0) for cyclic elements
    pre_period: int | None = Field(default=None, ge=1)


class PowerSequence(BaseModel):
    """The distinct left-normed powers g, g^2, ..., g^(index_m + period_r - 1) of one element."""

    model_config = ConfigDict(frozen=True)

    element: int
    powers: tuple[int, ...]
    index_m: int
    period_r: int

    def exponent_to_position(self, k: int) -> int:
        """Reduce the exponent ``k >= 1`` into the range [1, index_m + period_r - 1]."""
        if k <= len(self.powers):
            return k
        return self.index_m + (k - self.index_m) % self.period_r

    def at(self, k: int) -> int:
        return self.powers[self.exponent_to_position(k) - 1]


class Magma(BaseModel):
    """A finite magma given by its Cayley table over element indices 0..size-1.

    ``table[g][h]`` is the product ``g·h``. Instances are built and validated by
    ``power_graph_coloring.algebra.magma.build_magma``. Equality and hashing look at the
    table and the names only; ``metadata`` is a free-form descriptor.
    """

    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1)
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    metadata: str | None = None

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def name(self, g: int) -> str:
        return self.names[g] if self.names is not None else str(g)

    @property
    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def sequences(self) -> tuple[PowerSequence, ...]:
        """Left-normed power sequences of every element, computed once per magma."""
        sequences = []
        for g in range(self.size):
            seen: dict[int, int] = {}
            powers: list[int] = []
            current = g
            while current not in seen:
                seen[current] = len(powers) + 1
                powers.append(current)
                current = self.table[current][g]
            index_m = seen[current]
            sequences.append(
                PowerSequence(
                    element=g, powers=tuple(powers), index_m=index_m, period_r=len(powers) + 1 - index_m
                )
            )
        return tuple(sequences)

    @cached_property
    def profiles(self) -> tuple[ElementProfile, ...]:
        """Element profiles, one per element index."""
        return tuple(
            ElementProfile(
                element=seq.element,
                order=len(seq.powers),
                index_m=seq.index_m,
                period_r=seq.period_r,
                cyclic=seq.index_m == 1,
                pre_period=None if seq.index_m == 1 else seq.index_m - 1,
            )
            for seq in self.sequences
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Magma):
            return NotImplemented
        return self.table == other.table and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.table, self.names))

    def __repr__(self) -> str:
        return f"Magma(size={self.size}, metadata={self.metadata!r})"


class PowerAssociativityReport(BaseModel):
    """Outcome of the g^a·g^b = g^(a+b) sweep; ``witness`` is (g, a, b) on failure."""

    model_config = ConfigDict(frozen=True)

    passed: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.passed
