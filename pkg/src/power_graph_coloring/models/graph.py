from collections.abc import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, Field


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PowerGraph(BaseModel):
    """Undirected power graph P(G) plus the directed power relation D(G).

    Rows are bitsets: bit ``y`` of ``undirected[x]`` is set iff x and y are adjacent,
    bit ``y`` of ``directed[x]`` is set iff y is a positive power of x. ``directed``
    keeps the self-loops x = x^1, ``undirected`` never has them.
    """

    model_config = ConfigDict(frozen=True)

    n_vertices: int = Field(ge=0)
    undirected: tuple[int, ...]
    directed: tuple[int, ...]

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def full_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.undirected[x] >> y & 1)

    def is_power(self, x: int, y: int) -> bool:
        """True iff y is a power of x (the arc x -> y of D(G))."""
        return bool(self.directed[x] >> y & 1)

    def neighbors(self, x: int) -> list[int]:
        return list(iter_bits(self.undirected[x]))

    def degree(self, x: int) -> int:
        return self.undirected[x].bit_count()

    def out_degree(self, x: int) -> int:
        """Out-degree of x in D(G), self-loop excluded."""
        return (self.directed[x] & ~bit(x)).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges (x, y) with x < y in lexicographic order."""
        return [(x, y) for x in self.vertices for y in iter_bits(self.undirected[x] >> (x + 1) << (x + 1))]

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs x -> y of D(G) without self-loops, in lexicographic order."""
        return [(x, y) for x in self.vertices for y in iter_bits(self.directed[x] & ~bit(x))]

    def induced_edges(self, subset: Iterable[int]) -> list[tuple[int, int]]:
        mask = mask_of(subset)
        return [(x, y) for x in iter_bits(mask) for y in iter_bits(self.undirected[x] & mask) if x < y]
