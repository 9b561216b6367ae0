from typing import Any


class PowerGraphError(Exception):
    """Base class for every error raised by power-graph-coloring."""


class DimensionMismatch(PowerGraphError):
    """A Cayley table is not a nonempty square, or names do not match its size."""


class ClosureViolation(PowerGraphError):
    """A Cayley table entry is not an element index of the magma."""

    def __init__(self, row: int, column: int, value: Any, size: int) -> None:
        self.row = row
        self.column = column
        self.value = value
        self.size = size
        super().__init__(f"entry {value!r} at cell ({row},{column}) is not in [0, {size})")


class DuplicateName(PowerGraphError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"element name {name!r} is used more than once")


class MissingAssignment(PowerGraphError):
    def __init__(self, vertex: Any) -> None:
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} has no color")


class PartitionMismatch(PowerGraphError):
    """The classes handed to a clique-union check do not partition the vertex set."""

    def __init__(self, missing: list[int], extra: list[int]) -> None:
        self.missing = missing
        self.extra = extra
        super().__init__(f"partition does not cover the set exactly (missing={missing}, extra={extra})")


class LimitExceeded(PowerGraphError):
    def __init__(self, n_vertices: int, limit: int) -> None:
        self.n_vertices = n_vertices
        self.limit = limit
        super().__init__(f"graph has {n_vertices} vertices, limit is {limit}")


class NoRelationInBound(PowerGraphError):
    """No exponent pair within the bound relates an element to its component representative."""

    def __init__(self, element: Any, representative: Any, bound: int) -> None:
        self.element = element
        self.representative = representative
        self.bound = bound
        super().__init__(f"no (m,n) <= {bound} with {representative}^m = {element}^n; increase the bound")


class ParameterOutOfRange(PowerGraphError):
    def __init__(self, parameter: str, value: Any, reason: str) -> None:
        self.parameter = parameter
        self.value = value
        self.reason = reason
        super().__init__(f"{parameter}={value!r}: {reason}")


class ParseError(PowerGraphError):
    """Malformed Cayley file or family expression, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
