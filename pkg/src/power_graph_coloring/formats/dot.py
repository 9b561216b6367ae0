"""Graphviz DOT export for power graphs.

Output is deterministic: nodes ascend, edges are lexicographic and self-loops of
D(G) are left out.
"""

from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
import json
from typing import Any

from power_graph_coloring.models.coloring import Coloring
from power_graph_coloring.models.graph import PowerGraph
from power_graph_coloring.utils.stringbuilder import StringBuilder


def _quote(value: str) -> str:
    # DOT and JSON share the double-quoted string escapes we need
    return json.dumps(value, ensure_ascii=False)


class DotStatement(ABC):
    """A composable DOT statement."""

    @abstractmethod
    def apply(self, builder: "DotBuilder") -> None:
        """Write this statement into the builder."""


class NodeStatement(DotStatement):
    def __init__(self, vertex: int, attributes: Mapping[str, str] | None = None) -> None:
        self.vertex = vertex
        self.attributes = dict(attributes or {})

    def apply(self, builder: "DotBuilder") -> None:
        builder.add_statement(str(self))

    def __str__(self) -> str:
        if not self.attributes:
            return f"{self.vertex};"
        rendered = ", ".join(f"{key}={_quote(value)}" for key, value in self.attributes.items())
        return f"{self.vertex} [{rendered}];"


class EdgeStatement(DotStatement):
    def __init__(self, source: int, target: int, directed: bool = False) -> None:
        self.source = source
        self.target = target
        self.directed = directed

    def apply(self, builder: "DotBuilder") -> None:
        builder.add_statement(str(self))

    def __str__(self) -> str:
        return f"{self.source} {'->' if self.directed else '--'} {self.target};"


class DotBuilder:
    """Builds an undirected ``graph P`` or a directed ``digraph D`` document."""

    def __init__(self, directed: bool = False) -> None:
        self.directed = directed
        self.statements: list[str] = []

    def add_statement(self, statement: str) -> "DotBuilder":
        self.statements.append(statement)
        return self

    def add(self, statement: DotStatement) -> "DotBuilder":
        statement.apply(self)
        return self

    def __add__(self, statement: DotStatement) -> "DotBuilder":
        return self.add(statement)

    def build(self) -> str:
        builder = StringBuilder()
        header = "digraph D {" if self.directed else "graph P {"
        with builder.scope(header, "}"):
            builder.append_lines(self.statements)
        return str(builder)


def export_dot(
    graph: PowerGraph,
    coloring: Coloring[int, Any] | None = None,
    directed: bool = False,
    names: Sequence[str] | None = None,
) -> str:
    """Render P(G), or D(G) when ``directed``, as DOT text.

    Args:
        graph: The power graph
        coloring: Optional coloring; each node then carries a ``color_tag`` attribute
        directed: Write the arcs of D(G) instead of the edges of P(G)
        names: Optional element names used as node labels

    Returns:
        The DOT document, newline terminated
    """
    builder = DotBuilder(directed=directed)
    for v in graph.vertices:
        attributes: dict[str, str] = {}
        if names is not None:
            attributes["label"] = names[v]
        if coloring is not None:
            attributes["color_tag"] = str(coloring[v])
        builder += NodeStatement(v, attributes)
    for x, y in graph.arcs() if directed else graph.edges():
        builder += EdgeStatement(x, y, directed)
    return builder.build()
