from collections.abc import Mapping
from typing import Any

from sympy import totient

from power_graph_coloring.exceptions import MissingAssignment
from power_graph_coloring.graph.power_graph import build_power_graph
from power_graph_coloring.models.coloring import (
    Coloring,
    CyclicColor,
    CyclicOfOrder,
    ElementClass,
    NonCyclicFinite,
    PrePeriodColor,
    TagColoring,
)
from power_graph_coloring.models.graph import PowerGraph
from power_graph_coloring.models.magma import ElementProfile, Magma


def classify_element(profile: ElementProfile) -> ElementClass:
    if profile.cyclic:
        return CyclicOfOrder(n=profile.order)
    return NonCyclicFinite(p=profile.pre_period)  # type: ignore[arg-type]


def cyclic_orders(magma: Magma) -> list[int]:
    return sorted({p.order for p in magma.profiles if p.cyclic})


def pre_periods(magma: Magma) -> list[int]:
    return sorted({p.pre_period for p in magma.profiles if p.pre_period is not None})


def cyclic_clique_decomposition(magma: Magma, graph: PowerGraph, n: int) -> list[list[int]]:
    """Split the cyclic elements of order ``n`` into classes of mutual powers.

    Two such elements are related when each is a power of the other. Every class is a
    clique of P(G) with phi(n) members. Classes come sorted by their smallest member,
    members in ascending index order.
    """
    members = [p.element for p in magma.profiles if p.cyclic and p.order == n]
    assigned: set[int] = set()
    classes = []
    for x in members:
        if x in assigned:
            continue
        cls = [y for y in members if y not in assigned and graph.is_power(x, y) and graph.is_power(y, x)]
        assigned.update(cls)
        classes.append(cls)
    return classes


def color_finite(magma: Magma, graph: PowerGraph | None = None) -> TagColoring:
    """Color every element of a finite power-associative magma.

    A cyclic element of order n gets A(n, i), i being its 1-based rank inside its
    mutual-power class. A non-cyclic element gets B(p) for its pre-period p.
    """
    graph = graph or build_power_graph(magma)
    assignment: dict[int, Any] = {}
    for n in cyclic_orders(magma):
        for cls in cyclic_clique_decomposition(magma, graph, n):
            for rank, x in enumerate(cls, start=1):
                assignment[x] = CyclicColor(n=n, i=rank)
    for profile in magma.profiles:
        if not profile.cyclic:
            assignment[profile.element] = PrePeriodColor(p=profile.pre_period)
    return TagColoring(assignment=dict(sorted(assignment.items())))


def verify_proper_coloring(graph: PowerGraph, coloring: Coloring | Mapping[int, Any]) -> list[tuple[int, int]]:
    """Edges (x, y), x < y, whose endpoints share a color; empty means proper.

    Raises:
        MissingAssignment: If a vertex has no color
    """
    assignment = coloring.assignment if isinstance(coloring, Coloring) else coloring
    for v in graph.vertices:
        if v not in assignment:
            raise MissingAssignment(v)
    return [(x, y) for x, y in graph.edges() if assignment[x] == assignment[y]]


def color_palette_bound(magma: Magma) -> int:
    """Sum of phi(n) over the occurring cyclic orders plus the number of occurring pre-periods."""
    return sum(int(totient(n)) for n in cyclic_orders(magma)) + len(pre_periods(magma))
