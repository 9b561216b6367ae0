from collections import defaultdict

from power_graph_coloring.exceptions import NoRelationInBound, ParameterOutOfRange
from power_graph_coloring.graph.coloring import color_finite
from power_graph_coloring.graph.power_graph import connected_components
from power_graph_coloring.models.coloring import Coloring, ColorTag, RelationColor
from power_graph_coloring.models.graph import PowerGraph, bit, iter_bits
from power_graph_coloring.models.report import ComponentSplit
from power_graph_coloring.models.window import Window, WindowElement, WindowGraph
from power_graph_coloring.symbolic.families import SymbolicFamily, family_of
from power_graph_coloring.utils.logging import get_logger

logger = get_logger(__name__)

WindowColoring = Coloring[WindowElement, ColorTag]


def sym_power(x: WindowElement, j: int) -> WindowElement:
    """x^j in closed form; the result may leave any window."""
    if j < 1:
        raise ParameterOutOfRange("j", j, "exponents start at 1")
    return family_of(x).power(x, j)


def _check_exponents(window: Window, m: int, n: int) -> None:
    for name, value in (("m", m), ("n", n)):
        if not 1 <= value <= window.e:
            raise ParameterOutOfRange(name, value, f"must lie in [1, {window.e}]")


def solve_power_equation(x: WindowElement, m: int, n: int, window: Window) -> list[WindowElement]:
    """The window part of G(x, m, n) = {y : x^m = y^n}, in canonical order.

    Raises:
        ParameterOutOfRange: If x has finite order or m, n are outside [1, E]
    """
    family = family_of(x)
    if not family.is_infinite_order(x):
        raise ParameterOutOfRange("x", str(x), "G(x, m, n) is only defined for elements of infinite order")
    _check_exponents(window.check(), m, n)
    return sorted(family.solve(x, m, n, window))


def component_window(x: WindowElement, window: Window) -> list[WindowElement]:
    """Union of G(x, m, n) over 1 <= m, n <= E inside the window, in canonical order."""
    family = family_of(x)
    if not family.is_infinite_order(x):
        raise ParameterOutOfRange("x", str(x), "components are only defined for elements of infinite order")
    window.check()
    members: set[tuple[int, int]] = set()
    for m in range(1, window.e + 1):
        for n in range(1, window.e + 1):
            members.update(family.root_coordinates(x.a, x.b, m, n, window.w))
    return sorted(family.element(a, b) for a, b in members)


def build_window_graph(family: SymbolicFamily, window: Window) -> WindowGraph:
    """Window power graph: y ~ z iff y != z and y^j = z or z^j = y for some 1 <= j <= E."""
    window.check()
    coordinates = family.window_coordinates(window.w)
    index = {c: i for i, c in enumerate(coordinates)}
    directed = []
    for a, b in coordinates:
        row = 0
        for j in range(1, window.e + 1):
            target = index.get(family.power_coordinates(a, b, j))
            if target is not None:
                row |= bit(target)
        directed.append(row)

    undirected = list(directed)
    for x, row in enumerate(directed):
        for y in iter_bits(row):
            undirected[y] |= bit(x)
    undirected = [row & ~bit(x) for x, row in enumerate(undirected)]

    graph = PowerGraph(n_vertices=len(coordinates), undirected=tuple(undirected), directed=tuple(directed))
    elements = tuple(family.element(a, b) for a, b in coordinates)
    return WindowGraph(family=family.label, window=window, elements=elements, graph=graph)


def infinite_components(family: SymbolicFamily, window_graph: WindowGraph) -> list[list[int]]:
    """Connected components of the window graph restricted to infinite-order elements."""
    infinite = [i for i, x in enumerate(window_graph.elements) if family.is_infinite_order(x)]
    return connected_components(window_graph.graph, infinite)


def color_window(
    family: SymbolicFamily, window: Window, window_graph: WindowGraph | None = None
) -> WindowColoring:
    """Color every element of the window.

    Each window component of infinite-order elements gets its canonical minimum x as
    representative and every member y the color C(m, n) of the smallest (m, n) with
    x^m = y^n. Finite-order elements take the finite coloring of the family's torsion part.

    Raises:
        NoRelationInBound: If ``window.pair_bound`` is set and some pair exceeds it
    """
    window_graph = window_graph or build_window_graph(family, window)
    elements = window_graph.elements
    assignment: dict[WindowElement, ColorTag] = {}
    for component in infinite_components(family, window_graph):
        representative = elements[component[0]]
        for v in component:
            y = elements[v]
            pair = family.minimal_relation(representative, y)
            bound = window.pair_bound
            if pair is None or (bound is not None and max(pair) > bound):
                raise NoRelationInBound(str(y), str(representative), bound if bound is not None else window.e)
            assignment[y] = RelationColor(m=pair[0], n=pair[1])

    finite = family.finite_part()
    if finite is not None:
        magma, torsion = finite
        for g, tag in color_finite(magma).assignment.items():
            if family.in_window(torsion[g], window):
                assignment[torsion[g]] = tag
    logger.debug(f"Colored {len(assignment)} elements of {family.label} with W={window.w}, E={window.e}")
    return WindowColoring(assignment=assignment)


def window_component_splits(
    family: SymbolicFamily, window: Window, window_graph: WindowGraph | None = None
) -> list[ComponentSplit]:
    """True components of P_*(G) that the window breaks into several window components."""
    window_graph = window_graph or build_window_graph(family, window)
    pieces: dict[str, list[list[str]]] = defaultdict(list)
    for component in infinite_components(family, window_graph):
        key = family.component_key(window_graph.elements[component[0]])
        pieces[key].append([str(window_graph.elements[v]) for v in component])
    return [ComponentSplit(component_key=key, pieces=parts) for key, parts in sorted(pieces.items()) if len(parts) > 1]
