from collections.abc import Iterable, Sequence

from power_graph_coloring.models.graph import PowerGraph, bit, iter_bits, mask_of
from power_graph_coloring.models.magma import ElementProfile, Magma


def build_power_graph(magma: Magma, profiles: Sequence[ElementProfile] | None = None) -> PowerGraph:
    """Build P(G) and D(G) of a finite magma.

    Args:
        magma: A power-associative magma
        profiles: Element profiles, defaults to the cached ones of ``magma``

    Returns:
        The power graph, with ``directed[x]`` the set {x^k : 1 <= k <= order(x)}
    """
    profiles = profiles if profiles is not None else magma.profiles
    directed = []
    for profile in profiles:
        powers = magma.sequences[profile.element].powers
        directed.append(mask_of(powers[: profile.order]))

    undirected = list(directed)
    for x, row in enumerate(directed):
        for y in iter_bits(row):
            undirected[y] |= bit(x)
    undirected = [row & ~bit(x) for x, row in enumerate(undirected)]
    return PowerGraph(n_vertices=magma.size, undirected=tuple(undirected), directed=tuple(directed))


def connected_components(graph: PowerGraph, subset: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of the subgraph induced on ``subset`` (all vertices by default).

    Components are sorted by their smallest vertex and list their members in ascending order.
    """
    remaining = graph.full_mask if subset is None else mask_of(subset)
    allowed = remaining
    components = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        component = bit(start)
        stack = [start]
        while stack:
            v = stack.pop()
            fresh = graph.undirected[v] & allowed & ~component
            component |= fresh
            stack.extend(iter_bits(fresh))
        remaining &= ~component
        components.append(list(iter_bits(component)))
    return components
