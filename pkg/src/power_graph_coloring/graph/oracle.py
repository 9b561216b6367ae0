"""Brute-force ground truth on power graphs.

Everything here works on the bitset rows of ``PowerGraph`` and knows nothing about
magmas, so it can check the algebraic colorings independently.
"""

from collections.abc import Iterable, Iterator, Sequence

from power_graph_coloring.exceptions import LimitExceeded, ParameterOutOfRange, PartitionMismatch
from power_graph_coloring.models.coloring import Coloring
from power_graph_coloring.models.graph import PowerGraph, bit, iter_bits, mask_of
from power_graph_coloring.models.report import CliqueUnionReport, IndependenceCheck
from power_graph_coloring.utils.logging import get_logger

logger = get_logger(__name__)

IntColoring = Coloring[int, int]


def is_independent(graph: PowerGraph, vertices: Iterable[int]) -> IndependenceCheck:
    """Check that no edge joins two members; the witness is the lexicographically first edge."""
    mask = mask_of(vertices)
    for x in iter_bits(mask):
        inside = graph.undirected[x] & mask
        if inside:
            y = (inside & -inside).bit_length() - 1
            return IndependenceCheck(independent=False, witness=(min(x, y), max(x, y)))
    return IndependenceCheck(independent=True)


def is_clique_union(
    graph: PowerGraph, vertices: Iterable[int], partition: Sequence[Sequence[int]]
) -> CliqueUnionReport:
    """Check that every class is a clique and that no edge crosses two classes.

    Args:
        graph: The power graph
        vertices: The set S being partitioned
        partition: Classes that must cover S exactly once

    Returns:
        The verdict with class sizes in partition order and, on failure, a witness pair:
        two non-adjacent members of one class, or the endpoints of a crossing edge

    Raises:
        PartitionMismatch: If the classes do not partition S
    """
    target = mask_of(vertices)
    covered = 0
    repeated = 0
    for cls in partition:
        cls_mask = mask_of(cls)
        repeated |= covered & cls_mask
        covered |= cls_mask
    missing, extra = target & ~covered, (covered & ~target) | repeated
    if missing or extra:
        raise PartitionMismatch(list(iter_bits(missing)), list(iter_bits(extra)))

    sizes = tuple(len(cls) for cls in partition)
    class_masks = [mask_of(cls) for cls in partition]
    for cls_mask in class_masks:
        for x in iter_bits(cls_mask):
            absent = cls_mask & ~graph.undirected[x] & ~bit(x)
            if absent:
                y = (absent & -absent).bit_length() - 1
                return CliqueUnionReport(is_clique_union=False, clique_sizes=sizes, witness=(min(x, y), max(x, y)))
    for cls_mask in class_masks:
        for x in iter_bits(cls_mask):
            crossing = graph.undirected[x] & target & ~cls_mask
            if crossing:
                y = (crossing & -crossing).bit_length() - 1
                return CliqueUnionReport(is_clique_union=False, clique_sizes=sizes, witness=(min(x, y), max(x, y)))
    return CliqueUnionReport(is_clique_union=True, clique_sizes=sizes)


def _color_class_bound(graph: PowerGraph, candidates: int) -> int:
    """Number of classes of a sequential greedy coloring of the candidates (an upper bound on any clique)."""
    classes = 0
    uncolored = candidates
    while uncolored:
        classes += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            uncolored &= ~bit(v)
            available &= ~graph.undirected[v] & ~bit(v)
    return classes


def max_clique(graph: PowerGraph, limit: int = 256) -> list[int]:
    """A maximum clique by branch and bound with greedy-coloring pruning.

    Candidates are branched in ascending order and only strictly larger cliques replace
    the incumbent, so the result is the lexicographically smallest maximum clique.

    Raises:
        LimitExceeded: If the graph has more than ``limit`` vertices
    """
    if graph.n_vertices > limit:
        raise LimitExceeded(graph.n_vertices, limit)
    best: list[int] = []

    def expand(clique: list[int], candidates: int) -> None:
        nonlocal best
        if not candidates:
            if len(clique) > len(best):
                best = list(clique)
            return
        while candidates:
            if len(clique) + candidates.bit_count() <= len(best):
                return
            if len(clique) + _color_class_bound(graph, candidates) <= len(best):
                return
            v = (candidates & -candidates).bit_length() - 1
            clique.append(v)
            expand(clique, candidates & graph.undirected[v])
            clique.pop()
            candidates &= ~bit(v)

    expand([], graph.full_mask)
    return best


def default_greedy_order(graph: PowerGraph) -> list[int]:
    """Descending degree, ties by ascending index."""
    return sorted(graph.vertices, key=lambda v: (-graph.degree(v), v))


def greedy_color(graph: PowerGraph, order: Sequence[int] | None = None) -> IntColoring:
    """First-fit coloring along ``order`` with colors 1, 2, ...

    Raises:
        ParameterOutOfRange: If ``order`` is not a permutation of the vertices
    """
    order = list(order) if order is not None else default_greedy_order(graph)
    if sorted(order) != list(graph.vertices):
        raise ParameterOutOfRange("order", order, "must list every vertex exactly once")
    colors: dict[int, int] = {}
    for v in order:
        taken = {colors[u] for u in iter_bits(graph.undirected[v]) if u in colors}
        color = 1
        while color in taken:
            color += 1
        colors[v] = color
    return IntColoring(assignment=dict(sorted(colors.items())))


def _k_coloring(graph: PowerGraph, k: int, clique: Sequence[int]) -> list[int] | None:
    """DSATUR backtracking for a proper k-coloring with the clique pre-colored 0..|clique|-1."""
    colors = [-1] * graph.n_vertices
    for color, v in enumerate(clique):
        colors[v] = color

    def forbidden(v: int) -> int:
        mask = 0
        for u in iter_bits(graph.undirected[v]):
            if colors[u] >= 0:
                mask |= 1 << colors[u]
        return mask

    def backtrack(used: int) -> bool:
        chosen, chosen_key, chosen_forbidden = -1, None, 0
        for v in graph.vertices:
            if colors[v] >= 0:
                continue
            blocked = forbidden(v)
            key = (blocked.bit_count(), graph.degree(v), -v)
            if chosen_key is None or key > chosen_key:
                chosen, chosen_key, chosen_forbidden = v, key, blocked
        if chosen < 0:
            return True
        # a fresh color is interchangeable with any other unused one
        for color in range(min(k, used + 1)):
            if chosen_forbidden >> color & 1:
                continue
            colors[chosen] = color
            if backtrack(max(used, color + 1)):
                return True
        colors[chosen] = -1
        return False

    return colors if backtrack(len(clique)) else None


def exact_coloring(graph: PowerGraph, limit: int = 64, clique: Sequence[int] | None = None) -> IntColoring:
    """A minimum proper coloring, colors 1..chi.

    Tries k = clique size, k + 1, ... below the greedy palette size and falls back to the
    greedy coloring when none of them succeeds. A maximum clique is computed unless given.

    Raises:
        LimitExceeded: If the graph has more than ``limit`` vertices
    """
    if graph.n_vertices > limit:
        raise LimitExceeded(graph.n_vertices, limit)
    greedy = greedy_color(graph)
    clique = list(clique) if clique is not None else max_clique(graph, max(limit, graph.n_vertices))
    for k in range(len(clique), greedy.palette_size):
        colors = _k_coloring(graph, k, clique)
        if colors is not None:
            logger.debug(f"Found a {k}-coloring of a graph on {graph.n_vertices} vertices")
            return IntColoring(assignment={v: c + 1 for v, c in enumerate(colors)})
    return greedy


def chromatic_number(graph: PowerGraph, limit: int = 64) -> int:
    """Exact chromatic number.

    Raises:
        LimitExceeded: If the graph has more than ``limit`` vertices; callers fall back to bounds
    """
    return exact_coloring(graph, limit).palette_size


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """Every partition of n labelled vertices into color classes, once each."""
    labels = [0] * n

    def extend(position: int, blocks: int) -> Iterator[list[int]]:
        if position == n:
            yield labels
            return
        for label in range(blocks + 1):
            labels[position] = label
            yield from extend(position + 1, max(blocks, label + 1))

    if n == 0:
        yield labels
        return
    yield from extend(1, 1)


def brute_force_chromatic_number(graph: PowerGraph, limit: int = 8) -> int:
    """Chromatic number by exhaustive enumeration of all vertex partitions.

    Raises:
        LimitExceeded: If the graph has more than ``limit`` vertices
    """
    if graph.n_vertices > limit:
        raise LimitExceeded(graph.n_vertices, limit)
    edges = graph.edges()
    best = graph.n_vertices
    for labels in _restricted_growth_strings(graph.n_vertices):
        blocks = max(labels, default=-1) + 1
        if blocks < best and all(labels[x] != labels[y] for x, y in edges):
            best = blocks
    return best
