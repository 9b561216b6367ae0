"""Claim suite: every structural statement about power graphs, checked against brute force.

Each check returns a ``ClaimVerdict``. Checks never raise on a failed claim; the
failure and its witness end up in ``detail``.
"""

import numpy as np
from sympy import totient

from power_graph_coloring.algebra.magma import check_power_associativity, power
from power_graph_coloring.config import Limits
from power_graph_coloring.graph.coloring import (
    color_palette_bound,
    cyclic_clique_decomposition,
    cyclic_orders,
    verify_proper_coloring,
)
from power_graph_coloring.graph.oracle import (
    brute_force_chromatic_number,
    greedy_color,
    is_clique_union,
    is_independent,
)
from power_graph_coloring.models.coloring import TagColoring
from power_graph_coloring.models.graph import PowerGraph, bit, iter_bits, mask_of
from power_graph_coloring.models.magma import Magma, PowerAssociativityReport
from power_graph_coloring.models.report import ChromaticSummary, ClaimVerdict
from power_graph_coloring.models.window import WindowGraph
from power_graph_coloring.symbolic.families import SymbolicFamily
from power_graph_coloring.symbolic.window import WindowColoring, infinite_components

NOT_POWER_ASSOCIATIVE = "input is not power-associative"


def _powers_by_accumulation(magma: Magma, g: int) -> set[int]:
    """{g^k : k >= 1} by iterating the table until nothing new appears."""
    seen: set[int] = set()
    current = g
    while current not in seen:
        seen.add(current)
        current = magma.table[current][g]
    return seen


def check_power_associativity_claim(magma: Magma, report: PowerAssociativityReport | None = None) -> ClaimVerdict:
    report = report if report is not None else check_power_associativity(magma)
    if report:
        return ClaimVerdict.passed("power_associativity")
    g, a, b = report.witness  # type: ignore[misc]
    return ClaimVerdict.failed("power_associativity", f"g^{a}·g^{b} != g^{a + b} for g={magma.name(g)}")


def check_element_profiles(magma: Magma) -> ClaimVerdict:
    """Orders match set accumulation and the cyclic flag matches g = g^(n+1) for some n <= order."""
    for profile in magma.profiles:
        g = profile.element
        order = len(_powers_by_accumulation(magma, g))
        if order != profile.order:
            return ClaimVerdict.failed("element_profiles", f"order of {magma.name(g)}: {profile.order} != {order}")
        returns = any(power(magma, g, n + 1) == g for n in range(1, profile.order + 1))
        if returns != profile.cyclic:
            return ClaimVerdict.failed("element_profiles", f"cyclic flag of {magma.name(g)} is wrong")
        if profile.order != profile.index_m + profile.period_r - 1:
            return ClaimVerdict.failed("element_profiles", f"order != index + period - 1 for {magma.name(g)}")
    return ClaimVerdict.passed("element_profiles")


def check_tail_becomes_cyclic(magma: Magma) -> ClaimVerdict:
    """For non-cyclic g with pre-period p and order n: g^q is cyclic and (g^q)^(n-p+1) = g^q for p < q <= n."""
    for profile in magma.profiles:
        if profile.cyclic:
            continue
        g, p, n = profile.element, profile.pre_period or 0, profile.order
        for q in range(p + 1, n + 1):
            h = power(magma, g, q)
            if not magma.profiles[h].cyclic or power(magma, h, n - p + 1) != h:
                return ClaimVerdict.failed("tail_becomes_cyclic", f"g={magma.name(g)}, q={q}")
    return ClaimVerdict.passed("tail_becomes_cyclic")


def check_exponent_law(magma: Magma) -> ClaimVerdict:
    """power(g, a + b) equals power(g, a)·power(g, b) for all a, b <= 2·order(g)."""
    table = np.asarray(magma.table, dtype=np.int64)
    for profile in magma.profiles:
        g = profile.element
        bound = 2 * profile.order
        powers = np.array([g] + [power(magma, g, k) for k in range(1, 2 * bound + 1)], dtype=np.int64)
        exponents = np.arange(1, bound + 1)
        products = table[powers[exponents][:, None], powers[exponents][None, :]]
        failing = np.argwhere(products != powers[np.add.outer(exponents, exponents)])
        if failing.size:
            a, b = (int(i) + 1 for i in failing[0])
            return ClaimVerdict.failed("exponent_law", f"g={magma.name(g)}, a={a}, b={b}")
    return ClaimVerdict.passed("exponent_law")


def check_adjacency(magma: Magma, graph: PowerGraph) -> ClaimVerdict:
    """Adjacency agrees with powers found by plain table iteration."""
    powers = [_powers_by_accumulation(magma, g) for g in magma.elements]
    for x in magma.elements:
        for y in magma.elements:
            expected = x != y and (y in powers[x] or x in powers[y])
            if graph.adjacent(x, y) != expected:
                return ClaimVerdict.failed("adjacency_oracle", f"edge {magma.name(x)}-{magma.name(y)}")
    return ClaimVerdict.passed("adjacency_oracle")


def check_out_degrees(magma: Magma, graph: PowerGraph) -> ClaimVerdict:
    for profile in magma.profiles:
        degree = graph.out_degree(profile.element)
        if degree not in (profile.order - 1, profile.order):
            return ClaimVerdict.failed("out_degree", f"{magma.name(profile.element)} has out-degree {degree}")
    return ClaimVerdict.passed("out_degree")


def check_directed_transitivity(graph: PowerGraph) -> ClaimVerdict:
    """D(G) is a preorder: a power of a power of x is a power of x."""
    for x in graph.vertices:
        for y in iter_bits(graph.directed[x]):
            if graph.directed[y] & ~graph.directed[x]:
                return ClaimVerdict.failed("directed_transitivity", f"arc {x}->{y}")
    return ClaimVerdict.passed("directed_transitivity")


def check_cyclic_cliques(magma: Magma, graph: PowerGraph) -> ClaimVerdict:
    """Order-n cyclic elements form disjoint cliques of exactly phi(n) members with no edges between them."""
    for n in cyclic_orders(magma):
        members = [p.element for p in magma.profiles if p.cyclic and p.order == n]
        classes = cyclic_clique_decomposition(magma, graph, n)
        report = is_clique_union(graph, members, classes)
        if not report:
            return ClaimVerdict.failed("cyclic_cliques", f"order {n}: witness {report.witness}")
        phi = int(totient(n))
        if any(size != phi for size in report.clique_sizes):
            return ClaimVerdict.failed("cyclic_cliques", f"order {n}: sizes {report.clique_sizes}, phi={phi}")
    return ClaimVerdict.passed("cyclic_cliques")


def check_mutual_powers(magma: Magma, graph: PowerGraph) -> ClaimVerdict:
    """Among cyclic elements of one order, being a power of the other is symmetric."""
    for x in magma.profiles:
        for y in magma.profiles:
            if not (x.cyclic and y.cyclic and x.order == y.order):
                continue
            if graph.is_power(x.element, y.element) and not graph.is_power(y.element, x.element):
                return ClaimVerdict.failed("mutual_powers", f"{magma.name(y.element)} is a one-way power")
    return ClaimVerdict.passed("mutual_powers")


def check_pre_period_independence(magma: Magma, graph: PowerGraph) -> ClaimVerdict:
    """Distinct non-cyclic elements with the same pre-period are never adjacent."""
    by_pre_period: dict[int, list[int]] = {}
    for p in magma.profiles:
        if p.pre_period is not None:
            by_pre_period.setdefault(p.pre_period, []).append(p.element)
    for pre_period, members in sorted(by_pre_period.items()):
        check = is_independent(graph, members)
        if not check:
            return ClaimVerdict.failed("pre_period_independence", f"pre-period {pre_period}: edge {check.witness}")
    return ClaimVerdict.passed("pre_period_independence")


def check_proper(graph: PowerGraph, coloring: TagColoring) -> tuple[ClaimVerdict, list[tuple[int, int]]]:
    violations = verify_proper_coloring(graph, coloring)
    if violations:
        return ClaimVerdict.failed("proper_coloring", f"{len(violations)} monochromatic edges"), violations
    return ClaimVerdict.passed("proper_coloring"), violations


def check_palette_bound(magma: Magma, coloring: TagColoring) -> ClaimVerdict:
    bound = color_palette_bound(magma)
    if coloring.palette_size > bound:
        return ClaimVerdict.failed("palette_bound", f"palette {coloring.palette_size} > bound {bound}")
    return ClaimVerdict.passed("palette_bound", f"{coloring.palette_size} <= {bound}")


def check_palette_vs_chi(coloring: TagColoring, chromatic: ChromaticSummary) -> ClaimVerdict:
    if chromatic.exact is None:
        return ClaimVerdict.skipped("palette_vs_chi", chromatic.skipped_reason or "exact chi not computed")
    if coloring.palette_size < chromatic.exact:
        return ClaimVerdict.failed("palette_vs_chi", f"palette {coloring.palette_size} < chi {chromatic.exact}")
    return ClaimVerdict.passed("palette_vs_chi", f"palette {coloring.palette_size}, chi {chromatic.exact}")


def check_oracle_consistency(graph: PowerGraph, chromatic: ChromaticSummary, clique_size: int) -> ClaimVerdict:
    greedy = greedy_color(graph)
    if verify_proper_coloring(graph, greedy):
        return ClaimVerdict.failed("oracle_consistency", "greedy coloring is not proper")
    if chromatic.exact is None:
        return ClaimVerdict.skipped("oracle_consistency", chromatic.skipped_reason or "exact chi not computed")
    if not clique_size <= chromatic.exact <= greedy.palette_size:
        return ClaimVerdict.failed(
            "oracle_consistency", f"clique {clique_size}, chi {chromatic.exact}, greedy {greedy.palette_size}"
        )
    return ClaimVerdict.passed("oracle_consistency")


def check_brute_force_chi(graph: PowerGraph, chromatic: ChromaticSummary, limit: int) -> ClaimVerdict:
    if graph.n_vertices > limit:
        return ClaimVerdict.skipped("brute_force_chi", f"more than {limit} vertices")
    if chromatic.exact is None:
        return ClaimVerdict.skipped("brute_force_chi", "exact chi not computed")
    brute = brute_force_chromatic_number(graph, limit)
    if brute != chromatic.exact:
        return ClaimVerdict.failed("brute_force_chi", f"enumeration gives {brute}, search gives {chromatic.exact}")
    return ClaimVerdict.passed("brute_force_chi")


MAGMA_CLAIMS = (
    "element_profiles",
    "tail_becomes_cyclic",
    "exponent_law",
    "adjacency_oracle",
    "out_degree",
    "directed_transitivity",
    "cyclic_cliques",
    "mutual_powers",
    "pre_period_independence",
    "proper_coloring",
    "palette_bound",
    "palette_vs_chi",
    "oracle_consistency",
    "brute_force_chi",
)


def skipped_magma_claims(reason: str = NOT_POWER_ASSOCIATIVE) -> list[ClaimVerdict]:
    return [ClaimVerdict.skipped(claim, reason) for claim in MAGMA_CLAIMS]


def magma_claims(
    magma: Magma,
    graph: PowerGraph,
    coloring: TagColoring,
    chromatic: ChromaticSummary,
    clique_size: int,
    limits: Limits,
) -> tuple[list[ClaimVerdict], list[tuple[int, int]]]:
    """Run the structural claims on a power-associative magma.

    Returns:
        The verdicts in ``MAGMA_CLAIMS`` order and the monochromatic edges of the coloring
    """
    proper, violations = check_proper(graph, coloring)
    claims = [
        check_element_profiles(magma),
        check_tail_becomes_cyclic(magma),
        check_exponent_law(magma),
        check_adjacency(magma, graph),
        check_out_degrees(magma, graph),
        check_directed_transitivity(graph),
        check_cyclic_cliques(magma, graph),
        check_mutual_powers(magma, graph),
        check_pre_period_independence(magma, graph),
        proper,
        check_palette_bound(magma, coloring),
        check_palette_vs_chi(coloring, chromatic),
        check_oracle_consistency(graph, chromatic, clique_size),
        check_brute_force_chi(graph, chromatic, limits.brute_force_limit),
    ]
    return claims, violations


WINDOW_CLAIMS = (
    "solution_sets_independent",
    "solution_sets_infinite_order",
    "component_closure",
    "component_keys",
    "window_coloring_proper",
)


def _arc_prefixes(family: SymbolicFamily, window_graph: WindowGraph) -> tuple[list[list[int]], list[list[int]]]:
    """Per vertex y and bound J: mask of y^j and mask of infinite-order z with z^j = y, both for 2 <= j <= J."""
    e = window_graph.window.e
    n_vertices = window_graph.graph.n_vertices
    out_steps = [[0] * (e + 1) for _ in range(n_vertices)]
    in_steps = [[0] * (e + 1) for _ in range(n_vertices)]
    for z, element in enumerate(window_graph.elements):
        if not family.is_infinite_order(element):
            continue
        for j in range(2, e + 1):
            target = window_graph.index.get(family.power_coordinates(element.a, element.b, j))
            if target is not None:
                out_steps[z][j] |= bit(target)
                in_steps[target][j] |= bit(z)
    for steps in (*out_steps, *in_steps):
        for j in range(1, e + 1):
            steps[j] |= steps[j - 1]
    return out_steps, in_steps


def window_claims(family: SymbolicFamily, window_graph: WindowGraph, coloring: WindowColoring) -> list[ClaimVerdict]:
    """Independence of G(x, m, n), closure of the window components and properness of the coloring.

    Returns:
        One verdict per entry of ``WINDOW_CLAIMS``, in that order
    """
    window = window_graph.window
    graph = window_graph.graph
    elements = window_graph.elements
    index = window_graph.index
    failures: dict[str, str] = {}
    out_steps, in_steps = _arc_prefixes(family, window_graph)

    for x in elements:
        if not family.is_infinite_order(x):
            continue
        min_m: dict[int, int] = {}
        min_n: dict[int, int] = {}
        for m in range(1, window.e + 1):
            for n in range(1, window.e + 1):
                vertices = [index[c] for c in family.root_coordinates(x.a, x.b, m, n, window.w)]
                if not vertices:
                    continue
                if any(not family.is_infinite_order(elements[v]) for v in vertices):
                    failures.setdefault("solution_sets_infinite_order", f"G({x},{m},{n})")
                check = is_independent(graph, vertices)
                if not check:
                    a, b = (elements[v] for v in check.witness)  # type: ignore[union-attr]
                    failures.setdefault("solution_sets_independent", f"G({x},{m},{n}) has edge {a}-{b}")
                for v in vertices:
                    min_m[v] = min(min_m.get(v, m), m)
                    min_n[v] = min(min_n.get(v, n), n)
        # y^j lies in G(x, m·j, n) and a j-th root of y lies in G(x, m, n·j)
        members = mask_of(min_m)
        for y in min_m:
            escaped = out_steps[y][window.e // min_m[y]] | in_steps[y][window.e // min_n[y]]
            if escaped & ~members:
                z = elements[(escaped & ~members).bit_length() - 1]
                failures.setdefault("component_closure", f"{z} is related to {elements[y]} but not in C({x})")

    for component in infinite_components(family, window_graph):
        found = {family.component_key(elements[v]) for v in component}
        if len(found) > 1:
            failures.setdefault("component_keys", f"window component mixes {sorted(found)}")

    indexed = {window_graph.position(x): tag for x, tag in coloring.assignment.items()}
    violations = verify_proper_coloring(graph, indexed)
    if violations:
        x, y = violations[0]
        failures["window_coloring_proper"] = f"{len(violations)} monochromatic edges, first {elements[x]}-{elements[y]}"
    else:
        classes: dict[str, list[int]] = {}
        for v, tag in indexed.items():
            classes.setdefault(str(tag), []).append(v)
        for name, members_of_color in sorted(classes.items()):
            if not is_independent(graph, members_of_color):
                failures.setdefault("window_coloring_proper", f"color class {name} is not independent")

    return [
        ClaimVerdict.failed(claim, failures[claim]) if claim in failures else ClaimVerdict.passed(claim)
        for claim in WINDOW_CLAIMS
    ]
