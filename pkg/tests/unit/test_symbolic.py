import pytest

from power_graph_coloring.exceptions import NoRelationInBound, ParameterOutOfRange
from power_graph_coloring.models.coloring import CyclicColor, RelationColor
from power_graph_coloring.models.window import Window, WindowElement
from power_graph_coloring.symbolic.families import (
    FreeMonogenicFamily,
    IntegerFamily,
    ProductFamily,
    family_from_name,
    family_of,
)
from power_graph_coloring.symbolic.window import (
    build_window_graph,
    color_window,
    component_window,
    infinite_components,
    solve_power_equation,
    sym_power,
    window_component_splits,
)
from power_graph_coloring.verification import WINDOW_CLAIMS, window_claims

Z = IntegerFamily()
Z2 = ProductFamily(2)
FREE = FreeMonogenicFamily()


def test_sym_power() -> None:
    assert sym_power(Z.element(3), 2) == Z.element(6)
    assert sym_power(Z2.element(1, 1), 2) == Z2.element(2, 0)
    assert sym_power(FREE.element(1), 5) == FREE.element(5)
    with pytest.raises(ParameterOutOfRange):
        sym_power(Z.element(1), 0)


def test_element_rendering_and_order() -> None:
    assert str(Z.element(-3)) == "t^-3"
    assert str(Z2.element(1, 3)) == "(1,1)"
    assert str(FREE.element(4)) == "g^4"
    assert sorted([Z.element(-1), Z.element(2), Z.element(1), Z.element(0)]) == [
        Z.element(0),
        Z.element(-1),
        Z.element(1),
        Z.element(2),
    ]


def test_solve_power_equation() -> None:
    window = Window(w=10, e=10)
    assert solve_power_equation(Z.element(1), 2, 2, window) == [Z.element(1)]
    assert solve_power_equation(Z2.element(1, 0), 2, 2, window) == [Z2.element(1, 0), Z2.element(1, 1)]
    assert solve_power_equation(Z.element(1), 1, 2, window) == []


def test_solve_power_equation_preconditions() -> None:
    window = Window(w=10, e=10)
    with pytest.raises(ParameterOutOfRange):
        solve_power_equation(Z.element(0), 1, 1, window)
    with pytest.raises(ParameterOutOfRange):
        solve_power_equation(Z.element(1), 11, 1, window)
    with pytest.raises(ParameterOutOfRange):
        solve_power_equation(Z.element(1), 1, 1, Window(w=0, e=3))


def test_component_window() -> None:
    assert component_window(Z.element(1), Window(w=5, e=20)) == [Z.element(a) for a in range(1, 6)]
    assert component_window(Z.element(-1), Window(w=5, e=20)) == [Z.element(-a) for a in range(1, 6)]
    expected = [Z2.element(1, 0), Z2.element(1, 1), Z2.element(2, 0), Z2.element(2, 1)]
    assert component_window(Z2.element(1, 0), Window(w=2, e=8)) == expected


def test_minimal_relation() -> None:
    assert Z.minimal_relation(Z.element(1), Z.element(3)) == (3, 1)
    assert Z.minimal_relation(Z.element(4), Z.element(6)) == (3, 2)
    assert Z.minimal_relation(Z.element(1), Z.element(-1)) is None
    assert Z2.minimal_relation(Z2.element(1, 0), Z2.element(1, 1)) == (2, 2)
    assert ProductFamily(3).minimal_relation(ProductFamily(3).element(2, 1), ProductFamily(3).element(4, 0)) == (6, 3)


@pytest.mark.parametrize("family", [Z, Z2, ProductFamily(6), FREE])
def test_minimal_relation_matches_scan(family) -> None:
    bound = 40
    elements = [x for x in family.enumerate(Window(w=4, e=1)) if family.is_infinite_order(x)]
    powers = {x: [family.power_coordinates(x.a, x.b, j) for j in range(1, bound + 1)] for x in elements}
    for x in elements:
        for y in elements:
            first_n: dict[tuple[int, int], int] = {}
            for n, coordinates in enumerate(powers[y], start=1):
                first_n.setdefault(coordinates, n)
            expected = next(((m, first_n[c]) for m, c in enumerate(powers[x], start=1) if c in first_n), None)
            assert family.minimal_relation(x, y) == expected


def test_color_window_examples() -> None:
    coloring = color_window(Z, Window(w=5, e=20))
    assert coloring[Z.element(1)] == RelationColor(m=1, n=1)
    assert coloring[Z.element(3)] == RelationColor(m=3, n=1)
    assert coloring[Z.element(-2)] == RelationColor(m=2, n=1)
    assert coloring[Z.element(0)] == CyclicColor(n=1, i=1)

    coloring = color_window(Z2, Window(w=4, e=8))
    assert coloring[Z2.element(1, 0)] == RelationColor(m=1, n=1)
    assert coloring[Z2.element(1, 1)] == RelationColor(m=2, n=2)
    assert str(coloring[Z2.element(0, 1)]) == "A(2,1)"


def test_color_window_pair_bound() -> None:
    with pytest.raises(NoRelationInBound):
        color_window(Z2, Window(w=4, e=8, pair_bound=1))


def test_window_bounds() -> None:
    with pytest.raises(ParameterOutOfRange):
        Window(w=2**40, e=2**30).check()
    with pytest.raises(ParameterOutOfRange):
        Window(w=3, e=0).check()


def test_window_graph_structure() -> None:
    window_graph = build_window_graph(FREE, Window(w=6, e=3))
    assert [str(x) for x in window_graph.elements] == ["g^1", "g^2", "g^3", "g^4", "g^5", "g^6"]
    # g^5 has no power or root inside the window with exponents up to 3
    assert window_graph.graph.neighbors(window_graph.position(FREE.element(5))) == []
    assert infinite_components(FREE, window_graph) == [[0, 1, 2, 3, 5], [4]]


def test_splits_are_reported() -> None:
    splits = window_component_splits(FREE, Window(w=6, e=3))
    assert len(splits) == 1
    assert splits[0].component_key == "all"
    assert splits[0].pieces == [["g^1", "g^2", "g^3", "g^4", "g^6"], ["g^5"]]


@pytest.mark.parametrize("family", [Z, Z2, ProductFamily(4), FREE])
def test_window_claims_pass(family) -> None:
    window = Window(w=12, e=6)
    window_graph = build_window_graph(family, window)
    claims = window_claims(family, window_graph, color_window(family, window, window_graph))
    assert [c.claim for c in claims] == list(WINDOW_CLAIMS)
    assert all(c.verdict == "pass" for c in claims), claims


def test_window_claims_catch_improper_coloring() -> None:
    window = Window(w=4, e=4)
    window_graph = build_window_graph(Z, window)
    coloring = color_window(Z, window, window_graph)
    broken = coloring.model_copy(update={"assignment": {x: RelationColor(m=1, n=1) for x in coloring.assignment}})
    verdicts = {c.claim: c.verdict for c in window_claims(Z, window_graph, broken)}
    assert verdicts["window_coloring_proper"] == "fail"
    assert verdicts["solution_sets_independent"] == "pass"


def test_family_lookup() -> None:
    assert isinstance(family_from_name("Z"), IntegerFamily)
    assert family_from_name("ZxZk:12").k == 12
    assert family_from_name("ZxZ3").label == "ZxZ3"
    assert isinstance(family_from_name("FreeMono"), FreeMonogenicFamily)
    with pytest.raises(ParameterOutOfRange):
        family_from_name("Q")
    with pytest.raises(ParameterOutOfRange):
        family_from_name("ZxZk:0")
    assert family_of(Z2.element(1, 1)).label == "ZxZ2"
    assert isinstance(family_of(WindowElement(family="FreeMono", a=2)), FreeMonogenicFamily)


@pytest.mark.parametrize(
    "fields",
    [
        {"family": "ZxZk", "a": 1, "b": 1},
        {"family": "ZxZk", "a": 1, "b": 7, "k": 2},
        {"family": "ZxZk", "a": 1, "b": -1, "k": 2},
        {"family": "ZxZk", "a": 1, "b": 0, "k": 0},
        {"family": "FreeMono", "a": 0},
        {"family": "Z", "a": 1, "b": 1},
        {"family": "Z", "a": 1, "k": 3},
    ],
)
def test_window_element_coordinates_are_checked(fields: dict) -> None:
    with pytest.raises(ParameterOutOfRange):
        WindowElement(**fields)


def test_product_elements_stay_reduced() -> None:
    assert Z2.element(1, 3) == WindowElement(family="ZxZk", a=1, b=1, k=2)
    assert sym_power(Z2.element(1, 1), 1) == Z2.element(1, 1)
    assert family_of(WindowElement(family="ZxZk", a=0, b=2, k=3)).label == "ZxZ3"
