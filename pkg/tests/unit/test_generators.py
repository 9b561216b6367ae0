from collections import Counter
from pathlib import Path

import pytest

from power_graph_coloring.algebra.generators import generate, load_source, product_magma
from power_graph_coloring.algebra.magma import check_power_associativity
from power_graph_coloring.exceptions import ParameterOutOfRange, ParseError
from power_graph_coloring.formats.cayley import write_magma
from power_graph_coloring.models.family import FamilySpec


def test_cyclic_6_is_addition_mod_6() -> None:
    magma = generate(FamilySpec.cyclic(6))
    assert magma.size == 6
    assert all(magma.mul(g, h) == (g + h) % 6 for g in range(6) for h in range(6))
    assert magma.names is None
    assert magma.metadata == "cyclic(6)"


def test_monogenic_3_2() -> None:
    magma = generate(FamilySpec.monogenic(3, 2))
    assert magma.size == 4
    # g^2·g^3 = g^reduce(5) = g^3
    assert magma.mul(1, 2) == 2
    assert magma.table == ((1, 2, 3, 2), (2, 3, 2, 3), (3, 2, 3, 2), (2, 3, 2, 3))


def test_symmetric_3_orders() -> None:
    magma = generate(FamilySpec.symmetric(3))
    assert magma.size == 6
    orders = Counter(p.order for p in magma.profiles)
    assert orders == Counter({1: 1, 2: 3, 3: 2})
    assert magma.names[0] == "123"


def test_dihedral_names_and_orders() -> None:
    magma = generate(FamilySpec.dihedral(4))
    assert magma.names == ("e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s")
    assert Counter(p.order for p in magma.profiles) == Counter({1: 1, 2: 5, 4: 2})


def test_quaternion_orders() -> None:
    magma = generate(FamilySpec.quaternion8())
    orders = {magma.name(p.element): p.order for p in magma.profiles}
    assert orders == {"1": 1, "-1": 2, "i": 4, "-i": 4, "j": 4, "-j": 4, "k": 4, "-k": 4}
    assert check_power_associativity(magma)


def test_full_transformation_2() -> None:
    magma = generate(FamilySpec.full_transformation(2))
    assert magma.size == 4
    assert magma.names == ("11", "12", "21", "22")
    assert check_power_associativity(magma)
    # the constant maps are idempotent but not the identity
    assert [p.order for p in magma.profiles] == [1, 1, 2, 1]


def test_product_size_and_names() -> None:
    spec = FamilySpec.product(FamilySpec.cyclic(2), FamilySpec.symmetric(3))
    magma = generate(spec)
    assert magma.size == spec.size == 12
    assert magma.names[0] == "(0,123)"
    assert magma.metadata == "product(cyclic(2),symmetric(3))"


def test_product_without_names() -> None:
    z2 = generate(FamilySpec.cyclic(2))
    z3 = generate(FamilySpec.cyclic(3))
    magma = product_magma(z2, z3)
    assert magma.names is None
    # (1, 2)·(1, 2) = (0, 1)
    assert magma.mul(5, 5) == 1


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec.cyclic(0),
        FamilySpec.symmetric(6),
        FamilySpec.full_transformation(5),
        FamilySpec.monogenic(0, 2),
        FamilySpec.product(FamilySpec.cyclic(20), FamilySpec.cyclic(20)),
    ],
)
def test_out_of_range_parameters(spec: FamilySpec) -> None:
    with pytest.raises(ParameterOutOfRange):
        generate(spec)


def test_max_size_is_configurable() -> None:
    with pytest.raises(ParameterOutOfRange):
        generate(FamilySpec.cyclic(10), max_size=8)


def test_load_source_prefers_files(tmp_path: Path) -> None:
    path = write_magma(generate(FamilySpec.cyclic(3)), tmp_path / "z3.txt")
    magma = load_source(str(path))
    assert magma.size == 3
    assert magma.metadata == f"from_file({path})"
    assert load_source("cyclic(3)") == magma


def test_load_source_rejects_garbage() -> None:
    with pytest.raises(ParseError):
        load_source("no/such/file.txt")
