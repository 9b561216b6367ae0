import numpy as np
import pytest
from pytest_cases import parametrize_with_cases

import cases_magmas
from power_graph_coloring.algebra.magma import build_magma, check_power_associativity, element_profile, power
from power_graph_coloring.exceptions import ClosureViolation, DimensionMismatch, DuplicateName, ParameterOutOfRange
from power_graph_coloring.models.magma import Magma


def test_trivial_magma() -> None:
    magma = build_magma([[0]])
    assert magma.size == 1
    assert magma.names is None


def test_z2_from_numpy() -> None:
    magma = build_magma(np.array([[0, 1], [1, 0]]))
    assert magma.size == 2
    assert magma.table == ((0, 1), (1, 0))


def test_closure_violation_reports_cell() -> None:
    with pytest.raises(ClosureViolation) as excinfo:
        build_magma([[0, 2], [1, 0]])
    assert (excinfo.value.row, excinfo.value.column, excinfo.value.value) == (0, 1, 2)


@pytest.mark.parametrize("table", [[[0, -1], [1, 0]], [[0, True], [1, 0]], [[0, 1.0], [1, 0]]])
def test_closure_violation_on_bad_entries(table) -> None:
    with pytest.raises(ClosureViolation):
        build_magma(table)


@pytest.mark.parametrize("table", [[], [[0, 1]], [[0, 1], [1]]])
def test_dimension_mismatch(table) -> None:
    with pytest.raises(DimensionMismatch):
        build_magma(table)


def test_names_must_match_and_be_distinct() -> None:
    with pytest.raises(DimensionMismatch):
        build_magma([[0, 1], [1, 0]], names=["e"])
    with pytest.raises(DuplicateName) as excinfo:
        build_magma([[0, 1], [1, 0]], names=["e", "e"])
    assert excinfo.value.name == "e"


def test_equality_ignores_metadata() -> None:
    assert build_magma([[0]], metadata="a") == build_magma([[0]], metadata="b")
    assert build_magma([[0]], names=["e"]) != build_magma([[0]])


def test_power_examples(z6: Magma, m32: Magma) -> None:
    assert power(z6, 1, 6) == 0
    assert power(z6, 4, 1) == 4
    # g^9 = g^3 in M(3,2); element i is g^(i+1)
    assert power(m32, 0, 9) == 2
    assert power(m32, 0, 10**12) == 3


def test_power_rejects_bad_arguments(z6: Magma) -> None:
    with pytest.raises(ParameterOutOfRange):
        power(z6, 1, 0)
    with pytest.raises(ParameterOutOfRange):
        power(z6, 6, 1)


def test_counterexample_witness(counterexample: Magma) -> None:
    report = check_power_associativity(counterexample)
    assert not report
    assert report.witness == (0, 2, 2)


@parametrize_with_cases("magma", cases=cases_magmas)
def test_corpus_cases_are_power_associative(magma: Magma) -> None:
    assert check_power_associativity(magma)


@parametrize_with_cases("magma", cases=cases_magmas)
def test_profile_invariants(magma: Magma) -> None:
    for profile in magma.profiles:
        assert profile.order == profile.index_m + profile.period_r - 1
        assert profile.cyclic == (profile.index_m == 1)
        if profile.cyclic:
            assert profile.pre_period is None
        else:
            assert profile.pre_period == profile.index_m - 1


def test_element_profile_examples(z6: Magma, m32: Magma) -> None:
    identity = element_profile(z6, 0)
    assert (identity.order, identity.cyclic, identity.pre_period) == (1, True, None)

    generator = element_profile(z6, 1)
    assert (generator.order, generator.index_m, generator.period_r, generator.cyclic) == (6, 1, 6, True)

    g = element_profile(m32, 0)
    assert (g.order, g.index_m, g.period_r, g.cyclic, g.pre_period) == (4, 3, 2, False, 2)


def test_element_profile_out_of_range(z6: Magma) -> None:
    with pytest.raises(ParameterOutOfRange):
        element_profile(z6, 7)
