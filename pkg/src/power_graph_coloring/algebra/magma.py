from collections.abc import Sequence

import numpy as np

from power_graph_coloring.exceptions import (
    ClosureViolation,
    DimensionMismatch,
    DuplicateName,
    ParameterOutOfRange,
)
from power_graph_coloring.models.magma import ElementProfile, Magma, PowerAssociativityReport
from power_graph_coloring.utils.logging import get_logger

logger = get_logger(__name__)


def build_magma(
    table: Sequence[Sequence[int]] | np.ndarray, names: Sequence[str] | None = None, metadata: str | None = None
) -> Magma:
    """Validate a Cayley table and wrap it into a Magma.

    Args:
        table: Square table, ``table[g][h]`` is the index of ``g·h``
        names: Optional display names, one per element
        metadata: Optional free-form family descriptor

    Returns:
        The validated magma

    Raises:
        DimensionMismatch: If the table is empty or not square, or names have the wrong length
        ClosureViolation: If an entry is not an element index, with the offending cell
        DuplicateName: If two elements share a display name
    """
    rows = [list(row) for row in table]
    size = len(rows)
    if size == 0:
        raise DimensionMismatch("a Cayley table needs at least one row")
    for g, row in enumerate(rows):
        if len(row) != size:
            raise DimensionMismatch(f"row {g} has {len(row)} entries, expected {size}")

    checked: list[tuple[int, ...]] = []
    for g, row in enumerate(rows):
        for h, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, int | np.integer) or not 0 <= value < size:
                raise ClosureViolation(g, h, value, size)
        checked.append(tuple(int(value) for value in row))

    if names is not None:
        names = tuple(names)
        if len(names) != size:
            raise DimensionMismatch(f"{len(names)} names given for {size} elements")
        seen: set[str] = set()
        for name in names:
            if name in seen:
                raise DuplicateName(name)
            seen.add(name)

    return Magma(size=size, table=tuple(checked), names=names, metadata=metadata)


def power(magma: Magma, g: int, k: int) -> int:
    """Left-normed power ``g^k`` with g^1 = g and g^(k+1) = g^k·g.

    Large exponents are reduced through the eventual periodicity of the power sequence,
    so no exponent is ever iterated past the order of ``g``.

    Raises:
        ParameterOutOfRange: If ``g`` is not an element or ``k < 1``
    """
    if not 0 <= g < magma.size:
        raise ParameterOutOfRange("g", g, f"not an element of a magma of size {magma.size}")
    if k < 1:
        raise ParameterOutOfRange("k", k, "exponents start at 1")
    return magma.sequences[g].at(k)


def _shell_key(a: int, b: int) -> tuple[int, int, int]:
    # Shell max(a, b); corner first, then (j, s) before (s, j) for ascending j.
    shell = max(a, b)
    if a == b:
        return (shell, 0, 0)
    if a < b:
        return (shell, a, 0)
    return (shell, b, 1)


def check_power_associativity(magma: Magma) -> PowerAssociativityReport:
    """Check g^a·g^b = g^(a+b) for every element and all 1 <= a, b <= 2·order(g).

    With L the size of the monogenic closure of g, every exponent above L lands on the
    cycle of the power sequence, and two exponents on the cycle that agree modulo the
    period give the same power. Exponent pairs up to 2·L therefore already realize every
    combination of (tail or cycle position) for both factors, and larger pairs repeat one
    of them. Elements are scanned in index order and pairs in growing square shells, so
    the reported witness is the first failure in that order.

    Args:
        magma: Any finite magma, power-associative or not

    Returns:
        A passing report, or a failing one carrying the witness ``(g, a, b)``
    """
    table = np.asarray(magma.table, dtype=np.int64)
    for g in magma.elements:
        sequence = magma.sequences[g]
        bound = 2 * len(sequence.powers)
        # powers[k] = g^k for 1 <= k <= 2·bound; index 0 is unused
        powers = np.array([g] + [sequence.at(k) for k in range(1, 2 * bound + 1)], dtype=np.int64)
        exponents = np.arange(1, bound + 1)
        left = powers[exponents]
        products = table[left[:, None], left[None, :]]
        expected = powers[np.add.outer(exponents, exponents)]
        failing = np.argwhere(products != expected)
        if failing.size:
            a, b = min(((int(i) + 1, int(j) + 1) for i, j in failing), key=lambda pair: _shell_key(*pair))
            logger.debug(f"Power-associativity fails at g={magma.name(g)}, a={a}, b={b}")
            return PowerAssociativityReport(passed=False, witness=(g, a, b))
    return PowerAssociativityReport(passed=True)


def element_profile(magma: Magma, g: int) -> ElementProfile:
    """Order, index, period and pre-period of ``g`` (cached on the magma)."""
    if not 0 <= g < magma.size:
        raise ParameterOutOfRange("g", g, f"not an element of a magma of size {magma.size}")
    return magma.profiles[g]


def profiles(magma: Magma) -> tuple[ElementProfile, ...]:
    return magma.profiles
