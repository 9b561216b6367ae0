from itertools import permutations, product
from pathlib import Path

import numpy as np

from power_graph_coloring.algebra.magma import build_magma
from power_graph_coloring.exceptions import ParameterOutOfRange
from power_graph_coloring.formats.cayley import read_magma
from power_graph_coloring.models.family import FamilyKind, FamilySpec
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.utils.logging import get_logger

logger = get_logger(__name__)

QUATERNION_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

# unit product u·v = sign·w over the units 1, i, j, k (indices 0..3)
_UNIT_PRODUCT = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def cyclic_table(n: int) -> np.ndarray:
    elements = np.arange(n)
    return np.add.outer(elements, elements) % n


def dihedral_table(n: int) -> tuple[np.ndarray, list[str]]:
    """Element ``f·n + i`` is r^i s^f, with (r^i s^f)(r^j s^g) = r^(i + (-1)^f j) s^(f+g)."""
    index = np.arange(2 * n)
    rotation, flip = index % n, index // n
    sign = np.where(flip == 0, 1, -1)
    new_rotation = (rotation[:, None] + sign[:, None] * rotation[None, :]) % n
    new_flip = (flip[:, None] + flip[None, :]) % 2
    names = []
    for f in range(2):
        for i in range(n):
            r_part = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
            s_part = "s" if f else ""
            names.append(r_part + s_part or "e")
    return new_flip * n + new_rotation, names


def monogenic_table(index: int, period: int) -> np.ndarray:
    """Element ``i`` is g^(i+1); exponent sums fold back onto the cycle [index, index + period)."""
    exponents = np.arange(1, index + period)
    sums = np.add.outer(exponents, exponents)
    reduced = np.where(sums < index + period, sums, index + (sums - index) % period)
    return reduced - 1


def _encode(maps: np.ndarray, n: int) -> np.ndarray:
    # Base-n code of each map along the last axis; lexicographic order of maps is code order.
    weights = n ** np.arange(n - 1, -1, -1)
    return maps @ weights


def _composition_table(maps: np.ndarray, n: int) -> np.ndarray:
    """Table of f∘g, (f∘g)(x) = f(g(x)), over the listed maps, as indices into ``maps``."""
    count = len(maps)
    composed = maps[np.arange(count)[:, None, None], maps[None, :, :]]
    lookup = np.full(n**n, -1, dtype=np.int64)
    lookup[_encode(maps, n)] = np.arange(count)
    return lookup[_encode(composed, n)]


def _map_name(images: tuple[int, ...]) -> str:
    return "".join(str(x + 1) for x in images)


def symmetric_table(n: int) -> tuple[np.ndarray, list[str]]:
    perms = list(permutations(range(n)))
    return _composition_table(np.array(perms, dtype=np.int64), n), [_map_name(p) for p in perms]


def full_transformation_table(n: int) -> tuple[np.ndarray, list[str]]:
    maps = list(product(range(n), repeat=n))
    return _composition_table(np.array(maps, dtype=np.int64), n), [_map_name(m) for m in maps]


def quaternion_table() -> np.ndarray:
    table = np.zeros((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sign, unit = _UNIT_PRODUCT[x // 2][y // 2]
            if (x % 2) ^ (y % 2):
                sign = -sign
            table[x, y] = 2 * unit + (0 if sign > 0 else 1)
    return table


def product_magma(left: Magma, right: Magma, metadata: str | None = None) -> Magma:
    """Direct product; element ``i·|right| + j`` is the pair (i, j)."""
    a = np.asarray(left.table, dtype=np.int64)
    b = np.asarray(right.table, dtype=np.int64)
    table = (a[:, None, :, None] * right.size + b[None, :, None, :]).reshape(left.size * right.size, -1)
    names = None
    if left.names is not None or right.names is not None:
        names = [f"({left.name(i)},{right.name(j)})" for i in left.elements for j in right.elements]
    return build_magma(table, names, metadata)


def generate(spec: FamilySpec, max_size: int = 256) -> Magma:
    """Build the Cayley table of a family member.

    Args:
        spec: Family and parameters
        max_size: Largest accepted magma

    Returns:
        The generated magma; its metadata is the family expression

    Raises:
        ParameterOutOfRange: If the parameters violate the family bounds
    """
    spec.check(max_size)
    logger.debug(f"Generating {spec.label}")
    match spec.kind:
        case FamilyKind.CYCLIC:
            return build_magma(cyclic_table(spec.params[0]), metadata=spec.label)
        case FamilyKind.DIHEDRAL:
            table, names = dihedral_table(spec.params[0])
            return build_magma(table, names, spec.label)
        case FamilyKind.MONOGENIC:
            return build_magma(monogenic_table(*spec.params), metadata=spec.label)
        case FamilyKind.SYMMETRIC:
            table, names = symmetric_table(spec.params[0])
            return build_magma(table, names, spec.label)
        case FamilyKind.QUATERNION8:
            return build_magma(quaternion_table(), QUATERNION_NAMES, spec.label)
        case FamilyKind.FULL_TRANSFORMATION:
            table, names = full_transformation_table(spec.params[0])
            return build_magma(table, names, spec.label)
        case FamilyKind.PRODUCT:
            left, right = (generate(factor, max_size) for factor in spec.factors)
            return product_magma(left, right, spec.label)
        case FamilyKind.FROM_FILE:
            magma = read_magma(Path(spec.path or ""))
            if magma.size > max_size:
                raise ParameterOutOfRange(spec.label, magma.size, f"magma has more than {max_size} elements")
            return magma.model_copy(update={"metadata": spec.label})
    raise ParameterOutOfRange("kind", spec.kind, "unknown family")


def load_source(source: str, max_size: int = 256) -> Magma:
    """Resolve a CLI source: an existing Cayley file, else a family expression."""
    path = Path(source)
    if path.is_file():
        return generate(FamilySpec.from_file(source), max_size)
    return generate(FamilySpec.parse(source), max_size)
