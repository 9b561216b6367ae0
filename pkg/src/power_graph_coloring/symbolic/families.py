"""Closed-form arithmetic for the three symbolic infinite families.

A family only has to say how to take powers, how to solve y^n = x^m, how to list its
elements inside a window and how two infinite-order elements are related. Adding a
family means subclassing ``SymbolicFamily`` and registering it in ``family_from_name``.
"""

from abc import ABC, abstractmethod
from math import gcd
import re

from power_graph_coloring.algebra.generators import cyclic_table
from power_graph_coloring.algebra.magma import build_magma
from power_graph_coloring.exceptions import ParameterOutOfRange
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.models.window import FamilyTag, Window, WindowElement

Coordinates = tuple[int, int]


class SymbolicFamily(ABC):
    """An infinite power-associative magma realized by closed-form formulas."""

    tag: FamilyTag

    @property
    @abstractmethod
    def label(self) -> str:
        pass

    @abstractmethod
    def power_coordinates(self, a: int, b: int, j: int) -> Coordinates:
        """Coordinates of x^j for x = (a, b)."""

    @abstractmethod
    def root_coordinates(self, a: int, b: int, m: int, n: int, w: int) -> list[Coordinates]:
        """Coordinates of every y with |first coordinate| <= w and y^n = x^m, x = (a, b) of infinite order."""

    @abstractmethod
    def window_coordinates(self, w: int) -> list[Coordinates]:
        """Every element inside the window, in canonical order."""

    @abstractmethod
    def minimal_relation(self, x: WindowElement, y: WindowElement) -> tuple[int, int] | None:
        """Lexicographically smallest (m, n) with x^m = y^n, ``None`` when there is none."""

    def component_key(self, x: WindowElement) -> str:
        """Name of the connected component of P_*(G) containing the infinite-order element ``x``."""
        return "+" if x.a > 0 else "-"

    def finite_part(self) -> tuple[Magma, list[WindowElement]] | None:
        """The finite-order elements as a finite magma, element i of the magma being the i-th listed element."""
        return None

    def element(self, a: int, b: int = 0) -> WindowElement:
        return WindowElement(family=self.tag, a=a, b=b)

    def is_infinite_order(self, x: WindowElement) -> bool:
        return x.a != 0

    def power(self, x: WindowElement, j: int) -> WindowElement:
        return self.element(*self.power_coordinates(x.a, x.b, j))

    def in_window(self, x: WindowElement, window: Window) -> bool:
        return abs(x.a) <= window.w

    def enumerate(self, window: Window) -> list[WindowElement]:
        return [self.element(a, b) for a, b in self.window_coordinates(window.w)]

    def solve(self, x: WindowElement, m: int, n: int, window: Window) -> list[WindowElement]:
        return [self.element(a, b) for a, b in self.root_coordinates(x.a, x.b, m, n, window.w)]

    def __str__(self) -> str:
        return self.label


def _same_sign_ratio(p: int, q: int) -> tuple[int, int] | None:
    """Smallest (m, n) with m·p = n·q, or ``None`` when p and q differ in sign."""
    if p == 0 or q == 0 or (p > 0) != (q > 0):
        return None
    g = gcd(p, q)
    return abs(q) // g, abs(p) // g


class IntegerFamily(SymbolicFamily):
    """The infinite cyclic group Z written multiplicatively, t^a with identity t^0."""

    tag = FamilyTag.Z

    @property
    def label(self) -> str:
        return "Z"

    def power_coordinates(self, a: int, b: int, j: int) -> Coordinates:
        return a * j, 0

    def root_coordinates(self, a: int, b: int, m: int, n: int, w: int) -> list[Coordinates]:
        target = a * m
        if target % n or abs(target // n) > w:
            return []
        return [(target // n, 0)]

    def window_coordinates(self, w: int) -> list[Coordinates]:
        return sorted(((a, 0) for a in range(-w, w + 1)), key=lambda c: (abs(c[0]), c[0]))

    def minimal_relation(self, x: WindowElement, y: WindowElement) -> tuple[int, int] | None:
        return _same_sign_ratio(x.a, y.a)

    def finite_part(self) -> tuple[Magma, list[WindowElement]]:
        return build_magma([[0]], names=["t^0"], metadata="Z torsion"), [self.element(0)]


class ProductFamily(SymbolicFamily):
    """The direct product Z x Z_k, pairs (a, b) with b in [0, k)."""

    tag = FamilyTag.ZXZK

    def __init__(self, k: int) -> None:
        if k < 1:
            raise ParameterOutOfRange("k", k, "the cyclic factor needs at least one element")
        self.k = k

    @property
    def label(self) -> str:
        return f"ZxZ{self.k}"

    def element(self, a: int, b: int = 0) -> WindowElement:
        return WindowElement(family=self.tag, a=a, b=b % self.k, k=self.k)

    def power_coordinates(self, a: int, b: int, j: int) -> Coordinates:
        return a * j, (b * j) % self.k

    def root_coordinates(self, a: int, b: int, m: int, n: int, w: int) -> list[Coordinates]:
        target = a * m
        if target % n or abs(target // n) > w:
            return []
        # n·b' = m·b (mod k) has gcd(n, k) solutions exactly when gcd(n, k) divides m·b
        d = gcd(n, self.k)
        rhs = m * b
        if rhs % d:
            return []
        step = self.k // d
        base = 0 if step == 1 else ((rhs // d) * pow(n // d, -1, step)) % step
        return [(target // n, base + t * step) for t in range(d)]

    def window_coordinates(self, w: int) -> list[Coordinates]:
        coordinates = [(a, b) for a in range(-w, w + 1) for b in range(self.k)]
        return sorted(coordinates, key=lambda c: (abs(c[0]), c[0], c[1]))

    def minimal_relation(self, x: WindowElement, y: WindowElement) -> tuple[int, int] | None:
        ratio = _same_sign_ratio(x.a, y.a)
        if ratio is None:
            return None
        m0, n0 = ratio
        # every solution is t·(m0, n0); the Z_k coordinate needs t·(m0·b_x - n0·b_y) = 0 (mod k)
        t = self.k // gcd(m0 * x.b - n0 * y.b, self.k)
        return m0 * t, n0 * t

    def finite_part(self) -> tuple[Magma, list[WindowElement]]:
        magma = build_magma(cyclic_table(self.k), metadata=f"{self.label} torsion")
        return magma, [self.element(0, b) for b in range(self.k)]


class FreeMonogenicFamily(SymbolicFamily):
    """The free monogenic semigroup, g^e for e >= 1."""

    tag = FamilyTag.FREE_MONO

    @property
    def label(self) -> str:
        return "FreeMono"

    def is_infinite_order(self, x: WindowElement) -> bool:
        return True

    def power_coordinates(self, a: int, b: int, j: int) -> Coordinates:
        return a * j, 0

    def root_coordinates(self, a: int, b: int, m: int, n: int, w: int) -> list[Coordinates]:
        target = a * m
        if target % n or target // n > w:
            return []
        return [(target // n, 0)]

    def window_coordinates(self, w: int) -> list[Coordinates]:
        return [(e, 0) for e in range(1, w + 1)]

    def in_window(self, x: WindowElement, window: Window) -> bool:
        return 1 <= x.a <= window.w

    def minimal_relation(self, x: WindowElement, y: WindowElement) -> tuple[int, int] | None:
        return _same_sign_ratio(x.a, y.a)

    def component_key(self, x: WindowElement) -> str:
        return "all"


_PRODUCT_NAME = re.compile(r"^ZxZ(?:k:)?(\d+)$")


def family_from_name(name: str) -> SymbolicFamily:
    """Resolve ``Z``, ``FreeMono``, ``ZxZk:K`` or ``ZxZK`` to a family.

    Raises:
        ParameterOutOfRange: If the name is unknown or k < 1
    """
    if name == "Z":
        return IntegerFamily()
    if name == "FreeMono":
        return FreeMonogenicFamily()
    match = _PRODUCT_NAME.match(name)
    if match:
        return ProductFamily(int(match.group(1)))
    raise ParameterOutOfRange("family", name, "expected Z, ZxZk:K or FreeMono")


def family_of(x: WindowElement) -> SymbolicFamily:
    match x.family:
        case FamilyTag.Z:
            return IntegerFamily()
        case FamilyTag.ZXZK:
            # the element validator guarantees k >= 1
            return ProductFamily(x.k)  # type: ignore[arg-type]
    return FreeMonogenicFamily()
