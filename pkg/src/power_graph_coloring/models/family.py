from enum import StrEnum
from math import factorial, prod
from typing import Self

from pydantic import BaseModel, ConfigDict

from power_graph_coloring.exceptions import ParameterOutOfRange, ParseError


class FamilyKind(StrEnum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    MONOGENIC = "monogenic"
    SYMMETRIC = "symmetric"
    QUATERNION8 = "quaternion8"
    FULL_TRANSFORMATION = "full_transformation"
    PRODUCT = "product"
    FROM_FILE = "from_file"


_ARITY = {
    FamilyKind.CYCLIC: 1,
    FamilyKind.DIHEDRAL: 1,
    FamilyKind.MONOGENIC: 2,
    FamilyKind.SYMMETRIC: 1,
    FamilyKind.QUATERNION8: 0,
    FamilyKind.FULL_TRANSFORMATION: 1,
}


class FamilySpec(BaseModel):
    """Description of a finite magma to generate.

    The text form is the constructor expression, e.g. ``cyclic(12)``, ``monogenic(3,2)``,
    ``quaternion8``, ``product(cyclic(2),symmetric(3))`` or ``from_file(tables/z2.txt)``.
    """

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", ...] = ()
    path: str | None = None

    @classmethod
    def cyclic(cls, n: int) -> Self:
        return cls(kind=FamilyKind.CYCLIC, params=(n,))

    @classmethod
    def dihedral(cls, n: int) -> Self:
        return cls(kind=FamilyKind.DIHEDRAL, params=(n,))

    @classmethod
    def monogenic(cls, index: int, period: int) -> Self:
        return cls(kind=FamilyKind.MONOGENIC, params=(index, period))

    @classmethod
    def symmetric(cls, n: int) -> Self:
        return cls(kind=FamilyKind.SYMMETRIC, params=(n,))

    @classmethod
    def quaternion8(cls) -> Self:
        return cls(kind=FamilyKind.QUATERNION8)

    @classmethod
    def full_transformation(cls, n: int) -> Self:
        return cls(kind=FamilyKind.FULL_TRANSFORMATION, params=(n,))

    @classmethod
    def product(cls, left: "FamilySpec", right: "FamilySpec") -> Self:
        return cls(kind=FamilyKind.PRODUCT, factors=(left, right))

    @classmethod
    def from_file(cls, path: str) -> Self:
        return cls(kind=FamilyKind.FROM_FILE, path=path)

    @property
    def size(self) -> int | None:
        """Number of elements, ``None`` for file sources."""
        match self.kind:
            case FamilyKind.CYCLIC:
                return self.params[0]
            case FamilyKind.DIHEDRAL:
                return 2 * self.params[0]
            case FamilyKind.MONOGENIC:
                return self.params[0] + self.params[1] - 1
            case FamilyKind.SYMMETRIC:
                return factorial(self.params[0])
            case FamilyKind.QUATERNION8:
                return 8
            case FamilyKind.FULL_TRANSFORMATION:
                return self.params[0] ** self.params[0]
            case FamilyKind.PRODUCT:
                sizes = [factor.size for factor in self.factors]
                return None if any(s is None for s in sizes) else prod(sizes)  # type: ignore[arg-type]
        return None

    @property
    def label(self) -> str:
        if self.kind == FamilyKind.PRODUCT:
            return f"product({','.join(f.label for f in self.factors)})"
        if self.kind == FamilyKind.FROM_FILE:
            return f"from_file({self.path})"
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}({','.join(str(p) for p in self.params)})"

    def __str__(self) -> str:
        return self.label

    def check(self, max_size: int = 256) -> Self:
        """Validate parameter bounds.

        Raises:
            ParameterOutOfRange: If an arity or a bound is violated
        """
        if self.kind == FamilyKind.PRODUCT:
            if len(self.factors) != 2:
                raise ParameterOutOfRange("product", len(self.factors), "a product takes exactly two factors")
            for factor in self.factors:
                factor.check(max_size)
        elif self.kind == FamilyKind.FROM_FILE:
            if not self.path:
                raise ParameterOutOfRange("from_file", self.path, "a path is required")
        else:
            arity = _ARITY[self.kind]
            if len(self.params) != arity:
                raise ParameterOutOfRange(self.kind.value, self.params, f"expects {arity} parameter(s)")
            if any(p < 1 for p in self.params):
                raise ParameterOutOfRange(self.kind.value, self.params, "parameters must be positive")
            if self.kind == FamilyKind.SYMMETRIC and self.params[0] > 5:
                raise ParameterOutOfRange("symmetric", self.params[0], "n must be at most 5")
            if self.kind == FamilyKind.FULL_TRANSFORMATION and self.params[0] > 4:
                raise ParameterOutOfRange("full_transformation", self.params[0], "n must be at most 4")
        size = self.size
        if size is not None and size > max_size:
            raise ParameterOutOfRange(self.label, size, f"magma would have more than {max_size} elements")
        return self

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse a family expression.

        Raises:
            ParseError: On malformed input, with the 1-based column of the problem
        """
        parser = _SpecParser(text)
        spec = parser.parse_spec()
        parser.skip_spaces()
        if parser.pos != len(text):
            raise parser.error("unexpected trailing input")
        return spec


class _SpecParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, line=1, column=self.pos + 1)

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, char: str) -> None:
        self.skip_spaces()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise self.error(f"expected {char!r}")
        self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def identifier(self) -> str:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a family name")
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a positive integer")
        return int(self.text[start : self.pos])

    def raw_argument(self) -> str:
        self.skip_spaces()
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char == "(":
                depth += 1
            elif char == ")":
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        return self.text[start : self.pos].strip()

    def parse_spec(self) -> FamilySpec:
        start = self.pos
        name = self.identifier()
        if name == "file":
            name = FamilyKind.FROM_FILE.value
        try:
            kind = FamilyKind(name)
        except ValueError:
            self.pos = start
            self.skip_spaces()
            raise self.error(f"unknown family {name!r}") from None

        if kind == FamilyKind.QUATERNION8:
            if self.peek() == "(":
                self.expect("(")
                self.expect(")")
            return FamilySpec(kind=kind)

        self.expect("(")
        if kind == FamilyKind.FROM_FILE:
            path = self.raw_argument()
            self.expect(")")
            return FamilySpec(kind=kind, path=path)
        if kind == FamilyKind.PRODUCT:
            left = self.parse_spec()
            self.expect(",")
            right = self.parse_spec()
            self.expect(")")
            return FamilySpec(kind=kind, factors=(left, right))

        params = [self.integer()]
        while self.peek() == ",":
            self.expect(",")
            params.append(self.integer())
        self.expect(")")
        return FamilySpec(kind=kind, params=tuple(params))
