from collections.abc import Generator
from contextlib import contextmanager
from enum import StrEnum
from typing import Self


class LineEnding(StrEnum):
    LF = "\n"
    CRLF = "\r\n"


class IndentStyle(StrEnum):
    Space = " "
    Tab = "\t"


class StringBuilder:
    """Line-oriented text accumulator used by the Cayley and DOT writers."""

    def __init__(
        self, newline: LineEnding = LineEnding.LF, indent_style: IndentStyle = IndentStyle.Space, indent_size: int = 4
    ) -> None:
        self._indent_level = 0
        self.content: list[str] = []
        self.eol = newline.value
        self.indent_string = indent_style.value * (indent_size if indent_style == IndentStyle.Space else 1)

    def append_line(self, value: str = "") -> Self:
        prefix = self.indent_string * self._indent_level if value else ""
        self.content.append(prefix + value + self.eol)
        return self

    def append_lines(self, values: list[str]) -> Self:
        for value in values:
            self.append_line(value)
        return self

    def indent(self) -> Self:
        self._indent_level += 1
        return self

    def deindent(self) -> Self:
        if self._indent_level > 0:
            self._indent_level -= 1
        return self

    @contextmanager
    def scope(self, opening: str, closing: str) -> Generator[Self, None, None]:
        """Write ``opening``, indent the body, then write ``closing``."""
        self.append_line(opening)
        self.indent()
        try:
            yield self
        finally:
            self.deindent()
            self.append_line(closing)

    def __str__(self) -> str:
        return "".join(self.content)
