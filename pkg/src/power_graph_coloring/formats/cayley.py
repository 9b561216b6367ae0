"""Cayley table text and JSON formats.

Text format::

    2
    0 1
    1 0
    # name: e
    # name: a

Line 1 holds the size N, the next N lines the rows of 0-based indices (row g, column h
is g·h). ``# name: <label>`` lines assign display names to elements 0..N-1 in order; any
other line starting with ``#`` is a comment. The JSON format mirrors the same fields.
"""

from enum import StrEnum
import json
from pathlib import Path
from typing import Any

from power_graph_coloring.algebra.magma import build_magma
from power_graph_coloring.exceptions import ParseError
from power_graph_coloring.models.magma import Magma
from power_graph_coloring.utils.stringbuilder import StringBuilder

NAME_PREFIX = "# name:"


class CayleyFormat(StrEnum):
    TEXT = "text"
    JSON = "json"


def _tokens(line: str) -> list[tuple[int, str]]:
    """Split a line into (1-based column, token) pairs."""
    tokens = []
    column = 0
    for part in line.split():
        column = line.index(part, column)
        tokens.append((column + 1, part))
        column += len(part)
    return tokens


def _integer(token: str, line: int, column: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected {what}, found {token!r}", line, column) from None


def parse_magma(text: str) -> Magma:
    """Parse the Cayley text format.

    Raises:
        ParseError: On malformed input, with the 1-based line and column
        ClosureViolation: If an entry is not an element index
        DimensionMismatch: If the number of names differs from the size
    """
    size: int | None = None
    rows: list[list[int]] = []
    names: list[str] = []
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith(NAME_PREFIX):
                names.append(line[len(NAME_PREFIX) :].strip())
            continue
        tokens = _tokens(raw)
        if size is None:
            if len(tokens) != 1:
                raise ParseError("the first line must hold the table size only", number, 1)
            column, token = tokens[0]
            size = _integer(token, number, column, "the table size")
            if size < 1:
                raise ParseError("the table size must be positive", number, column)
            continue
        if len(rows) == size:
            raise ParseError(f"more than {size} table rows", number, tokens[0][0])
        if len(tokens) != size:
            column = tokens[size][0] if len(tokens) > size else len(raw) + 1
            raise ParseError(f"row {len(rows)} has {len(tokens)} entries, expected {size}", number, column)
        rows.append([_integer(token, number, column, "an element index") for column, token in tokens])

    if size is None:
        raise ParseError("missing table size", max(last_line, 1), 1)
    if len(rows) < size:
        raise ParseError(f"expected {size} table rows, found {len(rows)}", last_line + 1, 1)
    return build_magma(rows, names or None)


def serialize_magma(magma: Magma) -> str:
    builder = StringBuilder()
    builder.append_line(str(magma.size))
    for row in magma.table:
        builder.append_line(" ".join(str(value) for value in row))
    if magma.names is not None:
        builder.append_lines([f"{NAME_PREFIX} {name}" for name in magma.names])
    return str(builder)


def parse_magma_json(text: str) -> Magma:
    """Parse the JSON format ``{"size": N, "table": [[...]], "names": [...], "metadata": "..."}``."""
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or not isinstance(data.get("table"), list):
        raise ParseError("expected an object with a 'table' array", 1, 1)
    table = data["table"]
    if "size" in data and data["size"] != len(table):
        raise ParseError(f"size {data['size']} does not match {len(table)} table rows", 1, 1)
    if not all(isinstance(row, list) for row in table):
        raise ParseError("every table row must be an array", 1, 1)
    names = data.get("names")
    if names is not None and not (isinstance(names, list) and all(isinstance(name, str) for name in names)):
        raise ParseError("'names' must be an array of strings", 1, 1)
    metadata = data.get("metadata")
    if metadata is not None and not isinstance(metadata, str):
        raise ParseError("'metadata' must be a string", 1, 1)
    return build_magma(table, names, metadata)


def serialize_magma_json(magma: Magma) -> str:
    data: dict[str, Any] = {"size": magma.size, "table": [list(row) for row in magma.table]}
    if magma.names is not None:
        data["names"] = list(magma.names)
    if magma.metadata is not None:
        data["metadata"] = magma.metadata
    return json.dumps(data, indent=2) + "\n"


def format_for(path: Path) -> CayleyFormat:
    return CayleyFormat.JSON if path.suffix.lower() == ".json" else CayleyFormat.TEXT


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_start = raw.rfind(b"\n", 0, exc.start) + 1
        line = raw.count(b"\n", 0, exc.start) + 1
        raise ParseError("file is not valid UTF-8", line, exc.start - line_start + 1) from exc


def read_magma(path: Path) -> Magma:
    """Read a Cayley file; a ``.json`` suffix selects the JSON format.

    Raises:
        ParseError: If the file is not UTF-8 or is malformed
    """
    text = _decode(path.read_bytes())
    if format_for(path) == CayleyFormat.JSON:
        return parse_magma_json(text)
    return parse_magma(text)


def write_magma(magma: Magma, path: Path, fmt: CayleyFormat | None = None) -> Path:
    fmt = fmt or format_for(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = serialize_magma_json(magma) if fmt == CayleyFormat.JSON else serialize_magma(magma)
    path.write_text(text, encoding="utf-8")
    return path
