"""
Readers and writers for the toolkit's text and JSON formats.

Formats:
    - Graph text: first line `n`, then one `u v` edge per line (0-based).
      Blank lines and lines starting with `#` are ignored.
    - Graph JSON: `{"n": int, "edges": [[u, v], ...]}`.
    - Table text: one `bitstring count` per line.
    - Tableau text: one row per variable occurrence, plus side left, minus
      side right, a `-` between the two brackets of the first row:

          [1 0 1 1] - [1 1 1 1]
          [1 1 1 0]   [1 0 1 0]

    - Move JSON: `{"plus": ["1011", ...], "minus": ["1111", ...]}`.

Parse failures raise `ParseError` carrying the 1-based line number.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from pydantic import BaseModel, ValidationError

from app.core.errors import ArgumentError, ParseError
from app.models.graph import Graph
from app.models.table import Move, Table, parse_cell


class GraphIn(BaseModel):
    """JSON mirror of a graph."""
    n: int
    edges: list[tuple[int, int]] = []


class MoveIn(BaseModel):
    """JSON mirror of a move as lists of index strings."""
    plus: list[str]
    minus: list[str]


class TableIn(BaseModel):
    """JSON mirror of a table."""
    n: int
    entries: dict[str, int] = {}


# ==========================================================
# Graphs
# ==========================================================

def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def parse_graph_text(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file", line=1)
    first_no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"expected vertex count, got {first!r}", line=first_no)
    if n < 0:
        raise ParseError("vertex count must be nonnegative", line=first_no)
    edges = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", line=no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", line=no)
        if u == v:
            raise ParseError(f"loop {u} {v} is not allowed", line=no)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph_text(g: Graph) -> str:
    h, _ = g.relabeled()
    return "\n".join([str(h.n), *(f"{u} {v}" for u, v in h.sorted_edges)]) + "\n"


def parse_graph_json(text: str) -> Graph:
    try:
        data = GraphIn.model_validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"invalid graph JSON: {exc.errors()[0]['msg']}", line=1)
    try:
        return Graph.from_edges(data.n, data.edges)
    except ArgumentError as exc:
        raise ParseError(str(exc), line=1)


def graph_to_json(g: Graph) -> str:
    h, _ = g.relabeled()
    return GraphIn(n=h.n, edges=list(h.sorted_edges)).model_dump_json()


def load_graph(path: str | Path) -> Graph:
    """Read a graph file, choosing JSON or text by content."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_graph_json(text) if text.lstrip().startswith("{") else parse_graph_text(text)


# ==========================================================
# Tables
# ==========================================================

def parse_table_text(text: str, n: int | None = None) -> Table:
    counts: dict[int, int] = {}
    width = n
    for no, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'bitstring count', got {line!r}", line=no)
        bits, count = parts
        if width is None:
            width = len(bits)
        if len(bits) != width:
            raise ParseError(f"index string {bits!r} has length {len(bits)}, expected {width}", line=no)
        try:
            cell, k = parse_cell(bits), int(count)
        except (ArgumentError, ValueError):
            raise ParseError(f"bad entry {line!r}", line=no)
        if k < 0:
            raise ParseError("negative count", line=no)
        counts[cell] = counts.get(cell, 0) + k
    if width is None:
        raise ParseError("empty table file without a dimension", line=1)
    return Table.from_counts(width, counts)


def format_table_text(t: Table) -> str:
    return "".join(f"{format(c, f'0{t.n}b')} {k}\n" for c, k in sorted(t.entries.items()))


def table_to_json(t: Table) -> str:
    return TableIn(n=t.n, entries={format(c, f"0{t.n}b"): k for c, k in sorted(t.entries.items())}).model_dump_json()


def parse_table_json(text: str) -> Table:
    try:
        data = TableIn.model_validate_json(text)
        return Table.from_counts(data.n, {parse_cell(b): k for b, k in data.entries.items()})
    except (ValidationError, ArgumentError) as exc:
        raise ParseError(f"invalid table JSON: {exc}", line=1)


# ==========================================================
# Moves
# ==========================================================

_ROW = re.compile(r"^\[([01 ]*)\]\s*(-?)\s*\[([01 ]*)\]$")


def format_tableau(m: Move) -> str:
    plus, minus = m.plus.rows(), m.minus.rows()
    height = max(len(plus), len(minus))
    width = 2 * m.n - 1 if m.n else 0
    lines = []
    for i in range(height):
        left = " ".join(plus[i]) if i < len(plus) else ""
        right = " ".join(minus[i]) if i < len(minus) else ""
        sep = " - " if i == 0 else "   "
        lines.append(f"[{left:<{width}}]{sep}[{right:<{width}}]")
    return "\n".join(lines) + "\n"


def parse_tableau(text: str) -> Move:
    plus, minus = [], []
    n = None
    for k, (no, line) in enumerate(_content_lines(text)):
        match = _ROW.match(line)
        if not match:
            raise ParseError(f"not a tableau row: {line!r}", line=no)
        left, dash, right = match.groups()
        if (k == 0) != bool(dash):
            raise ParseError("the '-' must appear on the first row only", line=no)
        for side, acc in ((left, plus), (right, minus)):
            bits = side.replace(" ", "")
            if not bits:
                continue
            if n is None:
                n = len(bits)
            if len(bits) != n:
                raise ParseError(f"row {bits!r} has length {len(bits)}, expected {n}", line=no)
            acc.append(parse_cell(bits))
    if n is None:
        raise ParseError("empty tableau", line=1)
    return Move(Table(n, tuple(plus)), Table(n, tuple(minus)))


def move_to_json(m: Move) -> str:
    return MoveIn(plus=m.plus.rows(), minus=m.minus.rows()).model_dump_json()


def move_from_rows(plus: list[str], minus: list[str]) -> Move:
    width = len((plus or minus or [""])[0])
    if any(len(r) != width for r in plus + minus):
        raise ArgumentError("index strings have different lengths")
    return Move(
        Table(width, tuple(parse_cell(r) for r in plus)),
        Table(width, tuple(parse_cell(r) for r in minus)),
    )


def parse_move_json(text: str) -> Move:
    try:
        data = MoveIn.model_validate_json(text)
        return move_from_rows(data.plus, data.minus)
    except (ValidationError, ArgumentError) as exc:
        raise ParseError(f"invalid move JSON: {exc}", line=1)


def load_moves(path: str | Path) -> list[Move]:
    """
    Read a move file: a JSON list of move objects, or tableau blocks separated
    by blank lines.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        items = json.loads(text)
    except json.JSONDecodeError:
        items = None
    if isinstance(items, list) and all(isinstance(i, dict) for i in items):
        return [parse_move_json(json.dumps(item)) for item in items]
    moves, block, offset = [], [], 0
    for no, raw in enumerate(text.splitlines() + [""], start=1):
        if raw.strip():
            if not block:
                offset = no - 1
            block.append(raw)
        elif block:
            try:
                moves.append(parse_tableau("\n".join(block)))
            except ParseError as exc:
                raise ParseError(str(exc).split(": ", 1)[-1], line=offset + (exc.line or 1))
            block = []
    return moves


def load_table(path: str | Path, n: int | None = None) -> Table:
    """Read a table file, choosing JSON or text by content."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_table_json(text) if text.lstrip().startswith("{") else parse_table_text(text, n)
