"""Matrix documents: JSON and plain-text grid parsing, serialization, DOT export.

Two input forms are accepted. JSON:

    {"n": 3, "b": [[0,1,-1],[-1,0,1],[1,-1,0]],
     "attached": [[1,0,0]], "symmetrizer": [1,1,1]}

and a whitespace grid with rows separated by newlines or "/":

    0 -2 / 3 0

A grid with more rows than columns is read as a principal part with attached
rows below. The principal part must be skew-symmetrizable; a supplied
symmetrizer must certify it, otherwise the minimal one is computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotSkewSymmetrizable, ParseError, ShapeViolation
from .matrices import (
    ExchangeMatrix,
    ExtendedMatrix,
    IntMatrix,
    find_symmetrizer,
    frame,
    stack_attached,
)
from .quiver import QuiverGraph


@dataclass(frozen=True)
class MatrixDocument:
    b: IntMatrix
    attached: IntMatrix | None = None
    symmetrizer: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self.b.rows

    def to_exchange(self) -> ExchangeMatrix:
        """Exchange matrix with a canonical (gcd-reduced) symmetrizer."""
        if self.symmetrizer is None:
            return find_symmetrizer(self.b)
        from math import gcd
        from functools import reduce

        g = reduce(gcd, self.symmetrizer) if self.symmetrizer else 1
        return ExchangeMatrix(self.b, tuple(s // g for s in self.symmetrizer))

    def to_extended(self) -> ExtendedMatrix:
        """Attached rows stacked below the principal part; framed when absent."""
        exchange = self.to_exchange()
        if self.attached is None:
            return frame(exchange)
        return stack_attached(exchange, self.attached)


def _validate_document(b: IntMatrix, attached: IntMatrix | None, symmetrizer) -> MatrixDocument:
    if not b.is_square:
        raise ShapeViolation(f"principal part must be square, got {b.rows}x{b.cols}")
    if attached is not None and attached.rows > 0 and attached.cols != b.cols:
        raise ShapeViolation(
            f"attached rows must have {b.cols} columns, got {attached.cols}"
        )
    if symmetrizer is not None:
        symmetrizer = tuple(symmetrizer)
        if len(symmetrizer) != b.rows:
            raise ShapeViolation(
                f"symmetrizer must list {b.rows} entries, got {len(symmetrizer)}"
            )
        if any(isinstance(s, bool) or not isinstance(s, int) or s < 1 for s in symmetrizer):
            raise NotSkewSymmetrizable("symmetrizer entries must be positive integers")
        for i in range(b.rows):
            for j in range(b.rows):
                if symmetrizer[i] * b.entries[i][j] != -symmetrizer[j] * b.entries[j][i]:
                    raise NotSkewSymmetrizable(
                        f"supplied symmetrizer does not certify: fails at ({i + 1},{j + 1})"
                    )
    else:
        symmetrizer = find_symmetrizer(b).symmetrizer
    return MatrixDocument(b=b, attached=attached, symmetrizer=symmetrizer)


def _int_grid(value, what: str) -> IntMatrix:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise ParseError(f"{what} must be an array of arrays")
    for i, row in enumerate(value):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"{what}[{i}][{j}] is not an integer: {v!r}")
    try:
        return IntMatrix(value)
    except ShapeViolation as exc:
        raise ParseError(f"{what}: {exc}") from exc


def document_from_obj(obj) -> MatrixDocument:
    """Build a validated document from already-decoded JSON data."""
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if "b" not in obj:
        raise ParseError('missing required key "b"')
    b = _int_grid(obj["b"], '"b"')
    if "n" in obj and obj["n"] != b.rows:
        raise ParseError(f'"n" is {obj["n"]} but "b" has {b.rows} rows')
    attached = None
    if obj.get("attached") is not None:
        attached = _int_grid(obj["attached"], '"attached"')
    symmetrizer = obj.get("symmetrizer")
    if symmetrizer is not None:
        if not isinstance(symmetrizer, list):
            raise ParseError('"symmetrizer" must be an array of positive integers')
        symmetrizer = tuple(symmetrizer)
    return _validate_document(b, attached, symmetrizer)


def _parse_grid(text: str) -> MatrixDocument:
    rows = []
    lineno = 0
    for raw_line in text.splitlines():
        lineno += 1
        for segment in raw_line.split("/"):
            if not segment.strip():
                continue
            row = []
            for token in segment.split():
                try:
                    row.append(int(token))
                except ValueError:
                    column = raw_line.index(token) + 1
                    raise ParseError(f"not an integer: {token!r}", lineno, column) from None
            rows.append((lineno, row))
    if not rows:
        raise ParseError("empty input")
    width = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != width:
            raise ParseError(f"expected {width} entries, got {len(row)}", lineno)
    grid = [row for _, row in rows]
    if len(grid) < width:
        raise ParseError(f"{len(grid)} rows is too few for {width} columns")
    b = IntMatrix(grid[:width])
    attached = IntMatrix(grid[width:]) if len(grid) > width else None
    return _validate_document(b, attached, None)


def parse_matrix(text: str) -> MatrixDocument:
    """Parse a JSON document or a whitespace grid into a validated document."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        return document_from_obj(obj)
    return _parse_grid(text)


def serialize_matrix(doc: MatrixDocument) -> str:
    """Canonical JSON rendering; parse(serialize(doc)) == doc."""
    payload: dict = {"n": doc.n, "b": doc.b.to_lists()}
    if doc.attached is not None:
        payload["attached"] = doc.attached.to_lists()
    if doc.symmetrizer is not None:
        payload["symmetrizer"] = list(doc.symmetrizer)
    return json.dumps(payload, indent=2) + "\n"


_DOT_FILL = {"green": "palegreen", "red": "lightcoral"}


def emit_dot(Q: QuiverGraph, colors: dict[int, str] | None = None) -> str:
    """Deterministic DOT digraph; weights > 1 become edge labels, and an
    optional vertex -> "green"/"red" map fills the nodes."""
    lines = ["digraph quiver {", "  node [shape=circle];"]
    for v in range(1, Q.n + 1):
        color = (colors or {}).get(v)
        if color is not None:
            fill = _DOT_FILL.get(color)
            if fill is None:
                raise ValueError(f"color for vertex {v} must be 'green' or 'red', got {color!r}")
            lines.append(f'  {v} [style=filled, fillcolor={fill}];')
        else:
            lines.append(f"  {v};")
    for src, dst, weight in Q.arrows:
        if weight > 1:
            lines.append(f'  {src} -> {dst} [label="{weight}"];')
        else:
            lines.append(f"  {src} -> {dst};")
    lines.append("}")
    return "\n".join(lines) + "\n"
