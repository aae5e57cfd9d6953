"""Text formats for matrices, diagrams and unfoldings.

All formats are line-oriented UTF-8 with LF endings; `#` starts a comment
line.  Parse errors carry the 1-based line number.
"""

from __future__ import annotations

from typing import List, Tuple, Union

from .diagram import Diagram
from .errors import ParseError
from .matrix import ExchangeMatrix, validate
from .unfolding import UnfoldingSpec

Value = Union[ExchangeMatrix, Diagram, UnfoldingSpec]


def _logical_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((no, line))
    return out


def _parse_matrix_block(lines: List[Tuple[int, str]], at: int) -> Tuple[ExchangeMatrix, int]:
    no, header = lines[at]
    parts = header.split()
    if parts[0] != "matrix" or len(parts) != 2:
        raise ParseError(f"expected 'matrix <n>', got {header!r}", line=no)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad matrix order {parts[1]!r}", line=no)
    if n < 1:
        raise ParseError("matrix order must be positive", line=no)
    rows = []
    for r in range(n):
        if at + 1 + r >= len(lines):
            raise ParseError(f"matrix needs {n} rows, found {r}", line=no)
        rno, row = lines[at + 1 + r]
        try:
            vals = [int(x) for x in row.split()]
        except ValueError:
            raise ParseError(f"non-integer matrix entry in {row!r}", line=rno)
        if len(vals) != n:
            raise ParseError(f"row has {len(vals)} entries, expected {n}", line=rno)
        rows.append(vals)
    return validate(rows), at + 1 + n


def parse_matrix(text: str) -> ExchangeMatrix:
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty input")
    matrix, at = _parse_matrix_block(lines, 0)
    if at != len(lines):
        raise ParseError("trailing content after matrix", line=lines[at][0])
    return matrix


def parse_diagram(text: str) -> Diagram:
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty input")
    no, header = lines[0]
    parts = header.split()
    if parts[0] != "diagram" or len(parts) != 2:
        raise ParseError(f"expected 'diagram <n>', got {header!r}", line=no)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad diagram order {parts[1]!r}", line=no)
    edges = []
    for eno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'tail head weight', got {line!r}", line=eno)
        try:
            t, h, w = (int(x) for x in parts)
        except ValueError:
            raise ParseError(f"non-integer edge field in {line!r}", line=eno)
        edges.append((t, h, w))
    try:
        return Diagram(n, edges)
    except Exception as exc:
        raise ParseError(str(exc), line=no)


def parse_unfolding(text: str) -> UnfoldingSpec:
    lines = _logical_lines(text)
    if not lines or lines[0][1] != "unfolding":
        raise ParseError("expected 'unfolding' header")
    at = 1
    if at >= len(lines) or lines[at][1] != "base":
        raise ParseError("expected 'base' section", line=lines[min(at, len(lines) - 1)][0])
    base, at = _parse_matrix_block(lines, at + 1)
    if at >= len(lines) or not lines[at][1].startswith("partition"):
        raise ParseError("expected 'partition' line")
    pno, pline = lines[at]
    spec = pline[len("partition"):].strip()
    if "|" in spec:
        groups = []
        for chunk in spec.split("|"):
            try:
                groups.append(tuple(int(x) for x in chunk.split()))
            except ValueError:
                raise ParseError(f"bad partition group {chunk!r}", line=pno)
    else:
        try:
            sizes = [int(x) for x in spec.split()]
        except ValueError:
            raise ParseError(f"bad partition sizes {spec!r}", line=pno)
        groups = []
        start = 1
        for s in sizes:
            groups.append(tuple(range(start, start + s)))
            start += s
    at += 1
    if at >= len(lines) or lines[at][1] != "cover":
        raise ParseError("expected 'cover' section")
    cover, at = _parse_matrix_block(lines, at + 1)
    if at != len(lines):
        raise ParseError("trailing content after cover", line=lines[at][0])
    return UnfoldingSpec(base, groups, cover)


def parse_input(text: str) -> Value:
    """Parse matrix, diagram or unfolding text by its header word."""
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty input")
    head = lines[0][1].split()[0]
    if head == "matrix":
        return parse_matrix(text)
    if head == "diagram":
        return parse_diagram(text)
    if head == "unfolding":
        return parse_unfolding(text)
    raise ParseError(f"unknown header {head!r}", line=lines[0][0])


def print_matrix(B: ExchangeMatrix) -> str:
    lines = [f"matrix {B.n}"]
    lines += [" ".join(str(x) for x in row) for row in B.rows]
    return "\n".join(lines) + "\n"


def print_diagram(S: Diagram) -> str:
    lines = [f"diagram {S.n}"]
    lines += [f"{t} {h} {w}" for t, h, w in S.edges]
    return "\n".join(lines) + "\n"


def print_unfolding(spec: UnfoldingSpec) -> str:
    part = "|".join(" ".join(str(x) for x in grp) for grp in spec.partition)
    return (
        "unfolding\nbase\n"
        + print_matrix(spec.base)
        + f"partition {part}\ncover\n"
        + print_matrix(spec.cover)
    )


def print_value(value: Value) -> str:
    if isinstance(value, ExchangeMatrix):
        return print_matrix(value)
    if isinstance(value, Diagram):
        return print_diagram(value)
    return print_unfolding(value)
