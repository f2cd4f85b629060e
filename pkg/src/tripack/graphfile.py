"""Text format for tripartite graphs and certificate files.

Grammar (one declaration per line, ``#`` starts a comment)::

    line  := NAME ':' body
    NAME  := 'A' | 'B' | 'C' | 'AB' | 'AC' | 'BC'
    body  := INT*                      for parts
           | 'complete' | EDGE*        for sides
    EDGE  := INT '-' INT

Parts may be declared once; undeclared parts are empty. A side may span
several lines; its edges accumulate. ``complete`` expands to every pair
of the two parts and cannot be combined with explicit edges.
"""

from __future__ import annotations

import re

from .graph import (
    PART_NAMES,
    SIDE_NAMES,
    SIDE_PARTS,
    Edge,
    Triangle,
    TripartiteGraph,
    require_valid,
)

_INT = re.compile(r"\d+")
_EDGE = re.compile(r"(\d+)\s*-\s*(\d+)")
_TRIANGLE = re.compile(r"(\d+)\s*-\s*(\d+)\s*-\s*(\d+)")
_TOKEN = re.compile(r"\d+(?:\s*-\s*\d+)*(?!\S)|\S+")


class GraphFileError(ValueError):
    pass


class GraphSyntaxError(GraphFileError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


class GraphSemanticError(GraphFileError):
    pass


def _strip_comment(text: str) -> str:
    return text.split("#", 1)[0]


def _tokens(body: str, offset: int):
    """Yield ``(column, token)`` pairs, joining ``u - v`` spellings into one token."""
    for m in _TOKEN.finditer(body):
        yield offset + m.start() + 1, re.sub(r"\s+", "", m.group())


def parse_graph(text: str) -> TripartiteGraph:
    parts: dict[str, list[int]] = {}
    sides: dict[str, list[Edge]] = {}
    complete: set[str] = set()
    where: dict[tuple[str, Edge], int] = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        name, colon, body = line.partition(":")
        if not colon:
            col = len(line) - len(line.lstrip()) + 1
            raise GraphSyntaxError(lineno, col, "expected 'NAME: ...'")
        key = name.strip()
        name_col = line.index(key) + 1 if key else 1
        if key not in PART_NAMES and key not in SIDE_NAMES:
            raise GraphSyntaxError(lineno, name_col, f"unknown declaration {key!r}")
        offset = len(name) + 1
        tokens = list(_tokens(body, offset))
        if key in PART_NAMES:
            if key in parts:
                raise GraphSemanticError(f"line {lineno}: part {key} declared twice")
            values = []
            for col, tok in tokens:
                if not _INT.fullmatch(tok):
                    raise GraphSyntaxError(lineno, col, f"expected vertex id, got {tok!r}")
                values.append(int(tok))
            parts[key] = values
            continue
        edges = sides.setdefault(key, [])
        for col, tok in tokens:
            if tok == "complete":
                if edges or key in complete:
                    raise GraphSemanticError(
                        f"line {lineno}: side {key} mixes 'complete' with explicit edges")
                complete.add(key)
                continue
            m = _EDGE.fullmatch(tok)
            if not m:
                raise GraphSyntaxError(lineno, col, f"expected edge 'u-v' or 'complete', got {tok!r}")
            if key in complete:
                raise GraphSemanticError(
                    f"line {lineno}: side {key} mixes 'complete' with explicit edges")
            e = (int(m.group(1)), int(m.group(2)))
            edges.append(e)
            where.setdefault((key, e), lineno)

    owner: dict[int, str] = {}
    for name in PART_NAMES:
        for v in parts.get(name, []):
            if v in owner:
                raise GraphSemanticError(
                    f"vertex {v} declared in part {owner[v]} and part {name}"
                    if owner[v] != name else f"vertex {v} listed twice in part {name}")
            owner[v] = name

    resolved: dict[str, list[Edge]] = {}
    for side in SIDE_NAMES:
        i, j = SIDE_PARTS[side]
        X, Y = PART_NAMES[i], PART_NAMES[j]
        if side in complete:
            resolved[side] = [(x, y) for x in parts.get(X, []) for y in parts.get(Y, [])]
            continue
        seen: set[Edge] = set()
        out = []
        for u, v in sides.get(side, []):
            at = f"line {where[(side, (u, v))]}: "
            for w in (u, v):
                if w not in owner:
                    raise GraphSemanticError(at + f"edge {u}-{v} uses undeclared vertex {w}")
            pu, pv = owner[u], owner[v]
            if pu == pv:
                raise GraphSemanticError(at + f"edge {u}-{v} has both endpoints in part {pu}")
            if {pu, pv} != {X, Y}:
                raise GraphSemanticError(at + f"edge {u}-{v} joins parts {pu}{pv}, not side {side}")
            e = (u, v) if pu == X else (v, u)
            if e in seen:
                raise GraphSemanticError(at + f"duplicate edge {u}-{v} in side {side}")
            seen.add(e)
            out.append(e)
        resolved[side] = out

    g = TripartiteGraph(
        tuple(parts.get("A", [])), tuple(parts.get("B", [])), tuple(parts.get("C", [])),
        tuple(resolved["AB"]), tuple(resolved["AC"]), tuple(resolved["BC"]),
    )
    require_valid(g)
    return g


def serialize_graph(g: TripartiteGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" if c else "#" for c in comment.splitlines()]
    for name, part in zip(PART_NAMES, g.parts):
        lines.append(f"{name}: {' '.join(map(str, part))}".rstrip())
    for side in SIDE_NAMES:
        edges = g.side(side)
        if edges and g.is_complete(side):
            lines.append(f"{side}: complete")
        else:
            lines.append(f"{side}: {' '.join(f'{u}-{v}' for u, v in edges)}".rstrip())
    return "\n".join(lines) + "\n"


def _certificate_tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        for col, tok in _tokens(body, 0):
            yield lineno, col, tok


def parse_edge_list(text: str) -> list[Edge]:
    """Whitespace-separated ``u-v`` tokens."""
    out = []
    for lineno, col, tok in _certificate_tokens(text):
        m = _EDGE.fullmatch(tok)
        if not m:
            raise GraphSyntaxError(lineno, col, f"expected edge 'u-v', got {tok!r}")
        out.append((int(m.group(1)), int(m.group(2))))
    return out


def parse_triangle_list(text: str) -> list[Triangle]:
    """Whitespace-separated ``a-b-c`` tokens, one vertex from each of A, B, C."""
    out = []
    for lineno, col, tok in _certificate_tokens(text):
        m = _TRIANGLE.fullmatch(tok)
        if not m:
            raise GraphSyntaxError(lineno, col, f"expected triangle 'a-b-c', got {tok!r}")
        out.append(Triangle(*map(int, m.groups())))
    return out
