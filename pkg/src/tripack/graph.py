"""Tripartite graphs, triangles, and the transversal/packing predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

Edge = tuple[int, int]

PART_NAMES = ("A", "B", "C")
SIDE_NAMES = ("AB", "AC", "BC")
# side name -> (index of first part, index of second part)
SIDE_PARTS = {"AB": (0, 1), "AC": (0, 2), "BC": (1, 2)}


class GraphError(ValueError):
    """Base class for problems with an input graph."""


class InvalidGraphError(GraphError):
    """The graph violates a structural requirement (see :func:`validate`)."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("invalid tripartite graph: " + "; ".join(report.errors))


class NotBilaterallyComplete(GraphError):
    """No part can serve as apex: fewer than two complete sides share a part."""


class PreconditionError(ValueError):
    """An argument refers to edges or triangles that are not in the graph."""


class Triangle(NamedTuple):
    a: int
    b: int
    c: int

    def edges(self) -> tuple[Edge, Edge, Edge]:
        return (self.a, self.b), (self.a, self.c), (self.b, self.c)


@dataclass(frozen=True)
class TripartiteGraph:
    """A graph ``G = (A, B, C; E)`` with its three side edge sets.

    Edges are stored oriented: the endpoint in the earlier part comes
    first, so ``ab`` holds pairs ``(a, b)``, ``ac`` pairs ``(a, c)`` and
    ``bc`` pairs ``(b, c)``. Edges given the other way round are flipped
    on construction; anything that cannot be oriented is kept verbatim
    for :func:`validate` to report.
    """

    A: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    C: tuple[int, ...] = ()
    ab: tuple[Edge, ...] = ()
    ac: tuple[Edge, ...] = ()
    bc: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        parts = [tuple(sorted(int(v) for v in part)) for part in (self.A, self.B, self.C)]
        for name, part in zip(PART_NAMES, parts):
            object.__setattr__(self, name, part)
        members = [set(part) for part in parts]
        for side, (i, j) in SIDE_PARTS.items():
            oriented = []
            for u, v in getattr(self, side.lower()):
                u, v = int(u), int(v)
                if u in members[j] and v in members[i] and not (u in members[i] and v in members[j]):
                    u, v = v, u
                oriented.append((u, v))
            object.__setattr__(self, side.lower(), tuple(sorted(oriented)))

    @classmethod
    def complete(cls, p: int, q: int, r: int) -> TripartiteGraph:
        """``K_{p,q,r}`` with parts ``0..p-1``, ``p..p+q-1``, ``p+q..p+q+r-1``."""
        A = range(p)
        B = range(p, p + q)
        C = range(p + q, p + q + r)
        return cls(
            tuple(A), tuple(B), tuple(C),
            ab=tuple((a, b) for a in A for b in B),
            ac=tuple((a, c) for a in A for c in C),
            bc=tuple((b, c) for b in B for c in C),
        )

    @classmethod
    def bilateral(cls, A: Iterable[int], B: Iterable[int], C: Iterable[int],
                  bc: Iterable[Edge]) -> TripartiteGraph:
        """Graph with complete sides AB and AC and the given BC edges."""
        A, B, C = tuple(A), tuple(B), tuple(C)
        return cls(
            A, B, C,
            ab=tuple((a, b) for a in A for b in B),
            ac=tuple((a, c) for a in A for c in C),
            bc=tuple(bc),
        )

    @property
    def p(self) -> int:
        return len(self.A)

    @property
    def q(self) -> int:
        return len(self.B)

    @property
    def r(self) -> int:
        return len(self.C)

    @property
    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return self.A, self.B, self.C

    def side(self, name: str) -> tuple[Edge, ...]:
        return getattr(self, name.lower())

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.A + self.B + self.C))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges in canonical (oriented, sorted) order."""
        return tuple(sorted(set(self.ab) | set(self.ac) | set(self.bc)))

    @cached_property
    def _part_index(self) -> dict[int, int]:
        index: dict[int, int] = {}
        for i, part in enumerate(self.parts):
            for v in part:
                index.setdefault(v, i)
        return index

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def part_of(self, v: int) -> int | None:
        """Index (0, 1, 2) of the part holding ``v``, or None."""
        return self._part_index.get(v)

    def orient(self, u: int, v: int) -> Edge:
        """Return ``{u, v}`` with the earlier-part endpoint first."""
        pu, pv = self.part_of(u), self.part_of(v)
        if pu is None or pv is None or pu == pv:
            raise PreconditionError(f"{u}-{v} does not join two different parts")
        return (u, v) if pu < pv else (v, u)

    def has_edge(self, u: int, v: int) -> bool:
        try:
            return self.orient(u, v) in self._edge_set
        except PreconditionError:
            return False

    def is_complete(self, side: str) -> bool:
        i, j = SIDE_PARTS[side]
        X, Y = set(self.parts[i]), set(self.parts[j])
        present = {(u, v) for u, v in self.side(side) if u in X and v in Y}
        return len(present) == len(X) * len(Y)

    def relabel(self, order: tuple[int, int, int]) -> TripartiteGraph:
        """Permute the part roles: new part ``k`` is old part ``order[k]``."""
        parts = self.parts
        new_parts = [parts[k] for k in order]
        sides = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            oi, oj = order[i], order[j]
            name = PART_NAMES[min(oi, oj)] + PART_NAMES[max(oi, oj)]
            edges = self.side(name)
            sides.append(edges if oi < oj else tuple((v, u) for u, v in edges))
        return TripartiteGraph(*new_parts, *sides)


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...]
    complete: dict[str, bool] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.errors

    @property
    def apex_candidates(self) -> tuple[str, ...]:
        """Parts whose two incident sides are both complete."""
        c = self.complete
        out = []
        if c.get("AB") and c.get("AC"):
            out.append("A")
        if c.get("AB") and c.get("BC"):
            out.append("B")
        if c.get("AC") and c.get("BC"):
            out.append("C")
        return tuple(out)

    @property
    def bilaterally_complete(self) -> bool:
        return self.valid and bool(self.apex_candidates)


def validate(g: TripartiteGraph) -> ValidationReport:
    """Check the structural assumptions on ``g``; problems are reported, not raised."""
    errors: list[str] = []
    seen: dict[int, str] = {}
    for name, part in zip(PART_NAMES, g.parts):
        for v in part:
            if v < 0:
                errors.append(f"vertex {v} in part {name} is negative")
            if v in seen:
                if seen[v] == name:
                    errors.append(f"vertex {v} listed twice in part {name}")
                else:
                    errors.append(f"vertex {v} is in parts {seen[v]} and {name}")
            else:
                seen[v] = name
    members = [set(part) for part in g.parts]
    for side, (i, j) in SIDE_PARTS.items():
        prev = None
        for u, v in g.side(side):
            if u == v:
                errors.append(f"self-loop {u}-{v} in side {side}")
            elif u in members[i] and v in members[j]:
                if (u, v) == prev:
                    errors.append(f"duplicate edge {u}-{v} in side {side}")
            elif any(u in m and v in m for m in members):
                errors.append(f"edge {u}-{v} in side {side} lies within a part")
            else:
                errors.append(f"edge {u}-{v} in side {side} does not join parts "
                              f"{PART_NAMES[i]} and {PART_NAMES[j]}")
            prev = (u, v)
    complete = {side: g.is_complete(side) for side in SIDE_NAMES}
    return ValidationReport(tuple(errors), complete)


def require_valid(g: TripartiteGraph) -> ValidationReport:
    report = validate(g)
    if not report.valid:
        raise InvalidGraphError(report)
    return report


@dataclass(frozen=True)
class Orientation:
    """A relabelling of the parts so that part A is the apex.

    ``order[k]`` is the input part index playing role ``k``; ``graph`` is
    the relabelled graph (same vertex ids, permuted roles).
    """

    order: tuple[int, int, int]
    graph: TripartiteGraph

    @property
    def apex(self) -> str:
        return PART_NAMES[self.order[0]]

    @property
    def is_identity(self) -> bool:
        return self.order == (0, 1, 2)

    def triangle_to_input(self, t: Triangle) -> Triangle:
        roles = [0, 0, 0]
        for k, v in zip(self.order, t):
            roles[k] = v
        return Triangle(*roles)


def detect_orientation(g: TripartiteGraph) -> Orientation:
    """Pick the apex part: both incident sides complete, smallest part, then input order."""
    report = require_valid(g)
    candidates = [PART_NAMES.index(name) for name in report.apex_candidates]
    if not candidates:
        raise NotBilaterallyComplete(
            "no part has both incident sides complete "
            f"(complete sides: {[s for s in SIDE_NAMES if report.complete[s]] or 'none'})")
    apex = min(candidates, key=lambda k: (len(g.parts[k]), k))
    order = (apex, *(k for k in range(3) if k != apex))
    return Orientation(order, g.relabel(order))  # type: ignore[arg-type]


def enumerate_triangles(g: TripartiteGraph) -> list[Triangle]:
    """All triangles of ``g`` sorted by ``(a, b, c)``."""
    ab = set(g.ab)
    ac = set(g.ac)
    found = [Triangle(a, b, c) for b, c in set(g.bc) for a in g.A
             if (a, b) in ab and (a, c) in ac]
    return sorted(found)


def _oriented_edges(g: TripartiteGraph, edges: Iterable[Edge]) -> set[Edge]:
    out = set()
    for u, v in edges:
        e = g.orient(u, v)
        if e not in g._edge_set:
            raise PreconditionError(f"edge {u}-{v} is not in the graph")
        out.add(e)
    return out


def is_transversal(g: TripartiteGraph, edges: Iterable[Edge]) -> bool:
    """True iff every triangle of ``g`` has an edge in ``edges``."""
    chosen = _oriented_edges(g, edges)
    return all(not chosen.isdisjoint(t.edges()) for t in enumerate_triangles(g))


def check_triangle(g: TripartiteGraph, t: Iterable[int]) -> Triangle:
    t = Triangle(*t)
    if (g.part_of(t.a), g.part_of(t.b), g.part_of(t.c)) != (0, 1, 2) or not all(
            e in g._edge_set for e in t.edges()):
        raise PreconditionError(f"{tuple(t)} is not a triangle of the graph")
    return t


def is_packing(g: TripartiteGraph, triangles: Iterable[Iterable[int]]) -> bool:
    """True iff the triangles are pairwise edge-disjoint."""
    used: set[Edge] = set()
    ok = True
    for t in triangles:
        for e in check_triangle(g, t).edges():
            if e in used:
                ok = False
            used.add(e)
    return ok


def canonical_edges(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(set(edges)))
