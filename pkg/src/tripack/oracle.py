"""Exact exponential-time baselines for small instances.

These certify the polynomial pipeline in :mod:`tripack.solver` and share
none of its machinery: no network, no flow, no colouring.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .graph import Edge, Triangle, TripartiteGraph, detect_orientation, enumerate_triangles, require_valid


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_triangles: int = 40
    max_bc_edges: int = 14
    max_bc_vertices: int = 14
    time_limit: float = 30.0

    @classmethod
    def parse(cls, text: str) -> OracleBudget:
        """Parse ``"triangles=60,bc_edges=20,bc_vertices=12,seconds=10"``."""
        keys = {"triangles": "max_triangles", "bc_edges": "max_bc_edges",
                "bc_vertices": "max_bc_vertices", "seconds": "time_limit"}
        values: dict[str, float] = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            key, _, raw = item.partition("=")
            if key.strip() not in keys or not raw:
                raise ValueError(f"bad budget item {item!r}; keys are {sorted(keys)}")
            name = keys[key.strip()]
            values[name] = float(raw) if name == "time_limit" else int(raw)
        return cls(**values)  # type: ignore[arg-type]


DEFAULT_BUDGET = OracleBudget()


class _Clock:
    def __init__(self, limit: float):
        self.deadline = time.monotonic() + limit
        self.ticks = 0

    def check(self) -> None:
        self.ticks += 1
        if self.ticks % 1024 == 1 and time.monotonic() > self.deadline:
            raise BudgetExceeded("oracle time limit exceeded")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BudgetExceeded(message)


class PackingResult(NamedTuple):
    value: int
    witness: tuple[Triangle, ...]


class TransversalResult(NamedTuple):
    value: int
    witness: tuple[Edge, ...]
    all_minimum: tuple[tuple[Edge, ...], ...] | None = None


def brute_max_packing(g: TripartiteGraph, budget: OracleBudget = DEFAULT_BUDGET) -> PackingResult:
    """Maximum number of edge-disjoint triangles, by branch and bound.

    Branches over BC edges in order: each is used by at most one triangle,
    so the choice is which apex vertex (if any) completes it. The bound
    counts remaining BC edges that can still be completed, and per apex
    vertex the smaller of its free degrees towards B and C.
    """
    require_valid(g)
    triangles = enumerate_triangles(g)
    _require(len(triangles) <= budget.max_triangles,
             f"{len(triangles)} triangles exceeds budget {budget.max_triangles}")
    options: dict[Edge, list[int]] = {}
    for t in triangles:
        options.setdefault((t.b, t.c), []).append(t.a)
    bc_order = sorted(options)
    used: set[Edge] = set()
    chosen: list[Triangle] = []
    best: list[Triangle] = []
    clock = _Clock(budget.time_limit)

    def feasible(i: int) -> list[int]:
        b, c = bc_order[i]
        return [a for a in options[(b, c)] if (a, b) not in used and (a, c) not in used]

    def upper_bound(i: int) -> int:
        live = 0
        by_apex: dict[int, tuple[set[int], set[int]]] = {}
        by_b: dict[int, tuple[set[int], int]] = {}
        by_c: dict[int, tuple[set[int], int]] = {}
        for k in range(i, len(bc_order)):
            apexes = feasible(k)
            if not apexes:
                continue
            live += 1
            b, c = bc_order[k]
            for a in apexes:
                bs, cs = by_apex.setdefault(a, (set(), set()))
                bs.add(b)
                cs.add(c)
            as_b, n_b = by_b.get(b, (set(), 0))
            by_b[b] = (as_b | set(apexes), n_b + 1)
            as_c, n_c = by_c.get(c, (set(), 0))
            by_c[c] = (as_c | set(apexes), n_c + 1)
        per_apex = sum(min(len(bs), len(cs)) for bs, cs in by_apex.values())
        per_b = sum(min(len(a_s), n) for a_s, n in by_b.values())
        per_c = sum(min(len(a_s), n) for a_s, n in by_c.values())
        return min(live, per_apex, per_b, per_c)

    root_bound = upper_bound(0)

    def search(i: int) -> None:
        nonlocal best
        clock.check()
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(bc_order) or len(best) == root_bound:
            return
        if len(chosen) + upper_bound(i) <= len(best):
            return
        b, c = bc_order[i]
        for a in feasible(i):
            used.update(((a, b), (a, c)))
            chosen.append(Triangle(a, b, c))
            search(i + 1)
            chosen.pop()
            used.difference_update(((a, b), (a, c)))
        search(i + 1)

    search(0)
    return PackingResult(len(best), tuple(sorted(best)))


def brute_min_transversal(g: TripartiteGraph, budget: OracleBudget = DEFAULT_BUDGET,
                          enumerate_all: bool = False) -> TransversalResult:
    """Minimum edge set meeting every triangle, by branch and bound hitting set.

    Branches on the three edges of the lowest-index uncovered triangle;
    branch ``k`` forbids the edges tried in branches before it, so with
    ``enumerate_all`` every minimum transversal is reported exactly once.
    The bound is a greedy edge-disjoint packing of uncovered triangles.
    """
    require_valid(g)
    triangles = enumerate_triangles(g)
    _require(len(triangles) <= budget.max_triangles,
             f"{len(triangles)} triangles exceeds budget {budget.max_triangles}")
    tri_edges = [t.edges() for t in triangles]
    chosen: list[Edge] = []
    forbidden: set[Edge] = set()
    best_value = len(triangles) + 1
    best: tuple[Edge, ...] = ()
    found: list[tuple[Edge, ...]] = []
    clock = _Clock(budget.time_limit)

    def lower_bound(uncovered: list[int]) -> int:
        taken: set[Edge] = set()
        count = 0
        for k in uncovered:
            es = tri_edges[k]
            if taken.isdisjoint(es):
                taken.update(es)
                count += 1
        return count

    def search() -> None:
        nonlocal best_value, best
        clock.check()
        picked = set(chosen)
        uncovered = [k for k, es in enumerate(tri_edges) if picked.isdisjoint(es)]
        if not uncovered:
            value = len(chosen)
            if value < best_value:
                best_value, best = value, tuple(sorted(chosen))
                found.clear()
            if enumerate_all and value == best_value:
                found.append(tuple(sorted(chosen)))
            return
        bound = len(chosen) + lower_bound(uncovered)
        if bound > best_value or (bound == best_value and not enumerate_all):
            return
        first = tri_edges[uncovered[0]]
        added: list[Edge] = []
        for e in first:
            if e in forbidden:
                continue
            chosen.append(e)
            search()
            chosen.pop()
            forbidden.add(e)
            added.append(e)
        forbidden.difference_update(added)

    search()
    all_minimum = tuple(sorted(found)) if enumerate_all else None
    return TransversalResult(best_value if triangles else 0, best, all_minimum)


def maximum_matching(edges: list[Edge]) -> dict[int, int]:
    """Maximum bipartite matching (augmenting paths), as left -> right."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in sorted(adj):
        augment(u, set())
    return {u: v for v, u in match_right.items()}


def minimum_vertex_cover(edges: list[Edge]) -> set[int]:
    """Minimum vertex cover of a bipartite edge list via König's construction.

    With ``Z`` the vertices reachable from unmatched left vertices along
    alternating paths, the cover is ``(L - Z) | (R & Z)``.
    """
    matching = maximum_matching(edges)
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
    match_right = {v: u for u, v in matching.items()}
    left = set(adj)
    frontier = [u for u in left if u not in matching]
    z_left, z_right = set(frontier), set()
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v not in z_right and matching.get(u) != v:
                z_right.add(v)
                w = match_right.get(v)
                if w is not None and w not in z_left:
                    z_left.add(w)
                    frontier.append(w)
    return (left - z_left) | z_right


class UniformResult(NamedTuple):
    value: int
    bc_edges: tuple[Edge, ...]
    cover: tuple[int, ...]


def uniform_transversal_argmin(g: TripartiteGraph,
                               budget: OracleBudget = DEFAULT_BUDGET) -> UniformResult:
    """Minimise ``|E'| + p * vc(BC - E')`` over subsets ``E'`` of the BC edges.

    ``vc`` is computed as a maximum matching size. The subset space is
    searched edge by edge (drop into ``E'`` or keep); a partial choice
    costs at least ``dropped + p * matching(kept)`` because the matching
    number never decreases as edges are kept, which prunes the search
    without excluding any optimum.

    The witness refers to the oriented graph (see
    :func:`~tripack.graph.detect_orientation`), whose apex may not be A.
    """
    og = detect_orientation(g).graph
    edges = list(og.bc)
    _require(len(edges) <= budget.max_bc_edges,
             f"{len(edges)} BC edges exceeds budget {budget.max_bc_edges}")
    p = og.p
    clock = _Clock(budget.time_limit)
    best_value = len(edges)
    best_drop: tuple[Edge, ...] = tuple(edges)
    kept: list[Edge] = []
    dropped: list[Edge] = []

    def search(i: int, nu: int) -> None:
        nonlocal best_value, best_drop
        clock.check()
        cost = len(dropped) + p * nu
        if cost >= best_value:
            return
        if i == len(edges):
            best_value, best_drop = cost, tuple(dropped)
            return
        kept.append(edges[i])
        search(i + 1, len(maximum_matching(kept)))
        kept.pop()
        dropped.append(edges[i])
        search(i + 1, nu)
        dropped.pop()

    search(0, 0)
    rest = [e for e in edges if e not in set(best_drop)]
    cover = tuple(sorted(minimum_vertex_cover(rest)))
    assert len(best_drop) + p * len(cover) == best_value
    return UniformResult(best_value, best_drop, cover)


def uniform_transversal_min(g: TripartiteGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return uniform_transversal_argmin(g, budget).value


class SubsetPairResult(NamedTuple):
    value: int
    B_kept: tuple[int, ...]
    C_kept: tuple[int, ...]


def mao_cheng_objective(g: TripartiteGraph, B_kept, C_kept) -> int:
    """``|E(B'', C'')| + p * (|B| + |C| - |B''| - |C''|)`` on an oriented graph."""
    Bs, Cs = set(B_kept), set(C_kept)
    inside = sum(1 for b, c in g.bc if b in Bs and c in Cs)
    return inside + g.p * (g.q + g.r - len(Bs) - len(Cs))


def mao_cheng_argmin(g: TripartiteGraph, budget: OracleBudget = DEFAULT_BUDGET) -> SubsetPairResult:
    """Exhaustive minimum of the matching-family bound over all ``B'' x C''``."""
    og = detect_orientation(g).graph
    _require(og.q + og.r <= budget.max_bc_vertices,
             f"|B|+|C| = {og.q + og.r} exceeds budget {budget.max_bc_vertices}")
    clock = _Clock(budget.time_limit)
    best: SubsetPairResult | None = None
    for nb in range(og.q + 1):
        for Bk in combinations(og.B, nb):
            for nc in range(og.r + 1):
                for Ck in combinations(og.C, nc):
                    clock.check()
                    value = mao_cheng_objective(og, Bk, Ck)
                    if best is None or value < best.value:
                        best = SubsetPairResult(value, Bk, Ck)
    assert best is not None
    return best


def mao_cheng_min(g: TripartiteGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return mao_cheng_argmin(g, budget).value
