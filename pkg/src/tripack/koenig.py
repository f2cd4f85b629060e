"""Bipartite edge colouring with exactly max-degree many matchings."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Edge, PreconditionError, TripartiteGraph
from .menger import PathSet
from .network import EDGE


@dataclass(frozen=True)
class BipartiteSubgraph:
    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def max_degree(self) -> int:
        degree = Counter(v for e in self.edges for v in e)
        return max(degree.values(), default=0)


@dataclass(frozen=True)
class EdgeColouring:
    classes: tuple[tuple[Edge, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(e for cls in self.classes for e in cls))


def is_matching(edges) -> bool:
    ends = [v for e in edges for v in e]
    return len(ends) == len(set(ends))


def _check_bipartite(f: BipartiteSubgraph) -> None:
    left, right = set(f.left), set(f.right)
    if left & right:
        raise PreconditionError("left and right vertex sets overlap")
    if len(set(f.edges)) != len(f.edges):
        raise PreconditionError("duplicate edge")
    for u, v in f.edges:
        if u not in left or v not in right:
            raise PreconditionError(f"edge {u}-{v} does not join left to right")


def edge_colour(f: BipartiteSubgraph) -> EdgeColouring:
    """Partition the edges of ``f`` into exactly ``max_degree`` matchings.

    Edges are inserted in sorted order. An edge ``uv`` with no colour
    free at both ends takes a colour ``alpha`` free at ``u`` after the
    alpha/beta alternating path from ``v`` is swapped (``beta`` free at
    ``v``); bipartiteness keeps that path away from ``u``.
    """
    _check_bipartite(f)
    delta = f.max_degree
    # at[x][colour] -> neighbour joined to x by an edge of that colour
    at: dict[tuple[str, int], dict[int, tuple[str, int]]] = {}
    for u, v in sorted(f.edges):
        x, y = ("L", u), ("R", v)
        at.setdefault(x, {})
        at.setdefault(y, {})
        free_x = [c for c in range(delta) if c not in at[x]]
        common = [c for c in free_x if c not in at[y]]
        if common:
            alpha = common[0]
        else:
            alpha = free_x[0]
            beta = next(c for c in range(delta) if c not in at[y])
            path = []
            node, colour = y, alpha
            while colour in at[node]:
                nxt = at[node][colour]
                path.append((node, nxt, colour))
                node, colour = nxt, (beta if colour == alpha else alpha)
            for a, b, colour in path:
                del at[a][colour]
                del at[b][colour]
            for a, b, colour in path:
                swapped = beta if colour == alpha else alpha
                at[a][swapped] = b
                at[b][swapped] = a
        at[x][alpha] = y
        at[y][alpha] = x
    classes: list[list[Edge]] = [[] for _ in range(delta)]
    for (side, u), nbrs in at.items():
        if side == "L":
            for colour, (_, v) in nbrs.items():
                classes[colour].append((u, v))
    ordered = sorted((tuple(sorted(cls)) for cls in classes if cls), key=lambda c: (-len(c), c[0]))
    return EdgeColouring(tuple(ordered))


def extract_subgraph(paths: PathSet, g: TripartiteGraph) -> BipartiteSubgraph:
    """BC edges named by the edge nodes on the paths, as a subgraph of ``G[B u C]``."""
    nodes = paths.network.nodes
    bc = set(g.bc)
    edges = []
    for path in paths.paths:
        (e,) = [nodes[k].item for k in path if nodes[k].kind == EDGE]
        if e not in bc:
            raise PreconditionError(f"path edge {e} is not a BC edge of the graph")
        edges.append(e)
    return BipartiteSubgraph(g.B, g.C, tuple(sorted(edges)))
