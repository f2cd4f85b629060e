"""Disjoint s-t paths and minimum vertex separators via unit max-flow."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .network import NetworkGraph


@dataclass
class Flow:
    """Integral maximum flow on the split network.

    Arc ``2i`` is the i-th split arc and ``2i + 1`` its residual reverse;
    ``residual[x]`` is the remaining capacity on arc ``x``.
    """

    network: NetworkGraph
    heads: list[int]
    capacity: list[int]
    residual: list[int]
    adjacency: list[list[int]]
    value: int = 0

    def arc_flow(self, x: int) -> int:
        return self.capacity[x] - self.residual[x]

    def tail(self, x: int) -> int:
        return self.heads[x ^ 1]

    def reachable(self) -> set[int]:
        """Split vertices reachable from the source in the residual graph."""
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for x in self.adjacency[u]:
                v = self.heads[x]
                if self.residual[x] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def max_flow(h: NetworkGraph) -> Flow:
    """Shortest-augmenting-path (BFS) maximum flow on the split network."""
    n = h.split_size
    heads: list[int] = []
    capacity: list[int] = []
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v, cap in h.split_arcs():
        adjacency[u].append(len(heads))
        heads.append(v)
        capacity.append(cap)
        adjacency[v].append(len(heads))
        heads.append(u)
        capacity.append(0)
    flow = Flow(h, heads, capacity, list(capacity), adjacency)
    s, t = 0, n - 1
    while True:
        parent = {s: -1}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for x in adjacency[u]:
                v = heads[x]
                if flow.residual[x] > 0 and v not in parent:
                    parent[v] = x
                    queue.append(v)
        if t not in parent:
            return flow
        # every s-t path crosses a unit split arc, so bottleneck is 1
        v = t
        while v != s:
            x = parent[v]
            flow.residual[x] -= 1
            flow.residual[x ^ 1] += 1
            v = heads[x ^ 1]
        flow.value += 1


@dataclass(frozen=True)
class PathSet:
    """Internally vertex-disjoint s-t paths as network node index sequences."""

    paths: tuple[tuple[int, ...], ...]
    network: NetworkGraph = field(repr=False, compare=False)

    @property
    def value(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class Separator:
    """Internal network nodes whose removal cuts every s-t path."""

    nodes: tuple[int, ...]
    network: NetworkGraph = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def labels(self) -> list[str]:
        return [self.network.nodes[k].label for k in self.nodes]


def max_disjoint_paths(h: NetworkGraph, flow: Flow | None = None) -> PathSet:
    """Decompose a maximum flow into internally vertex-disjoint s-t paths."""
    if flow is None:
        flow = max_flow(h)
    remaining = {x: flow.arc_flow(x) for x in range(0, len(flow.heads), 2) if flow.arc_flow(x) > 0}
    out_arcs: dict[int, list[int]] = {}
    for x in sorted(remaining):
        out_arcs.setdefault(flow.tail(x), []).append(x)
    sink = h.split_size - 1
    paths = []
    for _ in range(flow.value):
        walk = [0]
        u = 0
        while u != sink:
            x = next(x for x in out_arcs[u] if remaining[x] > 0)
            remaining[x] -= 1
            u = flow.heads[x]
            walk.append(u)
        nodes: list[int] = []
        for y in walk:
            k = h.unsplit(y)
            if not nodes or nodes[-1] != k:
                nodes.append(k)
        paths.append(tuple(nodes))
    assert all(f == 0 for f in remaining.values()), "flow not fully decomposed"
    return PathSet(tuple(sorted(paths)), h)


def min_separator(h: NetworkGraph, flow: Flow | None = None) -> Separator:
    """Internal nodes whose In half is residual-reachable and Out half is not."""
    if flow is None:
        flow = max_flow(h)
    reach = flow.reachable()
    nodes = tuple(k for k in h.internal
                  if h.split_in(k) in reach and h.split_out(k) not in reach)
    return Separator(nodes, h)


def paths_are_disjoint(paths: PathSet) -> bool:
    seen: set[int] = set()
    for path in paths.paths:
        inner = set(path[1:-1])
        if len(inner) != len(path) - 2 or not seen.isdisjoint(inner):
            return False
        seen |= inner
    return True


def paths_are_valid(paths: PathSet) -> bool:
    h = paths.network
    for path in paths.paths:
        if path[0] != h.source or path[-1] != h.sink:
            return False
        if any(v not in h.successors[u] for u, v in zip(path, path[1:])):
            return False
    return True
