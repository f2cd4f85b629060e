"""The s-t network built from the BC side of a bilaterally-complete graph.

Nodes are, in numbering order: the source, the ``p`` copies of ``B``
(copy index then vertex id), one node per BC edge (sorted), the ``p``
copies of ``C``, and the sink. Arcs run source -> B copies -> edge nodes
-> C copies -> sink, so every s-t path has exactly five nodes.

For flow computations each internal node ``k`` is split into an In half
``2k - 1`` and an Out half ``2k`` joined by a unit-capacity arc; the
source keeps id 0 and the sink gets the last id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Union

from .graph import Edge, NotBilaterallyComplete, TripartiteGraph, require_valid

SOURCE, SINK, BCOPY, CCOPY, EDGE = "s", "t", "B", "C", "E"


class NetNode(NamedTuple):
    kind: str
    copy: int = 0
    item: Union[int, Edge, None] = None

    @property
    def label(self) -> str:
        if self.kind in (SOURCE, SINK):
            return self.kind
        if self.kind == EDGE:
            b, c = self.item  # type: ignore[misc]
            return f"E:{b}-{c}"
        return f"{self.kind}{self.copy}:{self.item}"


@dataclass(frozen=True)
class NetworkGraph:
    p: int
    q: int
    r: int
    nodes: tuple[NetNode, ...]
    arcs: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return sum(1 for n in self.nodes if n.kind == EDGE)

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return len(self.nodes) - 1

    @property
    def internal(self) -> range:
        return range(1, len(self.nodes) - 1)

    @property
    def capacity_bound(self) -> int:
        """Capacity of structural arcs: exceeds any possible flow value."""
        return self.p * self.m + 1

    @cached_property
    def index(self) -> dict[NetNode, int]:
        return {node: k for k, node in enumerate(self.nodes)}

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.nodes]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(vs) for vs in out)

    # split representation

    @property
    def split_size(self) -> int:
        return 2 * len(self.nodes) - 2

    def split_in(self, k: int) -> int:
        if k == self.source:
            return 0
        if k == self.sink:
            return self.split_size - 1
        return 2 * k - 1

    def split_out(self, k: int) -> int:
        if k == self.source:
            return 0
        if k == self.sink:
            return self.split_size - 1
        return 2 * k

    def unsplit(self, x: int) -> int:
        """Network node owning split vertex ``x``."""
        if x == 0:
            return self.source
        if x == self.split_size - 1:
            return self.sink
        return (x + 1) // 2

    def split_arcs(self) -> list[tuple[int, int, int]]:
        """``(tail, head, capacity)``: unit split arcs first, then structural arcs."""
        arcs = [(self.split_in(k), self.split_out(k), 1) for k in self.internal]
        cap = self.capacity_bound
        arcs += [(self.split_out(u), self.split_in(v), cap) for u, v in self.arcs]
        return arcs

    def split_label(self, x: int) -> str:
        k = self.unsplit(x)
        label = self.nodes[k].label
        if k in (self.source, self.sink):
            return label
        return label + (".in" if x == self.split_in(k) else ".out")

    def export_arcs(self) -> str:
        """Split network as text, one ``tail head capacity`` arc per line."""
        lines = [f"{self.split_label(u)} {self.split_label(v)} {c}"
                 for u, v, c in self.split_arcs()]
        return "\n".join(lines) + ("\n" if lines else "")

    def has_path(self, removed: Iterable[int] = ()) -> bool:
        """Whether an s-t path survives deleting the ``removed`` internal nodes."""
        blocked = set(removed)
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            for v in self.successors[u]:
                if v == self.sink:
                    return True
                if v not in seen and v not in blocked:
                    seen.add(v)
                    queue.append(v)
        return False


def build_network(g: TripartiteGraph) -> NetworkGraph:
    """Network for ``g`` whose part A must be the apex (sides AB, AC complete)."""
    report = require_valid(g)
    if not (report.complete["AB"] and report.complete["AC"]):
        raise NotBilaterallyComplete("sides AB and AC must be complete; orient the graph first")
    p = g.p
    copies = range(1, p + 1)
    nodes = [NetNode(SOURCE)]
    nodes += [NetNode(BCOPY, i, b) for i in copies for b in g.B]
    nodes += [NetNode(EDGE, 0, e) for e in g.bc]
    nodes += [NetNode(CCOPY, j, c) for j in copies for c in g.C]
    nodes.append(NetNode(SINK))
    index = {node: k for k, node in enumerate(nodes)}
    s, t = 0, len(nodes) - 1

    arcs = [(s, index[NetNode(BCOPY, i, b)]) for i in copies for b in g.B]
    for b, c in g.bc:
        e = index[NetNode(EDGE, 0, (b, c))]
        arcs += [(index[NetNode(BCOPY, i, b)], e) for i in copies]
        arcs += [(e, index[NetNode(CCOPY, j, c)]) for j in copies]
    arcs += [(index[NetNode(CCOPY, j, c)], t) for j in copies for c in g.C]
    return NetworkGraph(p, g.q, g.r, tuple(nodes), tuple(arcs))
