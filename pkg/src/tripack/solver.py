"""End-to-end construction of an equal-size minimum transversal and maximum packing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Edge,
    Orientation,
    Triangle,
    TripartiteGraph,
    canonical_edges,
    detect_orientation,
    is_packing,
    is_transversal,
)
from .koenig import BipartiteSubgraph, EdgeColouring, edge_colour, extract_subgraph
from .menger import PathSet, Separator, max_disjoint_paths, max_flow, min_separator
from .network import BCOPY, CCOPY, EDGE, NetworkGraph, build_network


class InvariantViolation(RuntimeError):
    """The pipeline produced a certificate that does not verify. Always a bug."""


@dataclass(frozen=True)
class SolveTrace:
    """Intermediate objects of one :func:`solve` run, in oriented coordinates."""

    orientation: Orientation
    network: NetworkGraph
    paths: PathSet
    separator: Separator
    subgraph: BipartiteSubgraph
    colouring: EdgeColouring


@dataclass(frozen=True)
class Certificate:
    transversal: tuple[Edge, ...]
    packing: tuple[Triangle, ...]
    value: int
    transversal_ok: bool
    packing_ok: bool
    trace: SolveTrace | None = field(default=None, repr=False, compare=False)

    @property
    def sizes_equal(self) -> bool:
        return len(self.transversal) == len(self.packing) == self.value

    @property
    def verified(self) -> bool:
        return self.transversal_ok and self.packing_ok and self.sizes_equal

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "transversal": [list(e) for e in self.transversal],
            "packing": [list(t) for t in self.packing],
            "verified": {
                "transversal": self.transversal_ok,
                "packing": self.packing_ok,
                "sizes_equal": self.sizes_equal,
            },
        }


def separator_to_transversal(sep: Separator, g: TripartiteGraph) -> tuple[Edge, ...]:
    """Map separator nodes to edges: copy ``i`` of ``w`` becomes ``a_i w``, edge nodes stay.

    ``g`` must be the (oriented) graph the separator's network was built from.
    The result has exactly ``len(sep)`` edges and is verified.
    """
    nodes = sep.network.nodes
    apex = g.A
    edges = []
    for k in sep.nodes:
        node = nodes[k]
        if node.kind == EDGE:
            edges.append(node.item)
        elif node.kind in (BCOPY, CCOPY):
            edges.append((apex[node.copy - 1], node.item))
        else:
            raise ValueError(f"separator contains terminal node {node.label}")
    out = canonical_edges(edges)
    if len(out) != len(sep) or not is_transversal(g, out):
        raise ValueError("separator does not yield a transversal; is it a valid separator?")
    return out


def assemble_packing(colouring: EdgeColouring, g: TripartiteGraph) -> tuple[Triangle, ...]:
    """Join the ``i``-th colour class to the ``i``-th apex vertex."""
    if len(colouring) > g.p:
        raise ValueError(f"{len(colouring)} colour classes but only {g.p} apex vertices")
    triangles = [Triangle(a, b, c) for a, cls in zip(g.A, colouring.classes) for b, c in cls]
    return tuple(sorted(triangles))


def solve(g: TripartiteGraph) -> Certificate:
    """Minimum transversal and maximum packing of equal size for a bilaterally-complete graph.

    Raises :class:`~tripack.graph.NotBilaterallyComplete` when no part can
    act as apex and :class:`~tripack.graph.InvalidGraphError` for
    malformed input.
    """
    orientation = detect_orientation(g)
    og = orientation.graph
    h = build_network(og)
    flow = max_flow(h)
    paths = max_disjoint_paths(h, flow)
    sep = min_separator(h, flow)
    if len(sep) != paths.value:
        raise InvariantViolation(f"separator size {len(sep)} != path count {paths.value}")

    transversal = separator_to_transversal(sep, og)
    sub = extract_subgraph(paths, og)
    colouring = edge_colour(sub)
    packing = assemble_packing(colouring, og)

    # back to the caller's part roles
    transversal = canonical_edges(g.orient(u, v) for u, v in transversal)
    packing = tuple(sorted(orientation.triangle_to_input(t) for t in packing))
    cert = Certificate(
        transversal,
        packing,
        paths.value,
        is_transversal(g, transversal),
        is_packing(g, packing),
        SolveTrace(orientation, h, paths, sep, sub, colouring),
    )
    if not cert.verified:
        raise InvariantViolation(f"certificate failed verification: {cert}")
    return cert
