from collections import Counter

import pytest
from hypothesis import given, settings

from brute import all_st_paths, bilateral_graphs
from tripack.graph import NotBilaterallyComplete, TripartiteGraph
from tripack.network import BCOPY, CCOPY, EDGE, build_network


def _figure_label(label: str) -> str:
    """'B2:3' -> "3'", 'E:3-8' -> '38', 'C1:9' -> '9'."""
    if label in ("s", "t"):
        return label
    kind, _, rest = label.partition(":")
    if kind == "E":
        return rest.replace("-", "")
    return rest + ("'" if kind[1:] == "2" else "")


# Arcs of the drawn network for Figure 1's BC side, primes marking copy 2.
FIGURE3_ARCS = {
    ("2", "26"), ("26", "6"), ("2'", "26"), ("26", "6'"),
    ("2", "27"), ("27", "7"), ("2'", "27"), ("27", "7'"),
    ("2", "28"), ("28", "8"), ("2'", "28"), ("28", "8'"),
    ("3", "38"), ("38", "8"), ("3'", "38"), ("38", "8'"),
    ("3", "39"), ("39", "9"), ("3'", "39"), ("39", "9'"),
    ("4", "49"), ("4'", "49"), ("49", "9"), ("49", "9'"),
    ("5", "59"), ("5'", "59"), ("59", "9"), ("59", "9'"),
    *(("s", b) for b in ("2", "3", "4", "5", "2'", "3'", "4'", "5'")),
    *((c, "t") for c in ("6", "7", "8", "9", "6'", "7'", "8'", "9'")),
}


class TestBuild:
    def test_figure3_node_counts(self, figure1):
        h = build_network(figure1)
        kinds = Counter(n.kind for n in h.nodes)
        assert kinds == {"s": 1, "t": 1, BCOPY: 8, CCOPY: 8, EDGE: 7}
        assert len(h.nodes) == 23 + 2
        assert len(list(h.internal)) == 23

    def test_figure3_arcs(self, figure1):
        h = build_network(figure1)
        drawn = {(_figure_label(h.nodes[u].label), _figure_label(h.nodes[v].label))
                 for u, v in h.arcs}
        assert len(h.arcs) == len(FIGURE3_ARCS) == 44
        assert drawn == FIGURE3_ARCS

    def test_split_counts(self, figure1):
        h = build_network(figure1)
        # 2pq + 2pr + 2m internal halves plus s and t
        assert h.split_size == 2 * 8 + 2 * 8 + 2 * 7 + 2
        arcs = h.split_arcs()
        assert sum(1 for _, _, c in arcs if c == 1) == 23
        assert all(c == h.capacity_bound == 2 * 7 + 1 for _, _, c in arcs if c != 1)

    def test_numbering_order(self, figure1):
        h = build_network(figure1)
        labels = [n.label for n in h.nodes]
        assert labels[:3] == ["s", "B1:2", "B1:3"]
        assert labels[5:9] == ["B2:2", "B2:3", "B2:4", "B2:5"]
        assert labels[9] == "E:2-6" and labels[15] == "E:5-9"
        assert labels[16] == "C1:6" and labels[-2] == "C2:9" and labels[-1] == "t"

    def test_no_bc_edges(self):
        h = build_network(TripartiteGraph.bilateral([0, 1], [2, 3], [4], []))
        assert not any(n.kind == EDGE for n in h.nodes)
        assert not h.has_path()

    def test_single_edge_single_path(self):
        h = build_network(TripartiteGraph.bilateral([0], [1], [2], [(1, 2)]))
        assert [[h.nodes[k].label for k in path] for path in all_st_paths(h)] == [
            ["s", "B1:1", "E:1-2", "C1:2", "t"]]

    def test_requires_apex_a(self):
        g = TripartiteGraph.complete(1, 1, 1).relabel((1, 0, 2))
        g = TripartiteGraph(g.A, g.B, g.C, ab=(), ac=g.ac, bc=g.bc)
        with pytest.raises(NotBilaterallyComplete):
            build_network(g)

    def test_p_zero_is_degenerate(self):
        h = build_network(TripartiteGraph.bilateral([], [1, 2], [3], [(1, 3)]))
        assert not h.has_path()

    def test_export_format(self):
        h = build_network(TripartiteGraph.bilateral([0], [1], [2], [(1, 2)]))
        lines = h.export_arcs().splitlines()
        assert "B1:1.in B1:1.out 1" in lines
        assert "s B1:1.in 2" in lines
        assert "C1:2.out t 2" in lines
        assert all(len(line.split()) == 3 for line in lines)


class TestPathStructure:
    @settings(max_examples=40, deadline=None)
    @given(bilateral_graphs(max_p=2, max_q=3, max_r=3))
    def test_paths_have_one_node_per_layer(self, g):
        h = build_network(g)
        for path in all_st_paths(h):
            assert [h.nodes[k].kind for k in path] == ["s", BCOPY, EDGE, CCOPY, "t"]

    @settings(max_examples=40, deadline=None)
    @given(bilateral_graphs(max_p=3, max_q=3, max_r=3))
    def test_p_squared_paths_per_edge_node(self, g):
        h = build_network(g)
        through = Counter(path[2] for path in all_st_paths(h))
        for k, node in enumerate(h.nodes):
            if node.kind == EDGE:
                assert through[k] == g.p ** 2

    @settings(max_examples=40, deadline=None)
    @given(bilateral_graphs(max_p=2, max_q=3, max_r=3))
    def test_split_preserves_connectivity(self, g):
        h = build_network(g)
        adj = {}
        for u, v, _ in h.split_arcs():
            adj.setdefault(u, []).append(v)
        seen, stack = {0}, [0]
        while stack:
            for v in adj.get(stack.pop(), []):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        assert (h.split_size - 1 in seen) == h.has_path()
