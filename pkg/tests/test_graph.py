import pytest
from hypothesis import given, settings

from brute import FIGURE1_TRANSVERSAL, bilateral_graphs, exhaustive_triangles, general_graphs
from tripack.graph import (
    InvalidGraphError,
    NotBilaterallyComplete,
    PreconditionError,
    Triangle,
    TripartiteGraph,
    detect_orientation,
    enumerate_triangles,
    is_packing,
    is_transversal,
    validate,
)


class TestValidate:
    def test_figure1(self, figure1):
        report = validate(figure1)
        assert report.valid
        assert report.complete == {"AB": True, "AC": True, "BC": False}
        assert report.bilaterally_complete

    def test_empty_graph_vacuously_complete(self):
        report = validate(TripartiteGraph())
        assert report.valid
        assert all(report.complete.values())

    def test_edge_inside_part(self):
        g = TripartiteGraph((0,), (1, 2), (3,), bc=((1, 2),))
        report = validate(g)
        assert not report.valid
        assert any("within a part" in e for e in report.errors)

    @pytest.mark.parametrize("g, fragment", [
        (TripartiteGraph((0,), (0,), (1,)), "parts A and B"),
        (TripartiteGraph((0, 0), (1,), (2,)), "twice"),
        (TripartiteGraph((0,), (1,), (2,), ab=((0, 1), (0, 1))), "duplicate"),
        (TripartiteGraph((0,), (1,), (2,), ab=((0, 2),)), "does not join"),
        (TripartiteGraph((0,), (1,), (2,), bc=((1, 1),)), "self-loop"),
        (TripartiteGraph((-1,), (1,), (2,)), "negative"),
    ])
    def test_structural_errors_reported(self, g, fragment):
        report = validate(g)
        assert not report.valid
        assert any(fragment in e for e in report.errors), report.errors

    def test_edges_given_backwards_are_oriented(self):
        g = TripartiteGraph((0,), (1,), (2,), ab=((1, 0),), ac=((2, 0),), bc=((2, 1),))
        assert g.ab == ((0, 1),) and g.ac == ((0, 2),) and g.bc == ((1, 2),)
        assert validate(g).valid


class TestOrientation:
    def test_figure1_apex_is_A(self, figure1):
        o = detect_orientation(figure1)
        assert o.apex == "A" and o.is_identity
        assert o.graph == figure1

    def test_complete_picks_smallest_part(self):
        # parts given as sizes 3, 2, 4: the size-2 part must become apex
        g = TripartiteGraph.complete(3, 2, 4)
        o = detect_orientation(g)
        assert o.apex == "B"
        assert o.graph.p == 2

    def test_k234_apex_is_size_two_part(self):
        assert detect_orientation(TripartiteGraph.complete(2, 3, 4)).apex == "A"

    def test_ties_broken_by_input_order(self):
        assert detect_orientation(TripartiteGraph.complete(2, 2, 2)).apex == "A"

    def test_only_bc_complete_rejected(self):
        g = TripartiteGraph((0, 1), (2, 3), (4, 5), ab=((0, 2),), ac=((1, 5),),
                            bc=((2, 4), (2, 5), (3, 4), (3, 5)))
        with pytest.raises(NotBilaterallyComplete):
            detect_orientation(g)

    def test_invalid_graph_rejected(self):
        with pytest.raises(InvalidGraphError):
            detect_orientation(TripartiteGraph((0,), (0,), ()))

    def test_relabel_maps_triangles_back(self, figure1):
        moved = figure1.relabel((1, 2, 0))  # apex now plays role C
        o = detect_orientation(moved)
        assert o.apex == "C"
        for t in enumerate_triangles(o.graph):
            back = o.triangle_to_input(t)
            assert back in enumerate_triangles(moved)

    @settings(max_examples=60, deadline=None)
    @given(bilateral_graphs())
    def test_idempotent(self, g):
        once = detect_orientation(g)
        twice = detect_orientation(once.graph)
        assert twice.is_identity
        assert twice.graph == once.graph


class TestTriangles:
    def test_figure1_count(self, figure1):
        assert len(enumerate_triangles(figure1)) == 14

    def test_no_bc_edges(self):
        assert enumerate_triangles(TripartiteGraph.bilateral([0, 1], [2], [3], [])) == []

    def test_k222(self):
        g = TripartiteGraph.complete(2, 2, 2)
        got = enumerate_triangles(g)
        assert len(got) == 8
        assert [tuple(t) for t in got] == exhaustive_triangles(g)

    @settings(max_examples=80, deadline=None)
    @given(bilateral_graphs())
    def test_count_is_p_times_bc(self, g):
        assert len(enumerate_triangles(g)) == g.p * len(g.bc)

    @settings(max_examples=80, deadline=None)
    @given(general_graphs())
    def test_matches_exhaustive_and_sorted(self, g):
        got = enumerate_triangles(g)
        assert [tuple(t) for t in got] == exhaustive_triangles(g)
        assert got == sorted(set(got))
        for t in got:
            assert all(g.has_edge(*e) for e in t.edges())


class TestPredicates:
    def test_boldface_edges_are_transversal(self, figure1):
        assert is_transversal(figure1, FIGURE1_TRANSVERSAL)

    def test_empty_set_is_not_transversal(self, figure1):
        assert not is_transversal(figure1, [])

    def test_all_bc_edges_transversal(self, figure1):
        assert is_transversal(figure1, figure1.bc)

    def test_transversal_edge_orientation_irrelevant(self, figure1):
        assert is_transversal(figure1, [(v, u) for u, v in FIGURE1_TRANSVERSAL])

    def test_transversal_precondition(self, figure1):
        with pytest.raises(PreconditionError):
            is_transversal(figure1, [(4, 6)])  # not an edge

    def test_disjoint_packing(self, figure1):
        assert is_packing(figure1, [(0, 2, 6), (1, 2, 7)])

    def test_shared_apex_edge(self, figure1):
        assert not is_packing(figure1, [(0, 2, 6), (0, 2, 7)])

    def test_empty_packing(self, figure1):
        assert is_packing(figure1, [])

    def test_packing_precondition(self, figure1):
        with pytest.raises(PreconditionError):
            is_packing(figure1, [Triangle(0, 4, 6)])
        with pytest.raises(PreconditionError):
            is_packing(figure1, [(2, 0, 6)])
