import pytest

from doubletrace import (
    EnumerationConfig,
    Graph,
    PartialTrace,
    RetainedSymmetries,
    SymmetryElement,
    admits_antiparallel_strong,
    admits_d_stable,
    admits_parallel_strong,
    apply_symmetry,
    automorphisms,
    canonical_extension,
    enumerate_traces,
    feasible_neighbors,
    is_canonical,
    is_double_trace,
    named_graph,
    prune,
    satisfies_kind,
    satisfies_orientation,
    symmetry_elements,
)
from doubletrace.enumerator import SearchNode, extend_feasibly

K4_STRONG = (0, 1, 2, 0, 1, 3, 0, 2, 3, 1, 2, 3)


def build_partial(graph, seq):
    """Partial trace for an explicit prefix (no feasibility checking)."""
    pt = PartialTrace.initial(graph)
    assert tuple(seq[:2]) == (0, 1)
    for v in seq[2:]:
        pt.push(v)
    return pt


class TestPartialTrace:
    def test_initial_requires_base_edge(self):
        g = Graph(3, [(0, 2), (1, 2)])
        with pytest.raises(ValueError, match="adjacent"):
            PartialTrace.initial(g)

    def test_push_updates_bookkeeping(self, triangle):
        pt = build_partial(triangle, (0, 1, 2, 0))
        assert pt.seq == [0, 1, 2, 0]
        assert pt.visits == [2, 1, 1]
        assert pt.edge_count[triangle.edge_id(0, 1)] == 1
        assert pt.edge_count[triangle.edge_id(1, 2)] == 1
        assert pt.edge_count[triangle.edge_id(0, 2)] == 1
        # First-traversal directions.
        assert pt.edge_from[triangle.edge_id(1, 2)] == 1
        assert pt.edge_from[triangle.edge_id(0, 2)] == 2
        # Moving 0 -> 1 -> 2 completed the pair {0, 2} at vertex 1.
        assert pt.pairs[1] == [(0, 2)]

    def test_pop_restores_everything(self, k4):
        pt = build_partial(k4, (0, 1, 2, 0, 1))
        snapshot = (
            list(pt.seq),
            list(pt.edge_count),
            list(pt.edge_from),
            list(pt.visits),
            [list(x) for x in pt.pairs],
            [list(x) for x in pt.tmask],
            [list(x) for x in pt.pdeg],
        )
        pt.push(3)
        pt.push(0)
        pt.pop()
        pt.pop()
        assert snapshot == (
            list(pt.seq),
            list(pt.edge_count),
            list(pt.edge_from),
            list(pt.visits),
            [list(x) for x in pt.pairs],
            [list(x) for x in pt.tmask],
            [list(x) for x in pt.pdeg],
        )

    def test_copy_is_independent(self, triangle):
        pt = build_partial(triangle, (0, 1, 2))
        other = pt.copy()
        other.push(0)
        assert pt.seq == [0, 1, 2]
        assert other.seq == [0, 1, 2, 0]
        assert pt.visits != other.visits

    def test_len(self, triangle):
        assert len(build_partial(triangle, (0, 1, 2))) == 3


class TestFeasibleNeighbors:
    def test_open_start_allows_whole_neighborhood(self, k4):
        # At length 2 only adjacency and edge capacity constrain the step,
        # even for strong enumeration.
        pt = PartialTrace.initial(k4)
        assert feasible_neighbors(pt, EnumerationConfig(kind="strong")) == [0, 2, 3]

    def test_exhausted_edges_block(self, triangle):
        # After 0,1,0 the edge {0,1} is used twice; only 2 remains.
        pt = build_partial(triangle, (0, 1, 0))
        assert feasible_neighbors(pt, EnumerationConfig()) == [2]

    def test_parallel_repeats_first_direction(self, triangle):
        # The edge {1,2} was first taken 1 -> 2, so its second traversal
        # under parallel orientation must again run 1 -> 2.
        pt = build_partial(triangle, (0, 1, 2, 0, 1))
        assert feasible_neighbors(pt, EnumerationConfig(orientation="parallel")) == [2]
        # Here {1,2} was first taken 2 -> 1; stepping 1 -> 2 would repeat
        # it in the opposite direction, which parallel forbids.
        pt2 = build_partial(triangle, (0, 1, 0, 2, 1))
        assert feasible_neighbors(pt2, EnumerationConfig(orientation="parallel")) == []

    def test_antiparallel_reverses_first_direction(self, triangle):
        pt = build_partial(triangle, (0, 1, 0, 2, 1))
        assert feasible_neighbors(pt, EnumerationConfig(orientation="antiparallel")) == [2]
        pt2 = build_partial(triangle, (0, 1, 2, 0, 1))
        assert feasible_neighbors(pt2, EnumerationConfig(orientation="antiparallel")) == []

    def test_completing_visit_accepts_connected(self, k4):
        # Leaving vertex 1 for the third (= last) time completes its
        # transition structure.  The prefix below gives it the pairs
        # {0,2}, {0,3}; stepping 1 -> 2 adds {3,2}, which connects
        # everything, so strong enumeration allows the step.
        pt = build_partial(k4, (0, 1, 2, 0, 1, 3, 0, 2, 3, 1))
        assert feasible_neighbors(pt, EnumerationConfig(kind="strong")) == [2]
        assert feasible_neighbors(pt, EnumerationConfig()) == [2]

    def test_completing_visit_rejects_split(self, triangle):
        # Leaving vertex 1 for the second (= last) time here closes its
        # transition structure with the pairs {0,0} and {2,2}: two
        # singleton repetitions.  Strong enumeration must reject the step,
        # and so must 1-stability (the repetitions have only one element).
        pt = build_partial(triangle, (0, 1, 0, 2, 1))
        assert feasible_neighbors(pt, EnumerationConfig()) == [2]
        assert feasible_neighbors(pt, EnumerationConfig(kind="strong")) == []
        assert feasible_neighbors(pt, EnumerationConfig(kind="stable", d=1)) == []

    def test_last_steps_of_known_trace(self, k4):
        # The final two steps of a full strong trace stay feasible,
        # including the capacity of the closing edge back to vertex 0.
        pt = build_partial(k4, K4_STRONG[:10])
        assert feasible_neighbors(pt, EnumerationConfig(kind="strong")) == [2]
        pt.push(2)
        assert feasible_neighbors(pt, EnumerationConfig(kind="strong")) == [3]

    def test_full_length_returns_empty(self, triangle):
        pt = build_partial(triangle, (0, 1, 0, 2, 1, 2))
        assert feasible_neighbors(pt, EnumerationConfig()) == []


class TestCanonicalExtension:
    def test_collapses_symmetric_candidates(self, k4):
        # The stabilizer of the base edge in Aut(K4) swaps 2 and 3, so
        # one of them represents both.
        pt = PartialTrace.initial(k4)
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        assert canonical_extension(pt, [0, 2, 3], rs) == [0, 2]

    def test_unsorted_input(self, k4):
        pt = PartialTrace.initial(k4)
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        assert canonical_extension(pt, [3, 0, 2], rs) == [0, 2]

    def test_singleton(self, k4):
        pt = PartialTrace.initial(k4)
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        assert canonical_extension(pt, [2], rs) == [2]

    def test_trivial_stabilizer_keeps_all(self, k4):
        # After 0,1,2 no nontrivial automorphism fixes the prefix, so no
        # candidates collapse.
        pt = build_partial(k4, (0, 1, 2))
        rs = RetainedSymmetries.initial(automorphisms(k4), 12).unmaintained()
        assert canonical_extension(pt, [0, 1, 3], rs) == [0, 1, 3]


class TestRetainedSymmetries:
    def test_initial_relabels_fix_base_edge(self, k4):
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        assert all(p[0] == 0 and p[1] == 1 for p in rs.relabels)
        # The stabilizer of the ordered pair (0, 1) in Aut(K4) = S4 is
        # exactly {identity, swap 2 and 3}.
        assert sorted(rs.relabels) == [(0, 1, 2, 3), (0, 1, 3, 2)]

    def test_prune_narrows_relabels(self, k4):
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        pt = build_partial(k4, (0, 1, 2))
        rs2 = prune(rs, pt)
        assert rs2.smaller_witness is None
        assert rs2.relabels == ((0, 1, 2, 3),)

    def test_prune_finds_relabel_witness(self, k4):
        # Swapping 2 and 3 maps the prefix 0,1,3 to the smaller 0,1,2.
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        pt = build_partial(k4, (0, 1, 3))
        w = prune(rs, pt).smaller_witness
        assert w == SymmetryElement((0, 1, 3, 2), 0, False)
        assert apply_symmetry(w, (0, 1, 3)) == (0, 1, 2)

    def test_prune_finds_reversal_witness(self, triangle):
        # Reading 0,1,2,1 backwards from its end and relabelling 1 to 0
        # yields 0,1,0,...: strictly smaller, so no completion of this
        # prefix can be canonical.
        rs = RetainedSymmetries.initial(automorphisms(triangle), 6)
        pt = PartialTrace.initial(triangle)
        for v in (2, 1):
            pt.push(v)
            rs = prune(rs, pt)
        assert rs.smaller_witness == SymmetryElement((2, 0, 1), 3, True)

    def test_canonical_prefixes_have_no_witness(self, triangle):
        rs = RetainedSymmetries.initial(automorphisms(triangle), 6)
        pt = PartialTrace.initial(triangle)
        for v in (0, 2, 1, 2):
            pt.push(v)
            rs = prune(rs, pt)
            assert rs.smaller_witness is None

    def test_materialize_full_length_is_stabilizer(self, triangle):
        aut = automorphisms(triangle)
        rs = RetainedSymmetries.initial(aut, 6)
        w = (0, 1, 0, 2, 1, 2)
        got = rs.materialize(w)
        assert all(tag == "stabilizer" for _, tag in got)
        expected = {
            g for g in symmetry_elements(aut, 6) if apply_symmetry(g, w) == w
        }
        assert {g for g, _ in got} == expected

    def test_materialize_shrinks_along_prefix(self, k4):
        aut = automorphisms(k4)
        rs = RetainedSymmetries.initial(aut, 12)
        pt = PartialTrace.initial(k4)
        prev = {g for g, _ in rs.materialize(pt.seq)}
        for v in (2, 0, 1, 3):
            pt.push(v)
            rs = prune(rs, pt)
            assert rs.smaller_witness is None
            tagged = rs.materialize(pt.seq)
            cur = {g for g, _ in tagged}
            assert cur <= prev
            prev = cur
            # The compact relabel stabilizer agrees with the tagged view.
            pure = {
                g.perm
                for g, tag in tagged
                if tag == "stabilizer" and g.shift == 0 and not g.reverse
            }
            assert pure == set(rs.relabels)

    def test_unmaintained_refilters(self, k4):
        rs = RetainedSymmetries.initial(automorphisms(k4), 12).unmaintained()
        assert rs.prefix_fixing_relabels((0, 1, 2)) == ((0, 1, 2, 3),)


class TestExtendFeasibly:
    def test_children_are_pushed(self, k4):
        rs = RetainedSymmetries.initial(automorphisms(k4), 12)
        root = SearchNode(PartialTrace.initial(k4), rs)
        queue = []
        extend_feasibly(root.partial, root.retained, queue, EnumerationConfig(kind="strong"))
        assert [tuple(n.partial.seq) for n in queue] == [(0, 1, 0), (0, 1, 2)]

    def test_pruned_children_are_dropped(self, triangle):
        # From 0,1,2 the only extensions are 0 and 1, and 0,1,2,1 is
        # killed by its reversal witness.
        rs = RetainedSymmetries.initial(automorphisms(triangle), 6)
        pt = PartialTrace.initial(triangle)
        pt.push(2)
        rs = prune(rs, pt)
        queue = []
        extend_feasibly(pt, rs, queue, EnumerationConfig())
        assert [tuple(n.partial.seq) for n in queue] == [(0, 1, 2, 0)]

    def test_prune_disabled_keeps_retained(self, k4):
        rs = RetainedSymmetries.initial(automorphisms(k4), 12).unmaintained()
        root = SearchNode(PartialTrace.initial(k4), rs)
        queue = []
        extend_feasibly(
            root.partial, root.retained, queue, EnumerationConfig(), use_prune=False
        )
        assert queue and all(n.retained is rs for n in queue)


TRIANGLE_EXPECTED = {
    ("any", None, "any"): [(0, 1, 0, 2, 1, 2), (0, 1, 2, 0, 1, 2)],
    ("any", None, "parallel"): [(0, 1, 2, 0, 1, 2)],
    ("any", None, "antiparallel"): [(0, 1, 0, 2, 1, 2)],
    ("strong", None, "any"): [(0, 1, 2, 0, 1, 2)],
    ("strong", None, "antiparallel"): [],
    ("stable", 1, "any"): [(0, 1, 2, 0, 1, 2)],
}


class TestEnumerateTraces:
    @pytest.mark.parametrize(
        "key,expected", sorted(TRIANGLE_EXPECTED.items(), key=str)
    )
    def test_triangle_values(self, triangle, key, expected):
        kind, d, orientation = key
        cfg = EnumerationConfig(kind=kind, d=d, orientation=orientation)
        assert enumerate_traces(triangle, cfg) == expected

    def test_single_edge_graph(self):
        g = Graph(2, [(0, 1)])
        assert enumerate_traces(g) == [(0, 1)]
        assert enumerate_traces(g, EnumerationConfig(kind="strong")) == [(0, 1)]
        assert enumerate_traces(g, EnumerationConfig(orientation="parallel")) == []

    def test_output_sorted_unique_and_rooted(self, k4):
        out = enumerate_traces(k4)
        assert out == sorted(set(out))
        assert all(w[:2] == (0, 1) for w in out)

    def test_outputs_pass_all_predicates(self, prism3):
        cfg = EnumerationConfig(kind="stable", d=1)
        aut = automorphisms(prism3)
        out = enumerate_traces(prism3, cfg)
        assert out
        for w in out:
            assert is_double_trace(prism3, w)
            assert satisfies_kind(prism3, w, cfg)
            assert satisfies_orientation(prism3, w, cfg)
            assert is_canonical(prism3, w, aut)

    def test_requires_base_edge(self):
        g = Graph(3, [(0, 2), (1, 2)])
        with pytest.raises(ValueError, match="adjacent"):
            enumerate_traces(g)

    def test_warns_when_d_exceeds_min_degree(self, triangle):
        with pytest.warns(UserWarning, match="minimum degree"):
            enumerate_traces(triangle, EnumerationConfig(kind="stable", d=3))

    @pytest.mark.parametrize(
        "flags",
        [
            {"use_prune": False},
            {"use_canonical_extension": False},
            {"use_kind_lookahead": False},
            {
                "use_prune": False,
                "use_canonical_extension": False,
                "use_kind_lookahead": False,
            },
        ],
    )
    def test_disabling_accelerations_keeps_output(self, flags):
        for graph in (named_graph("tetrahedron"), named_graph("prism", 3)):
            for cfg in (
                EnumerationConfig(),
                EnumerationConfig(kind="strong"),
                EnumerationConfig(kind="stable", d=1, orientation="antiparallel"),
            ):
                assert enumerate_traces(graph, cfg, **flags) == enumerate_traces(graph, cfg)

    def test_parallel_jobs_match_serial(self, prism3):
        cfg = EnumerationConfig(kind="strong")
        assert enumerate_traces(prism3, cfg, jobs=2) == enumerate_traces(prism3, cfg)

    def test_parallel_jobs_any_kind(self, k4):
        assert enumerate_traces(k4, jobs=3) == enumerate_traces(k4)

    def test_precomputed_aut_accepted(self, k4):
        aut = automorphisms(k4)
        assert enumerate_traces(k4, aut=aut) == enumerate_traces(k4)


class TestFeasibilityPredicates:
    def test_parallel_strong_needs_even_degrees(self):
        assert admits_parallel_strong(named_graph("octahedron"))
        assert admits_parallel_strong(Graph(3, [(0, 1), (0, 2), (1, 2)]))
        assert not admits_parallel_strong(named_graph("tetrahedron"))
        assert not admits_parallel_strong(named_graph("cube"))

    def test_d_stable_needs_min_degree(self, k4):
        assert admits_d_stable(k4, 1)
        assert admits_d_stable(k4, 3)
        assert not admits_d_stable(k4, 4)
        with pytest.raises(ValueError):
            admits_d_stable(k4, 0)

    @pytest.mark.parametrize(
        "name,k,expected",
        [
            ("tetrahedron", None, False),
            ("prism", 3, True),
            ("prism", 4, False),
            ("prism", 5, True),
            ("pyramid", 4, True),
            ("bipyramid", 3, False),
            ("octahedron", None, False),
            ("cube", None, False),
        ],
    )
    def test_antiparallel_strong_spanning_tree(self, name, k, expected):
        assert admits_antiparallel_strong(named_graph(name, k)) is expected

    def test_antiparallel_triangle(self, triangle):
        # The co-tree of any spanning tree is a single edge: always odd.
        assert not admits_antiparallel_strong(triangle)

    def test_antiparallel_size_guard(self):
        with pytest.raises(ValueError, match="refuses"):
            admits_antiparallel_strong(named_graph("prism", 7))
        # An explicit larger budget lifts the refusal.
        assert admits_antiparallel_strong(named_graph("prism", 7), max_edges=21)
