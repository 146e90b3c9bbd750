import numpy as np

from signedclust import (
    Clustering,
    Constraint,
    SignedGraph,
    build_hierarchy,
    edge_cut,
    generate_planted,
    global_search,
    multilevel_once,
    scml,
)

from conftest import enum_min_cut, random_assignment, random_signed_graph


class TestScml:
    def test_twin_optimum(self, g_twin):
        # enumerated optimum over all 15 partitions is -2
        assert enum_min_cut(g_twin) == -2.0
        assert scml(g_twin, seed=1).cut == -2.0

    def test_pathneg(self, g_pathneg):
        out = scml(g_pathneg, seed=0)
        assert out.cut == -1.0
        assert out.k == 2

    def test_positive_only_groups_components(self):
        g = SignedGraph.from_edges(4, [(0, 1, 2.0), (2, 3, 2.0)])
        out = scml(g, seed=0)
        assert out.cut == 0.0
        assert out.k == 2  # one cluster per connected component

    def test_degenerate_graphs(self):
        single = SignedGraph.from_edges(1, [])
        assert scml(single, seed=0).cut == 0.0
        isolated = SignedGraph.from_edges(3, [])
        out = scml(isolated, seed=0)
        assert out.cut == 0.0
        assert out.k == 3

    def test_output_at_most_unrefined_coarsest_lift(self):
        rng = np.random.default_rng(3)
        for t in range(30):
            g = random_signed_graph(rng, int(rng.integers(4, 30)), 0.5)
            h = build_hierarchy(g, rng=np.random.default_rng(t))
            unrefined = h.coarsest.total_weight  # singleton lift cut
            out = multilevel_once(g, rng=np.random.default_rng(t))
            assert out.cut <= unrefined
            assert out.cut >= g.sum_neg

    def test_determinism_bit_for_bit(self):
        rng = np.random.default_rng(5)
        for t in range(10):
            g = random_signed_graph(rng, int(rng.integers(4, 40)), 0.4)
            a = scml(g, seed=t)
            b = scml(g, seed=t)
            assert a.cut == b.cut
            assert np.array_equal(a.assignment, b.assignment)

    def test_planted_recovery_small(self):
        for t, (k, size) in enumerate([(2, 16), (4, 16), (8, 32)]):
            g, _ = generate_planted(k, size, p_in=0.5, p_out=0.2, noise=0.0, seed=t)
            out = scml(g, seed=t)
            assert out.cut == g.sum_neg


class TestGlobalSearch:
    def test_from_optimum_stays(self, g_twin):
        start = Clustering.from_assignment(g_twin, [0, 0, 1, 1])
        out = global_search(g_twin, start, rng=np.random.default_rng(0))
        assert out.cut == -2.0

    def test_from_all_in_one_can_split(self, g_twin):
        start = Clustering.all_in_one(g_twin)
        out = global_search(g_twin, start, rng=np.random.default_rng(0))
        assert out.cut <= 0.0
        assert out.cut >= -2.0  # enumerated optimum bound

    def test_never_worse_fuzzed(self):
        rng = np.random.default_rng(7)
        for t in range(100):
            n = int(rng.integers(3, 26))
            g = random_signed_graph(rng, n, 0.5)
            start = Clustering.from_assignment(
                g, random_assignment(rng, n, max(1, n // 2))
            )
            out = global_search(g, start, rng=np.random.default_rng(t))
            assert out.cut <= start.cut
            assert out.cut == edge_cut(g, out.assignment)


class TestMultilevelOnce:
    def test_candidate_image_beats_singletons(self, g_twin):
        # forcing the optimum as a candidate with its cut-edge constraint
        best = Clustering.from_assignment(g_twin, [0, 0, 1, 1])
        out = multilevel_once(
            g_twin,
            rng=np.random.default_rng(0),
            constraint=Constraint.subset_of(best),
            candidates=[best],
        )
        assert out.cut <= best.cut

    def test_first_level_only_drops_constraint_later(self):
        # positive 4-clique split by the reference: constrained coarsening
        # stops at the 2-node quotient, but with first_level_only the second
        # level merges across the formerly blocked edges
        clique = SignedGraph.from_edges(
            4, [(u, v, 1.0) for u in range(4) for v in range(u + 1, 4)]
        )
        ref = Clustering.from_assignment(clique, [0, 0, 1, 1])
        full = build_hierarchy(
            clique, Constraint.subset_of(ref), np.random.default_rng(0)
        )
        assert full.coarsest.n == 2
        dropped = build_hierarchy(
            clique,
            Constraint.subset_of(ref),
            np.random.default_rng(0),
            first_level_only=True,
        )
        assert dropped.coarsest.n == 1

    def test_blocked_level1_contraction_still_valid(self):
        # an all-blocking reference prevents any contraction; the cycle then
        # refines the input graph directly and stays exact
        rng = np.random.default_rng(11)
        for t in range(20):
            n = int(rng.integers(6, 24))
            g = random_signed_graph(rng, n, 0.5)
            ref = Clustering.from_assignment(g, np.arange(n))
            out = multilevel_once(
                g,
                rng=np.random.default_rng(t),
                constraint=Constraint.subset_of(ref),
                first_level_only=True,
            )
            assert out.cut == edge_cut(g, out.assignment)
