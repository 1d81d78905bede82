import itertools
from math import comb

import pytest

from hyturan import construct as cons
from hyturan import hcore as hc


class TestTuranCount:
    @pytest.mark.parametrize("n,k,r,want", [(6, 3, 3, 8), (7, 3, 3, 12), (5, 2, 2, 6)])
    def test_known_values(self, n, k, r, want):
        assert cons.turan_count(n, k, r) == want

    def test_k_below_r_rejected(self):
        with pytest.raises(hc.ValidationError):
            cons.turan_count(6, 2, 3)

    def test_grid_against_generation(self):
        for r in range(2, 6):
            for k in range(r, 6):
                for n in range(k, 31):
                    assert cons.turan_hypergraph(n, k, r).m == cons.turan_count(n, k, r)


class TestTuranHypergraph:
    def test_defining_parts(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert cons.turan_partition(6, 3).blocks() == [{0, 1}, {2, 3}, {4, 5}]
        assert T.m == 8

    def test_single_edge_case(self):
        assert cons.turan_hypergraph(4, 4, 4).edges == ((0, 1, 2, 3),)

    def test_nine_vertices(self):
        assert cons.turan_hypergraph(9, 3, 3).m == 27

    def test_parts_balanced(self):
        for k in range(2, 6):
            for n in range(k, 26):
                sizes = [len(b) for b in cons.turan_partition(n, k).blocks()]
                assert max(sizes) - min(sizes) <= 1
                assert sum(sizes) == n

    def test_k_partite_under_defining_partition(self):
        for n, k, r in [(7, 3, 3), (10, 4, 3), (9, 4, 4)]:
            T = cons.turan_hypergraph(n, k, r)
            assert hc.is_k_partite(T, cons.turan_partition(n, k))

    def test_n_below_k_rejected(self):
        with pytest.raises(hc.ValidationError):
            cons.turan_hypergraph(2, 3, 2)


class TestCompleteAndExpansions:
    def test_complete_counts(self):
        assert cons.complete_r_graph(4, 3).m == 4
        assert cons.complete_r_graph(3, 3).m == 1
        assert cons.complete_r_graph(5, 3).m == 10

    def test_expanded_clique_shape(self):
        H = cons.expanded_clique(4, 3)
        assert (H.n, H.m) == (10, 6)
        H = cons.expanded_clique(4, 4)
        assert (H.n, H.m) == (16, 6)

    def test_expanded_clique_r2_is_complete(self):
        assert cons.expanded_clique(3, 2) == cons.complete_r_graph(3, 2)

    def test_enlargements_disjoint(self):
        H = cons.expanded_clique(5, 4)
        blocks = [tuple(v for v in e if v >= 5) for e in H.edges]
        flat = [v for b in blocks for v in b]
        assert len(flat) == len(set(flat))

    def test_shared_enlargement_variant(self):
        H = cons.expanded_clique(4, 3, disjoint_enlargements=False)
        assert H.n == 5 and H.m == 6

    def test_fan_shape(self):
        F = cons.generalized_fan(4, 3)
        assert (F.n, F.m) == (7, 4)
        F = cons.generalized_fan(5, 3)
        assert (F.n, F.m) == (12, 8)

    def test_fan_r2_is_complete(self):
        assert cons.generalized_fan(3, 2) == cons.complete_r_graph(3, 2)

    def test_fan_single_core_edge(self):
        for t, r in [(4, 3), (5, 3), (5, 4)]:
            F = cons.generalized_fan(t, r)
            inner = [e for e in F.edges if all(v < t for v in e)]
            assert inner == [tuple(range(r))]


class TestPartiteAndNamed:
    def test_balanced_three_parts(self):
        assert cons.complete_k_partite((2, 2, 2), 3) == cons.turan_hypergraph(6, 3, 3)

    def test_all_singletons(self):
        assert cons.complete_k_partite((1,) * 5, 3) == cons.complete_r_graph(5, 3)

    def test_too_few_parts(self):
        with pytest.raises(hc.ValidationError):
            cons.complete_k_partite((2, 4), 3)

    @pytest.mark.parametrize("n,want", [(6, 12), (12, 112), (3, 1)])
    def test_semibipartite_counts(self, n, want):
        assert cons.semibipartite_max(n).m == want

    def test_semibipartite_structure(self):
        for n in range(3, 13):
            a = n // 3
            H = cons.semibipartite_max(n)
            assert H.m == a * comb(n - a, 2)
            for e in H.edges:
                assert sum(1 for v in e if v < a) == 1

    def test_g62_edge_count(self):
        G = cons.g62()
        assert G.n == 6 and G.m == 16
        assert all(G.degree(v) == 8 for v in range(6))

    def test_g62_complement(self):
        missing = set(itertools.combinations(range(6), 3)) - set(cons.g62().edges)
        assert missing == {(0, 1, 2), (0, 1, 5), (2, 3, 4), (3, 4, 5)}

    def test_g62_blowup_counts(self):
        assert cons.g62_blowup((2,) * 6).m == 128
        assert cons.g62_blowup((1,) * 6) == cons.g62()
        for n in (6, 12, 18):
            assert cons.g62_blowup([n // 6] * 6).m == 2 * n ** 3 // 27

    def test_g62_extremal_balanced(self):
        assert cons.g62_extremal(12) == cons.g62_blowup((2,) * 6)

    def test_g62_extremal_unbalanced_beats_naive(self):
        G = cons.g62_extremal(14)
        assert G.n == 14
        naive = cons.g62_blowup((3, 3, 2, 2, 2, 2))
        assert G.m >= naive.m


class TestRandom:
    def test_probability_extremes(self):
        assert cons.random_hypergraph(6, 3, 0.0, 1).m == 0
        assert cons.random_hypergraph(5, 3, 1.0, 1) == cons.complete_r_graph(5, 3)

    def test_determinism(self):
        a = cons.random_hypergraph(8, 3, 0.5, seed=42)
        b = cons.random_hypergraph(8, 3, 0.5, seed=42)
        assert a == b

    def test_seed_sensitivity(self):
        a = cons.random_hypergraph(8, 3, 0.5, seed=1)
        b = cons.random_hypergraph(8, 3, 0.5, seed=2)
        assert a != b

    def test_invalid_probability(self):
        with pytest.raises(hc.ValidationError):
            cons.random_hypergraph(5, 3, 1.5, 0)
