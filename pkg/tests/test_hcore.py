import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hyturan import hcore as hc
from hyturan import construct as cons


def k4_3():
    return cons.complete_r_graph(4, 3)


class TestConstruction:
    def test_single_edge(self):
        H = hc.Hypergraph(3, 3, [{0, 1, 2}])
        assert H.m == 1
        assert H.edges == ((0, 1, 2),)

    def test_repeated_vertex_rejected(self):
        with pytest.raises(hc.ValidationError, match="repeated vertex"):
            hc.Hypergraph(3, 3, [(0, 1, 1)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(hc.ValidationError, match="duplicate edge"):
            hc.Hypergraph(4, 2, [(0, 1), (1, 0)])

    def test_wrong_size_rejected(self):
        with pytest.raises(hc.ValidationError, match="expected 3"):
            hc.Hypergraph(4, 3, [(0, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(hc.ValidationError, match="outside"):
            hc.Hypergraph(3, 3, [(0, 1, 3)])

    def test_edge_order_irrelevant(self):
        H1 = hc.Hypergraph(4, 2, [(2, 3), (0, 1)])
        H2 = hc.Hypergraph(4, 2, [(1, 0), (3, 2)])
        assert H1 == H2

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2 ** 15 - 1))
    def test_canonical_storage_roundtrip(self, mask):
        all_e = list(itertools.combinations(range(6), 2))
        edges = [all_e[i] for i in range(15) if mask >> i & 1]
        H = hc.Hypergraph(6, 2, edges)
        assert hc.Hypergraph(H.n, H.r, H.edges) == H


class TestLocalCounts:
    def test_degree_complete(self):
        assert k4_3().degree(0) == 3

    def test_codegree_complete(self):
        assert k4_3().codegree(0, 1) == 2

    def test_link_single_edge(self):
        H = hc.Hypergraph(3, 3, [(0, 1, 2)])
        assert H.link(0) == frozenset({(1, 2)})

    def test_out_of_range_vertex(self):
        with pytest.raises(IndexError):
            k4_3().degree(7)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2 ** 20 - 1))
    def test_degree_sum(self, mask):
        all_e = list(itertools.combinations(range(6), 3))
        edges = [all_e[i] for i in range(20) if mask >> i & 1]
        H = hc.Hypergraph(6, 3, edges)
        assert sum(H.degrees()) == H.r * H.m


class TestIndependenceAndPartitions:
    def test_part_is_strong_independent(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert hc.is_strong_independent(T, {0, 1})

    def test_cross_pair_not_independent(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert not hc.is_strong_independent(T, {0, 2})

    def test_empty_set_independent(self):
        assert hc.is_strong_independent(k4_3(), set())

    def test_turan_is_k_partite(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert hc.is_k_partite(T, cons.turan_partition(6, 3))

    def test_complete_graph_never_3_partite_on_4(self):
        H = k4_3()
        for assignment in itertools.product(range(3), repeat=4):
            assert not hc.is_k_partite(H, hc.Partition(3, assignment))

    def test_edgeless_always_partite(self):
        H = hc.Hypergraph(4, 3, [])
        assert hc.is_k_partite(H, hc.Partition(2, (0, 1, 0, 1)))

    def test_partition_score_turan(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert hc.partition_score(T, cons.turan_partition(6, 3)) == 3 * T.m == 24

    def test_partition_score_single_class(self):
        H = hc.Hypergraph(3, 3, [(0, 1, 2)])
        assert hc.partition_score(H, hc.Partition(1, (0, 0, 0))) == 1

    def test_partition_score_edgeless(self):
        H = hc.Hypergraph(4, 3, [])
        assert hc.partition_score(H, hc.Partition(2, (0, 1, 0, 1))) == 0

    def test_score_bounds_random(self):
        rng = random.Random(3)
        for i in range(50):
            G = cons.random_hypergraph(7, 3, 0.4, seed=i)
            k = rng.randint(1, 4)
            sigma = hc.Partition(k, tuple(rng.randrange(k) for _ in range(7)))
            s = hc.partition_score(G, sigma)
            if G.m:
                assert G.m <= s <= 3 * G.m
            rainbow = all(len({sigma.assignment[v] for v in e}) == 3 for e in G.edges)
            assert (s == 3 * G.m) == rainbow or G.m == 0


class TestTransversal:
    def test_edgeless(self):
        assert hc.transversal_number(hc.Hypergraph(4, 3, [])) == 0

    def test_single_edge(self):
        assert hc.transversal_number(hc.Hypergraph(3, 3, [(0, 1, 2)])) == 1

    def test_k4_3(self):
        assert hc.transversal_number(k4_3()) == 2

    def test_brute_force_agreement(self):
        for i in range(25):
            G = cons.random_hypergraph(7, 3, 0.3, seed=50 + i)
            tau = hc.transversal_number(G)
            best = 0 if G.m == 0 else None
            for size in range(0, 8):
                hit = any(
                    all(set(S) & set(e) for e in G.edges)
                    for S in itertools.combinations(range(7), size)
                )
                if hit or G.m == 0:
                    best = size
                    break
            assert tau == best

    def test_capacity(self):
        with pytest.raises(hc.CapacityError):
            hc.transversal_number(cons.turan_hypergraph(40, 3, 3))


class TestBlowUp:
    def test_edge_to_bipartite(self):
        H = hc.Hypergraph(2, 2, [(0, 1)])
        B = hc.blow_up(H, (2, 3))
        assert B.n == 5 and B.m == 6

    def test_g62_doubling(self):
        assert hc.blow_up(cons.g62(), [2] * 6).m == 16 * 8

    def test_identity(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert hc.blow_up(T, [1] * 6) == T

    def test_zero_deletes_class(self):
        H = hc.Hypergraph(4, 3, [(0, 1, 2), (1, 2, 3)])
        B = hc.blow_up(H, (1, 1, 1, 0))
        assert B.m == 1 and B.n == 3

    def test_length_mismatch(self):
        with pytest.raises(hc.ValidationError):
            hc.blow_up(k4_3(), (1, 1))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2 ** 10 - 1), st.tuples(*[st.integers(0, 3)] * 5))
    def test_product_formula(self, mask, sizes):
        all_e = list(itertools.combinations(range(5), 3))
        edges = [all_e[i] for i in range(10) if mask >> i & 1]
        H = hc.Hypergraph(5, 3, edges)
        if sum(sizes) < 3:
            return
        B = hc.blow_up(H, sizes)
        assert B.m == sum(math.prod(sizes[v] for v in e) for e in H.edges)


class TestEditDelta:
    def test_identity(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert hc.edit_delta(T, T).total == 0

    def test_one_removed(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert hc.edit_delta(T, T.remove_edge(T.edges[0])).total == 1

    def test_frame_mismatch(self):
        with pytest.raises(hc.ValidationError):
            hc.edit_delta(k4_3(), cons.complete_r_graph(5, 3))

    def test_symmetric_difference(self):
        A = cons.random_hypergraph(7, 3, 0.3, seed=1)
        B = cons.random_hypergraph(7, 3, 0.3, seed=2)
        delta = hc.edit_delta(A, B)
        assert delta.total == len(A.edge_set ^ B.edge_set)
        assert delta.added == B.edge_set - A.edge_set


class TestCanonicalForm:
    def test_turan_relabeling(self):
        T = cons.turan_hypergraph(6, 3, 3)
        perm = [3, 5, 0, 2, 4, 1]
        assert hc.is_isomorphic(T, T.relabel(perm))

    def test_not_isomorphic_different_m(self):
        T = cons.turan_hypergraph(6, 3, 3)
        assert not hc.is_isomorphic(T, T.remove_edge(T.edges[0]))

    def test_refined_path_relabeling(self):
        T9 = cons.turan_hypergraph(9, 3, 3)
        perm = list(range(9))
        random.Random(5).shuffle(perm)
        assert hc.is_isomorphic(T9, T9.relabel(perm))

    def test_equivalence_on_random_corpus(self):
        rng = random.Random(7)
        graphs = [cons.random_hypergraph(6, 3, 0.4, seed=200 + i) for i in range(12)]
        for G in graphs:
            assert hc.is_isomorphic(G, G)
        for G, H in itertools.combinations(graphs, 2):
            assert hc.is_isomorphic(G, H) == hc.is_isomorphic(H, G)
            assert hc.is_isomorphic(G, H) == (
                hc.canonical_form(G) == hc.canonical_form(H))

    def test_small_vs_refined_consistency(self):
        # both strategies must induce the same partition into classes
        rng = random.Random(9)
        for trial in range(10):
            edges = [e for e in itertools.combinations(range(7), 3)
                     if rng.random() < 0.25]
            G = hc.Hypergraph(7, 3, edges)
            perm = list(range(7))
            rng.shuffle(perm)
            assert hc._canonical_refined(G) == hc._canonical_refined(G.relabel(perm))
            assert (hc._canonical_small(G) == hc._canonical_small(G.relabel(perm)))

    def test_capacity(self):
        with pytest.raises(hc.CapacityError):
            hc.canonical_form(cons.turan_hypergraph(13, 3, 3))


class TestIntersectionBound:
    def test_two_sets(self):
        assert hc.intersection_lower_bound((3, 3), 4) == 2

    def test_single_set(self):
        assert hc.intersection_lower_bound((5,), 5) == 5

    def test_disjoint(self):
        assert hc.intersection_lower_bound((1, 1), 2) == 0

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 20), st.randoms())
    def test_never_exceeds_truth(self, k, universe, rng):
        sets = [frozenset(rng.sample(range(universe), rng.randint(0, universe)))
                for _ in range(k)]
        union = frozenset().union(*sets)
        inter = set(sets[0])
        for s in sets[1:]:
            inter &= s
        bound = hc.intersection_lower_bound([len(s) for s in sets], len(union))
        assert bound <= len(inter)


class TestCliqueUtilities:
    def test_covered_pairs_of_turan(self):
        T = cons.turan_hypergraph(6, 3, 3)
        adj = hc.covered_pair_adjacency(T)
        assert 1 not in adj[0]  # same part
        assert 2 in adj[0]

    def test_cliques_of_size(self):
        T = cons.turan_hypergraph(6, 3, 3)
        adj = hc.covered_pair_adjacency(T)
        triples = list(hc.cliques_of_size(adj, 3))
        assert len(triples) == 8  # one per edge of the 3-partite graph
        assert list(hc.cliques_of_size(adj, 4)) == []

    def test_maximal_cliques_complete(self):
        adj = hc.covered_pair_adjacency(k4_3())
        assert list(hc.maximal_cliques(adj)) == [(0, 1, 2, 3)]
