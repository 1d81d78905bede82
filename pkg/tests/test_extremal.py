import itertools
import random

import pytest

from hyturan import construct as cons
from hyturan import detect as det
from hyturan import extremal as ext
from hyturan import hcore as hc
from hyturan.spectral import SolverConfig


class TestEnumeration:
    def test_unrestricted_counts(self):
        assert ext.enumerate_free(4, 3) == 5
        assert ext.enumerate_free(5, 3) == 34

    def test_dedup_oracle_n5(self):
        forms = set()
        all_e = list(itertools.combinations(range(5), 3))
        for mask in range(1 << 10):
            edges = [all_e[i] for i in range(10) if mask >> i & 1]
            forms.add(hc.canonical_form(hc.Hypergraph(5, 3, edges)))
        assert ext.enumerate_free(5, 3) == len(forms)

    def test_pattern_postcondition(self):
        seen = []
        ext.enumerate_free(5, 3, det.Pattern.clique_family(4), callback=seen.append)
        assert seen and all(det.clique_family_core(H, 4) is None for H in seen)

    def test_capacity_error(self):
        with pytest.raises(hc.CapacityError):
            ext.enumerate_free(20, 3)

    def test_budget_error(self):
        with pytest.raises(hc.BudgetExceededError):
            ext.enumerate_free(5, 3, node_budget=10)

    def test_r2_matches_known_graph_counts(self):
        # simple graphs on n nodes up to isomorphism: 4 -> 11, 5 -> 34
        assert ext.enumerate_free(4, 2) == 11
        assert ext.enumerate_free(5, 2) == 34


class TestExSearch:
    def test_clique_family_n6(self):
        rec = ext.ex_search(6, 3, det.Pattern.clique_family(4))
        assert rec.best_value >= cons.turan_count(6, 3, 3)
        assert rec.turan_reference["witness_is_turan"]
        for w in rec.witnesses:
            assert det.clique_family_core(w, 4) is None

    def test_fan_family_n5(self):
        rec = ext.ex_search(5, 3, det.Pattern.fan_family(4))
        assert rec.best_value >= cons.turan_count(5, 3, 3)
        for w in rec.witnesses:
            assert det.fan_family_core(w, 4) is None

    def test_record_shape(self):
        rec = ext.ex_search(5, 3, det.Pattern.clique_family(4))
        assert rec.objective == "edges" and rec.mode == "exhaustive"
        assert rec.explored_count > 0


class TestSpexSearch:
    def test_turan_is_argmax_n5(self):
        rec = ext.spex_search(5, 3, det.Pattern.clique_family(4), p=3.0)
        assert rec.turan_reference["witness_is_turan"]
        assert abs(rec.best_value - rec.turan_reference["turan_lambda"]) < 1e-9

    def test_witness_statuses_recorded(self):
        rec = ext.spex_search(5, 3, det.Pattern.fan_family(4), p=3.0)
        assert len(rec.witness_status) == len(rec.witnesses)
        assert all(s == "converged" for s in rec.witness_status)


class TestSymmetrize:
    def test_two_disjoint_edges(self):
        H = hc.Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)])
        G = ext.symmetrize(H, 0, 3)
        assert G.edge_set == frozenset({(3, 4, 5), (0, 4, 5)})

    def test_no_edges_touched(self):
        H = hc.Hypergraph(6, 3, [(1, 2, 3)])
        assert ext.symmetrize(H, 0, 4) == H

    def test_same_vertex_rejected(self):
        with pytest.raises(hc.ValidationError):
            ext.symmetrize(cons.complete_r_graph(4, 3), 1, 1)

    def test_excluded_edges_not_transferred(self):
        H = hc.Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5), (2, 3, 4)])
        G = ext.symmetrize(H, 0, 3, excluded=lambda e: e == (3, 4, 5))
        assert (0, 4, 5) not in G.edge_set
        assert (0, 2, 4) in G.edge_set

    def test_link_transfer_property(self):
        rng = random.Random(12)
        for i in range(30):
            G = cons.random_hypergraph(7, 3, 0.35, seed=5000 + i)
            u, z = rng.sample(range(7), 2)
            Gs = ext.symmetrize(G, u, z)
            assert Gs.n == G.n and Gs.r == G.r
            assert Gs.m <= sum(1 for e in G.edges if u not in e) + G.degree(z)
            link_u = {tuple(sorted(set(e) - {u})) for e in Gs.edges if u in e}
            link_z = {tuple(sorted(set(e) - {z})) for e in G.edges
                      if z in e and u not in e}
            assert link_u.issubset(link_z)


class TestHillClimb:
    def test_edgeless_reaches_complete(self):
        rec = ext.hill_climb(hc.Hypergraph(4, 3, []), None, p=3.0,
                             budget=200, seed=2)
        assert rec.witnesses[0] == cons.complete_r_graph(4, 3)

    def test_determinism(self):
        a = ext.hill_climb(hc.Hypergraph(4, 3, []), None, p=3.0, budget=60, seed=3)
        b = ext.hill_climb(hc.Hypergraph(4, 3, []), None, p=3.0, budget=60, seed=3)
        assert a.trace == b.trace

    def test_recovers_turan_after_deletions(self):
        T = cons.turan_hypergraph(6, 3, 3)
        rng = random.Random(4)
        H0 = T.with_edges(set(T.edges) - set(rng.sample(T.edges, 2)))
        rec = ext.hill_climb(H0, det.Pattern.clique_family(4), p=3.0,
                             budget=500, seed=4)
        assert abs(rec.best_value - 8.0) < 1e-6

    def test_never_returns_containing_graph(self):
        rec = ext.hill_climb(hc.Hypergraph(5, 3, []), det.Pattern.clique_family(4),
                             p=3.0, budget=150, seed=5)
        assert det.clique_family_core(rec.witnesses[0], 4) is None

    def test_containing_start_rejected(self):
        with pytest.raises(hc.ValidationError):
            ext.hill_climb(cons.complete_r_graph(5, 3),
                           det.Pattern.clique_family(4), p=3.0)


class TestStability:
    def test_exact_turan_clean(self):
        rep = ext.stability_report(cons.turan_hypergraph(12, 3, 3), 3, 0.01)
        assert rep.missing == 0 and rep.bad == 0
        assert rep.edit_distance_to_turan == 0
        assert not rep.heavy_missing_vertices
        assert rep.best_partition.renumbered().assignment == \
            cons.turan_partition(12, 3).assignment

    def test_planted_deletions(self):
        T = cons.turan_hypergraph(12, 3, 3)
        rng = random.Random(6)
        H = T.with_edges(set(T.edges) - set(rng.sample(T.edges, 3)))
        rep = ext.stability_report(H, 3, 0.01)
        assert rep.missing == 3 and rep.bad == 0
        assert rep.edit_distance_to_turan == 3

    def test_bad_edge_detected(self):
        T = cons.turan_hypergraph(12, 3, 3)
        H = T.add_edge((0, 1, 2))  # two vertices inside the first part
        rep = ext.stability_report(H, 3, 0.01)
        assert rep.bad >= 1

    def test_large_clean_kpartite_has_empty_sets(self):
        rep = ext.stability_report(cons.turan_hypergraph(33, 3, 3), 3, 0.01)
        assert not rep.sparse_pairs
        assert not rep.heavy_sparse_vertices
        assert not rep.heavy_missing_vertices

    def test_ascent_path_matches_exact(self):
        # force the ascent branch by lowering the exact limit
        T = cons.turan_hypergraph(9, 3, 3)
        exact = ext.stability_report(T, 3, 0.01)
        ascent = ext.stability_report(T, 3, 0.01, exact_limit=10)
        assert ascent.score == exact.score
        assert ascent.missing == exact.missing == 0

    def test_k_below_r_rejected(self):
        with pytest.raises(hc.ValidationError):
            ext.stability_report(cons.complete_r_graph(4, 3), 2, 0.1)


class TestKPartiteComparison:
    def test_turan_itself(self):
        T = cons.turan_hypergraph(6, 3, 3)
        out = ext.lambda_vs_kpartite_check(T, cons.turan_partition(6, 3), 3.0)
        assert out.holds and out.isomorphic_to_turan and not out.strict

    def test_subgraph_strictly_below(self):
        T = cons.turan_hypergraph(6, 3, 3)
        H = T.remove_edge(T.edges[0])
        out = ext.lambda_vs_kpartite_check(H, cons.turan_partition(6, 3), 3.0)
        assert out.holds and out.strict and not out.isomorphic_to_turan

    def test_unbalanced_below(self):
        H = cons.complete_k_partite((1, 2, 3), 3)
        sigma = hc.Partition.from_blocks(6, [{0}, {1, 2}, {3, 4, 5}])
        out = ext.lambda_vs_kpartite_check(H, sigma, 3.0)
        assert out.holds and out.strict

    def test_non_partite_rejected(self):
        with pytest.raises(hc.ValidationError):
            ext.lambda_vs_kpartite_check(cons.complete_r_graph(4, 3),
                                         hc.Partition(3, (0, 1, 2, 0)), 3.0)
