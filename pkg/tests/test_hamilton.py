"""Exact solver against the permutation-enumeration oracle."""

import pytest

from hamvt import (Graph, HamiltonCertificate, find_hamilton_cycle,
                   find_hamilton_path, iter_hamilton_cycles,
                   jackson_condition, verify_hamilton)
from hamvt.products import catalog
from oracles import naive_hamilton_cycle, naive_hamilton_path

SMALL_CORPUS = [
    "petersen", "crown:3", "crown:4", "crown:5",
    "circulant:6:1", "circulant:7:1,2", "circulant:8:1,4",
    "circulant:9:3", "circulant:10:2,5",
    "prism:3", "prism:4", "prism:5",
    "complete:4", "complete:5", "complete:6",
    "complete_bipartite:3:3", "complete_bipartite:2:4",
    "complete_bipartite:3:4",
]


class TestVerify:
    def test_good_cycle(self):
        C6 = catalog("circulant:6:1")
        assert verify_hamilton(C6, HamiltonCertificate("cycle",
                                                       tuple(range(6))))

    def test_repeated_vertex(self):
        C6 = catalog("circulant:6:1")
        assert not verify_hamilton(
            C6, HamiltonCertificate("cycle", (0, 1, 2, 3, 4, 4)))

    def test_non_adjacent_pair(self):
        C6 = catalog("circulant:6:1")
        assert not verify_hamilton(
            C6, HamiltonCertificate("cycle", (0, 2, 1, 3, 4, 5)))

    def test_path_does_not_need_closure(self):
        P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert verify_hamilton(P4, HamiltonCertificate("path", (0, 1, 2, 3)))
        assert not verify_hamilton(P4,
                                   HamiltonCertificate("cycle", (0, 1, 2, 3)))

    def test_json_round_trip(self):
        cert = HamiltonCertificate("cycle", (0, 1, 2))
        assert HamiltonCertificate.from_json(cert.to_json()) == cert


class TestSolver:
    def test_c5(self):
        res = find_hamilton_cycle(catalog("circulant:5:1"))
        assert res.status == "found"
        assert res.certificate.sequence in ((0, 1, 2, 3, 4), (0, 4, 3, 2, 1))

    def test_petersen_none_but_path(self):
        P = catalog("petersen")
        assert find_hamilton_cycle(P).status == "none"
        res = find_hamilton_path(P)
        assert res.status == "found"
        assert verify_hamilton(P, res.certificate)

    def test_disconnected(self):
        X = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2),
                                 (3, 4), (4, 5), (3, 5)])
        assert find_hamilton_cycle(X).status == "none"
        assert find_hamilton_path(X).status == "none"

    def test_budget_exhaustion_returns_unknown(self):
        X = catalog("truncated_petersen")
        assert find_hamilton_cycle(X, budget=5).status == "unknown"

    @pytest.mark.parametrize("name", SMALL_CORPUS)
    def test_soundness(self, name):
        X = catalog(name)
        res = find_hamilton_cycle(X)
        if res.status == "found":
            assert verify_hamilton(X, res.certificate)
        res = find_hamilton_path(X)
        if res.status == "found":
            assert verify_hamilton(X, res.certificate)

    @pytest.mark.parametrize(
        "name", [n for n in SMALL_CORPUS if catalog(n).n <= 10])
    def test_matches_naive_oracle(self, name):
        X = catalog(name)
        assert (find_hamilton_cycle(X).status == "found") == \
            naive_hamilton_cycle(X)
        assert (find_hamilton_path(X).status == "found") == \
            naive_hamilton_path(X)

    def test_both_engines_agree_near_dp_limit(self):
        # same verdicts from the DP (n <= 16) and backtracking paths
        from hamvt.hamilton import _cycle_backtrack, _cycle_dp
        for name in ["petersen", "crown:4", "complete_bipartite:3:4",
                     "circulant:14:2,7", "prism:8"]:
            X = catalog(name)
            assert X.n <= 16
            assert _cycle_dp(X).status == _cycle_backtrack(X, 10**9).status


class TestJackson:
    def test_k5(self):
        assert jackson_condition(catalog("complete:5"))

    def test_petersen(self):
        assert not jackson_condition(catalog("petersen"))

    def test_path(self):
        assert not jackson_condition(
            Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))


class TestIterCycles:
    def test_counts(self):
        assert len(list(iter_hamilton_cycles(catalog("complete:4")))) == 3
        assert len(list(iter_hamilton_cycles(catalog("circulant:6:1")))) == 1
        assert len(list(iter_hamilton_cycles(catalog("petersen")))) == 0

    def test_canonical_form(self):
        for cyc in iter_hamilton_cycles(catalog("complete:5")):
            assert cyc[0] == 0 and cyc[1] < cyc[-1]

    def test_all_distinct_and_valid(self):
        K5 = catalog("complete:5")
        seen = set(iter_hamilton_cycles(K5))
        assert len(seen) == 12  # (5-1)!/2
        for cyc in seen:
            assert verify_hamilton(K5, HamiltonCertificate("cycle", cyc))
