"""Strategy-cascade analysis reports."""

import pytest

from hamvt import (Graph, GroupDegreeMismatch, GroupNotAutomorphisms,
                   MalformedInput, Perm, analyze, catalog, catalog_gens,
                   graph_from_json, group_from_json, verify_hamilton)


class TestAnalyze:
    def test_disconnected(self):
        X = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2),
                                 (3, 4), (4, 5), (3, 5)])
        rep = analyze(X)
        assert rep.result == "no_hamilton_cycle"
        assert rep.reason == "disconnected"

    def test_circulant_30_lift_strategy(self):
        X = catalog("circulant:30:1,6")
        rep = analyze(X, catalog_gens("circulant:30:1,6"))
        assert rep.result == "certificate"
        assert verify_hamilton(X, rep.certificate)
        assert any(s["strategy"].startswith("lift") and
                   s["outcome"] == "found" for s in rep.strategy_trace)

    def test_truncated_petersen(self):
        X = catalog("truncated_petersen")
        rep = analyze(X, catalog_gens("truncated_petersen"))
        assert rep.result == "no_hamilton_cycle"
        assert rep.exception_flag
        assert rep.path_certificate is not None
        assert verify_hamilton(X, rep.path_certificate)

    def test_exception_flag_only_for_the_truncation(self):
        assert not analyze(catalog("petersen"),
                           catalog_gens("petersen")).exception_flag

    def test_degree_mismatch(self):
        with pytest.raises(GroupDegreeMismatch):
            analyze(catalog("petersen"), [Perm.identity(4)])

    def test_not_automorphisms(self):
        with pytest.raises(GroupNotAutomorphisms):
            analyze(catalog("petersen"),
                    [Perm((1, 0, 2, 3, 4, 5, 6, 7, 8, 9))])

    def test_deterministic(self):
        X = catalog("crown:5")
        a = analyze(X, catalog_gens("crown:5")).to_json()
        b = analyze(X, catalog_gens("crown:5")).to_json()
        assert a == b

    def test_strategy_order_fixed(self):
        rep = analyze(catalog("petersen"), catalog_gens("petersen"))
        names = [s["strategy"] for s in rep.strategy_trace]
        lifts = [i for i, s in enumerate(names) if s.startswith("lift")]
        assert lifts and max(lifts) < names.index("jackson")
        assert names.index("jackson") < names.index("exact_search")

    def test_vertex_transitive_recorded(self):
        rep = analyze(catalog("petersen"), catalog_gens("petersen"))
        assert rep.vertex_transitive is True
        rep = analyze(catalog("petersen"))
        assert rep.vertex_transitive is None


class TestIngest:
    def test_graph_round_trip(self):
        X = catalog("petersen")
        assert graph_from_json(
            {"n": X.n, "edges": [list(e) for e in X.edges()]}) == X

    def test_bad_graph(self):
        with pytest.raises(MalformedInput):
            graph_from_json({"n": 2, "edges": [[0, 5]]})
        with pytest.raises(MalformedInput):
            graph_from_json({"edges": []})
        with pytest.raises(MalformedInput):
            graph_from_json({"n": 3, "edges": [[0, 1], [1, 0]]})

    def test_group_json(self):
        gens = group_from_json(
            {"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]})
        assert len(gens) == 2 and gens[0].degree == 3
        with pytest.raises(GroupDegreeMismatch):
            group_from_json({"degree": 4, "generators": [[1, 0, 2]]})
