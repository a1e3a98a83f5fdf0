"""Product-model cycles, truncation, and the catalog."""

from math import gcd

import pytest

from hamvt import (BadBaseCycle, BadParams, GcdNotOne, Graph, NotCubic,
                   PermGroup, ProductModel, UnknownName, catalog,
                   catalog_gens, truncate_cubic, truncation_lift,
                   verify_hamilton, y1_cycle, y2_cycle)


def base_cycle_model(kind, t, p):
    base = catalog(f"circulant:{t}:1")
    return ProductModel(kind, base, p, tuple(range(t)))


class TestY1:
    def test_t4_p3(self):
        m = base_cycle_model("Y1", 4, 3)
        cert = y1_cycle(m)
        assert len(cert.sequence) == 12
        assert verify_hamilton(m.graph(), cert)

    def test_t5_p2(self):
        m = base_cycle_model("Y1", 5, 2)
        assert verify_hamilton(m.graph(), y1_cycle(m))

    def test_gcd_violation(self):
        with pytest.raises(GcdNotOne):
            y1_cycle(base_cycle_model("Y1", 4, 2))

    def test_bad_base_cycle(self):
        base = catalog("circulant:5:1")
        with pytest.raises(BadBaseCycle):
            ProductModel("Y1", base, 3, (0, 2, 1, 3, 4))


class TestY2:
    def test_prism_case(self):
        m = base_cycle_model("Y2", 3, 2)
        # same graph as the triangular prism, up to interleaved labels
        relabel = lambda v: 2 * v if v < 3 else 2 * (v - 3) + 1
        expected = Graph.from_edges(6, [(relabel(a), relabel(b))
                                        for a, b in catalog("prism:3").edges()])
        assert m.graph() == expected
        assert verify_hamilton(m.graph(), y2_cycle(m))

    def test_even_base(self):
        m = base_cycle_model("Y2", 4, 3)
        assert verify_hamilton(m.graph(), y2_cycle(m))

    def test_both_odd(self):
        m = base_cycle_model("Y2", 5, 3)
        assert verify_hamilton(m.graph(), y2_cycle(m))


@pytest.mark.parametrize("t", range(3, 9))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_full_suite(t, p):
    m2 = base_cycle_model("Y2", t, p)
    assert verify_hamilton(m2.graph(), y2_cycle(m2))
    if gcd(t, p) == 1:
        m1 = base_cycle_model("Y1", t, p)
        assert verify_hamilton(m1.graph(), y1_cycle(m1))


class TestTruncation:
    def test_k4(self):
        T = truncate_cubic(catalog("complete:4"))
        assert T.n == 12
        assert all(T.degree(v) == 3 for v in range(12))

    def test_not_cubic(self):
        with pytest.raises(NotCubic):
            truncate_cubic(catalog("circulant:4:1"))

    def test_triangle_quotient_recovers_base(self):
        from hamvt import BlockSystem, block_quotient
        for name in ("petersen", "complete:4", "heawood"):
            X = catalog(name)
            T = truncate_cubic(X)
            cells = tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(X.n))
            assert block_quotient(T, BlockSystem(cells, 3)) == X

    def test_connectivity_preserved(self):
        assert truncate_cubic(catalog("petersen")).is_connected()

    def test_lifted_automorphisms(self):
        X = catalog("petersen")
        T = truncate_cubic(X)
        for g in catalog_gens("petersen"):
            h = truncation_lift(X, g)
            for u, w in T.edges():
                assert T.has_edge(h.images[u], h.images[w])


class TestCatalog:
    def test_petersen(self):
        P = catalog("petersen")
        assert (P.n, P.edge_count(), P.girth()) == (10, 15, 5)

    def test_coxeter(self):
        C = catalog("coxeter")
        assert C.n == 28 and all(C.degree(v) == 3 for v in range(28))
        assert C.girth() == 7

    def test_heawood(self):
        from hamvt import structure_report
        H = catalog("heawood")
        rep = structure_report(H)
        assert H.n == 14 and rep.regular == 3 and rep.bipartite

    def test_non_incidence(self):
        N = catalog("non_incidence_pg22")
        assert N.n == 14 and all(N.degree(v) == 4 for v in range(14))

    def test_crown(self):
        C = catalog("crown:5")
        assert C.n == 10 and all(C.degree(v) == 4 for v in range(10))

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            catalog("mystery")

    def test_bad_params(self):
        with pytest.raises(BadParams):
            catalog("crown:1")
        with pytest.raises(BadParams):
            catalog("circulant:6:6")
        with pytest.raises(BadParams):
            catalog("complete:x")

    @pytest.mark.parametrize("name", [
        "petersen", "truncated_petersen", "heawood", "non_incidence_pg22",
        "crown:5", "circulant:12:1,3", "prism:6", "complete:5",
        "complete_bipartite:3:3",
    ])
    def test_gens_are_transitive_automorphisms(self, name):
        X = catalog(name)
        gens = catalog_gens(name)
        for g in gens:
            for u, w in X.edges():
                assert X.has_edge(g.images[u], g.images[w])
        assert PermGroup(X.n, gens).is_transitive()

    def test_coxeter_gens_are_automorphisms(self):
        # rotation + doubling: a proper subgroup, not claimed transitive
        X = catalog("coxeter")
        for g in catalog_gens("coxeter"):
            for u, w in X.edges():
                assert X.has_edge(g.images[u], g.images[w])

    def test_petersen_group_order(self):
        assert PermGroup(10, catalog_gens("petersen")).order() == 120
