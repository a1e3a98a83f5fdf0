"""Suborbits, orbital graphs, block quotients."""

import pytest

from hamvt import (BlockSystem, EmptySelection, NotTransitive, Perm,
                   PermGroup, block_quotient, orbital_graph, suborbits)
from hamvt.products import catalog

D5 = PermGroup(5, [Perm((1, 2, 3, 4, 0)), Perm((0, 4, 3, 2, 1))])
Z6 = PermGroup(6, [Perm((1, 2, 3, 4, 5, 0))])


class TestSuborbits:
    def test_d5(self):
        tbl = suborbits(D5, 0)
        assert tbl.suborbits == ((0,), (1, 4), (2, 3))
        assert tbl.pairing == (0, 1, 2)  # all self-paired

    def test_regular_action_singletons(self):
        tbl = suborbits(Z6, 0)
        assert tbl.lengths() == (1,) * 6
        # in a regular abelian-free sense: suborbit {k} pairs with {-k}
        for i, s in enumerate(tbl.suborbits):
            paired = tbl.suborbits[tbl.pairing[i]]
            assert paired == ((6 - s[0]) % 6,)

    def test_partition(self):
        tbl = suborbits(D5, 0)
        assert sorted(x for s in tbl.suborbits for x in s) == list(range(5))
        assert tbl.suborbits[tbl.trivial_index()] == (0,)

    def test_requires_transitive(self):
        with pytest.raises(NotTransitive):
            suborbits(PermGroup(4, [Perm((1, 0, 2, 3))]), 0)

    def test_pairing_involution_s6(self):
        from hamvt.fixtures import s6_on_s4_cosets
        tbl = suborbits(s6_on_s4_cosets().group, 0)
        assert tbl.lengths() == (1, 1, 4, 4, 4, 4, 12)
        for i, j in enumerate(tbl.pairing):
            assert tbl.pairing[j] == i


class TestOrbitalGraph:
    def test_z6_gives_c6(self):
        tbl = suborbits(Z6, 0)
        idx = tbl.index_of(1)
        og = orbital_graph(Z6, 0, [idx])
        assert og.symmetrized  # {1} pairs with {5}
        assert og.graph == catalog("circulant:6:1")

    def test_d5_gives_c5(self):
        tbl = suborbits(D5, 0)
        og = orbital_graph(D5, 0, [tbl.index_of(1)])
        assert not og.symmetrized
        assert og.graph == catalog("circulant:5:1")
        assert og.connected

    def test_empty_selection(self):
        with pytest.raises(EmptySelection):
            orbital_graph(D5, 0, [])

    def test_trivial_suborbit_rejected(self):
        tbl = suborbits(D5, 0)
        with pytest.raises(ValueError):
            orbital_graph(D5, 0, [tbl.trivial_index()])

    def test_generators_are_automorphisms(self):
        for G in (D5, Z6):
            tbl = suborbits(G, 0)
            for i in range(len(tbl.suborbits)):
                if i == tbl.trivial_index():
                    continue
                X = orbital_graph(G, 0, [i]).graph
                for g in G.generators:
                    for u, w in X.edges():
                        assert X.has_edge(g.images[u], g.images[w])

    def test_valency_is_selection_length(self):
        tbl = suborbits(D5, 0)
        og = orbital_graph(D5, 0, [1, 2])
        total = sum(len(tbl.suborbits[i]) for i in og.selection)
        assert all(og.graph.degree(v) == total for v in range(5))


class TestBlockQuotient:
    def test_c6_mod_antipodes(self):
        C6 = catalog("circulant:6:1")
        sys_ = BlockSystem(((0, 3), (1, 4), (2, 5)), 2)
        assert block_quotient(C6, sys_) == catalog("complete:3")

    def test_prism_triangles(self):
        PR = catalog("prism:3")
        sys_ = BlockSystem(((0, 1, 2), (3, 4, 5)), 3)
        Q = block_quotient(PR, sys_)
        assert Q.n == 2 and Q.edge_count() == 1

    def test_singletons_identity(self):
        P = catalog("petersen")
        sys_ = BlockSystem(tuple((v,) for v in range(10)), 1)
        assert block_quotient(P, sys_) == P

    def test_connected_quotient(self):
        C12 = catalog("circulant:12:1")
        sys_ = BlockSystem(tuple((i, i + 6) for i in range(6)), 2)
        assert block_quotient(C12, sys_).is_connected()
