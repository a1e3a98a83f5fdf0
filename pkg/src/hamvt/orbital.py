"""Suborbits, pairing, generalized orbital graphs, block quotients."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .perms import BlockSystem, NotTransitive, PermGroup, point_stabilizer


class EmptySelection(ValueError):
    """Orbital graph needs at least one nontrivial suborbit."""


@dataclass(frozen=True)
class SuborbitTable:
    """Orbits of a point stabilizer, with the pairing involution.

    Suborbits are sorted by (length, minimum element); ``pairing[i]`` is
    the index of the suborbit paired with suborbit i (itself when
    self-paired).
    """

    base: int
    suborbits: tuple[tuple[int, ...], ...]
    pairing: tuple[int, ...]

    def index_of(self, w: int) -> int:
        for i, s in enumerate(self.suborbits):
            if w in s:
                return i
        raise KeyError(w)

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.suborbits)

    def trivial_index(self) -> int:
        return self.index_of(self.base)


def suborbits(G: PermGroup, v: int) -> SuborbitTable:
    """Suborbit table at v: orbits of G_v, paired via inverse transport."""
    if not G.is_transitive():
        raise NotTransitive("suborbits require a transitive group")
    stab = point_stabilizer(G, v)
    subs = tuple(sorted((tuple(o) for o in stab.orbits()),
                        key=lambda s: (len(s), s[0])))
    trans = G.transversal_from(v)
    lookup = {}
    for i, s in enumerate(subs):
        for w in s:
            lookup[w] = i
    # suborbit of w pairs with the suborbit of v^(g^-1) where v^g = w
    pairing = tuple(lookup[trans[s[0]].inv().images[v]] for s in subs)
    table = SuborbitTable(v, subs, pairing)
    for i, j in enumerate(table.pairing):
        if table.pairing[j] != i:
            raise AssertionError("pairing is not an involution")
    return table


@dataclass(frozen=True)
class OrbitalGraph:
    graph: Graph
    connected: bool
    symmetrized: bool  # set when the selection had to be pair-closed
    selection: tuple[int, ...]


def orbital_graph(G: PermGroup, v: int, selection) -> OrbitalGraph:
    """Generalized orbital graph for a set of suborbit indices.

    Adjacency is transported along a BFS transversal from v; selections
    not closed under pairing are closed automatically and flagged.
    """
    table = suborbits(G, v)
    sel = set(int(i) for i in selection)
    if not sel:
        raise EmptySelection("selection is empty")
    if table.trivial_index() in sel:
        raise ValueError("selection includes the trivial suborbit")
    closed = set(sel)
    for i in sel:
        closed.add(table.pairing[i])
    symmetrized = closed != sel
    targets = frozenset(w for i in closed for w in table.suborbits[i])
    trans = G.transversal_from(v)
    n = G.degree
    edges = set()
    for u in range(n):
        g = trans[u]
        for w in targets:
            x = g.images[w]
            if x != u:
                edges.add((min(u, x), max(u, x)))
    X = Graph.from_edges(n, sorted(edges))
    return OrbitalGraph(X, X.is_connected(), symmetrized,
                        tuple(sorted(closed)))


def block_quotient(X: Graph, system: BlockSystem) -> Graph:
    """Simple quotient: cells adjacent iff joined by at least one edge."""
    cells = system.cells
    cell_of = {}
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    if sorted(cell_of) != list(range(X.n)):
        raise ValueError("cells do not partition the vertex set")
    edges = set()
    for u, w in X.edges():
        a, b = cell_of[u], cell_of[w]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(len(cells), sorted(edges))
