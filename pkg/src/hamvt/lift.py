"""Voltages over Z_p and cycle lifting through semiregular automorphisms.

Sign convention, used everywhere: traversing a quotient edge from cell A
to cell B with voltage j asserts rep(A) ~ rep(B)^(rho^j); the reverse
traversal contributes -j.  The net voltage around a quotient cycle
decides the lift dichotomy: nonzero mod p lifts to a single kp-cycle,
zero to p vertex-disjoint k-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import Graph
from .hamilton import HamiltonCertificate, iter_hamilton_cycles, verify_hamilton
from .perms import Perm

#: Cap on voltage-choice branches per quotient cycle.
CHOICE_CAP = 10**6


class NotSemiregular(ValueError):
    """Element is not m cycles of length exactly p."""


class NotAutomorphism(ValueError):
    """Element does not preserve the edge set."""


class InvalidChoice(ValueError):
    """A chosen voltage is not available on its edge."""


@dataclass(frozen=True)
class SemiregularDecomposition:
    """Orbits of an (m,p)-semiregular automorphism, with positions.

    ``cells[i]`` lists the i-th orbit in rho-order starting at its
    minimum vertex; ``position[v] = (i, j)`` with v = rep(i)^(rho^j).
    """

    rho: Perm
    p: int
    m: int
    cells: tuple[tuple[int, ...], ...]
    position: dict[int, tuple[int, int]]

    def rep(self, i: int) -> int:
        return self.cells[i][0]

    def vertex(self, i: int, j: int) -> int:
        return self.cells[i][j % self.p]


@dataclass(frozen=True)
class VoltageAssignment:
    """Voltage sets of the quotient: cross[(a, b)] = {j : rep(a) ~
    rep(b)^(rho^j)} for a < b, and internal[a] likewise within cell a."""

    p: int
    cross: dict[tuple[int, int], frozenset[int]]
    internal: dict[int, frozenset[int]]

    def voltages(self, a: int, b: int) -> frozenset[int]:
        """Voltage set for the traversal a -> b (sign-adjusted)."""
        if a < b:
            return self.cross.get((a, b), frozenset())
        return frozenset((-j) % self.p
                         for j in self.cross.get((b, a), frozenset()))


def decompose(X: Graph, rho: Perm, p: int) -> SemiregularDecomposition:
    """Cells and positions for a verified (m,p)-semiregular automorphism."""
    if rho.degree != X.n:
        raise NotAutomorphism("degree mismatch")
    for u, w in X.edges():
        if not X.has_edge(rho.images[u], rho.images[w]):
            raise NotAutomorphism("rho does not preserve the edge set")
    cycs = rho.cycles()
    if sum(len(c) for c in cycs) != X.n or any(len(c) != p for c in cycs):
        raise NotSemiregular(f"cycle type is not ({X.n // p},{p})")
    cells = []
    for c in sorted(cycs):
        k = c.index(min(c))
        cells.append(c[k:] + c[:k])
    cells.sort(key=lambda c: c[0])
    position = {v: (i, j) for i, c in enumerate(cells)
                for j, v in enumerate(c)}
    return SemiregularDecomposition(rho, p, len(cells),
                                    tuple(tuple(c) for c in cells), position)


def voltage_assignment(X: Graph,
                       dec: SemiregularDecomposition) -> VoltageAssignment:
    """All voltages realized by edges of X between and within cells."""
    cross: dict[tuple[int, int], set[int]] = {}
    internal: dict[int, set[int]] = {i: set() for i in range(dec.m)}
    for u, w in X.edges():
        a, i = dec.position[u]
        b, j = dec.position[w]
        if a == b:
            internal[a].update({(j - i) % dec.p, (i - j) % dec.p})
        else:
            if a > b:
                a, b, i, j = b, a, j, i
            # shift u back to rep(a): rep(a) ~ w^(rho^-i) = rep(b)^(rho^(j-i))
            cross.setdefault((a, b), set()).add((j - i) % dec.p)
    return VoltageAssignment(dec.p,
                             {k: frozenset(v) for k, v in cross.items()},
                             {k: frozenset(v) for k, v in internal.items()})


def quotient_graph(dec: SemiregularDecomposition,
                   volt: VoltageAssignment) -> Graph:
    """Simple quotient on the cells (edge iff some cross voltage)."""
    edges = sorted(volt.cross)
    return Graph.from_edges(dec.m, edges)


def cycle_voltage(dec: SemiregularDecomposition, volt: VoltageAssignment,
                  cycle, choice) -> int:
    """Net voltage of a quotient cycle under a per-edge voltage choice."""
    k = len(cycle)
    if len(choice) != k:
        raise InvalidChoice("one voltage required per cycle edge")
    total = 0
    for idx in range(k):
        a, b = cycle[idx], cycle[(idx + 1) % k]
        j = choice[idx] % dec.p
        if j not in volt.voltages(a, b):
            raise InvalidChoice(f"voltage {j} not available on {a}->{b}")
        total += j
    return total % dec.p


def lifted_components(dec: SemiregularDecomposition, volt: VoltageAssignment,
                      cycle, choice) -> list[tuple[int, ...]]:
    """Vertex cycles of the lift of a quotient cycle (the dichotomy).

    Returns one cycle of length k*p when the net voltage is nonzero,
    else p disjoint cycles of length k.
    """
    net = cycle_voltage(dec, volt, cycle, choice)
    k = len(cycle)
    out = []
    done: set[int] = set()
    for start in range(dec.p):
        if start in done:
            continue
        seq = []
        e = start
        while True:
            for idx in range(k):
                seq.append(dec.vertex(cycle[idx], e))
                e = (e + choice[idx]) % dec.p
            if e == start:
                break
        # the component meets cell cycle[0] at start, start+net, ...
        done.update((start + t * net) % dec.p
                    for t in range(len(seq) // k))
        out.append(tuple(seq))
    return out


def _lift_sequence(dec: SemiregularDecomposition, cycle, choice,
                   rounds: int) -> tuple[int, ...]:
    seq = []
    e = 0
    for _ in range(rounds):
        for idx in range(len(cycle)):
            seq.append(dec.vertex(cycle[idx], e))
            e = (e + choice[idx]) % dec.p
    return tuple(seq)


def lift_hamilton(X: Graph, rho: Perm, p: int) -> HamiltonCertificate | None:
    """Hamilton cycle of X by lifting a quotient cycle, if one exists.

    Enumerates Hamilton cycles of the simple quotient and branches over
    voltage choices seeking nonzero net voltage; m = 2 uses a pair of
    distinct parallel voltages, m = 1 any internal step.
    """
    dec = decompose(X, rho, p)
    volt = voltage_assignment(X, dec)

    if dec.m == 1:
        steps = sorted(volt.internal[0] - {0})
        if not steps:
            return None
        j = steps[0]
        seq = tuple(dec.vertex(0, (i * j) % p) for i in range(p))
        cert = HamiltonCertificate("cycle", seq)
        return cert if verify_hamilton(X, cert) else None

    if dec.m == 2:
        vs = sorted(volt.voltages(0, 1))
        for j1 in vs:
            for j2 in vs:
                if (j1 - j2) % p == 0:
                    continue
                seq = _lift_sequence(dec, (0, 1), (j1, (-j2) % p), p)
                cert = HamiltonCertificate("cycle", seq)
                if verify_hamilton(X, cert):
                    return cert
        return None

    Q = quotient_graph(dec, volt)
    for cycle in iter_hamilton_cycles(Q):
        options = [sorted(volt.voltages(cycle[i], cycle[(i + 1) % len(cycle)]))
                   for i in range(len(cycle))]
        count = 0
        for choice in product(*options):
            count += 1
            if count > CHOICE_CAP:
                break
            if sum(choice) % p == 0:
                continue
            seq = _lift_sequence(dec, cycle, choice, p)
            cert = HamiltonCertificate("cycle", seq)
            if verify_hamilton(X, cert):
                return cert
    return None
