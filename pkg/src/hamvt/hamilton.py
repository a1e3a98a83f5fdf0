"""Exact Hamilton cycle/path search, certificate checks, Jackson predicate.

The solver is the brute-force oracle for every Hamiltonicity claim in the
library: "none" is returned only after an exhaustive search completes, and
budget exhaustion yields the honest verdict "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, structure_report

DEFAULT_BUDGET = 10**9
#: Bitmask DP is used at or below this order; backtracking beyond.
DP_LIMIT = 16


@dataclass(frozen=True)
class HamiltonCertificate:
    kind: str  # "cycle" | "path"
    sequence: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "sequence": list(self.sequence)}

    @staticmethod
    def from_json(d: dict) -> "HamiltonCertificate":
        return HamiltonCertificate(d["kind"], tuple(d["sequence"]))


@dataclass(frozen=True)
class SolveResult:
    status: str  # "found" | "none" | "unknown"
    certificate: HamiltonCertificate | None
    nodes: int


class _Budget(Exception):
    pass


def verify_hamilton(X: Graph, cert: HamiltonCertificate) -> bool:
    """Linear-time check of a claimed Hamilton cycle or path."""
    seq = cert.sequence
    if len(seq) != X.n or len(set(seq)) != X.n:
        return False
    if not all(0 <= v < X.n for v in seq):
        return False
    for a, b in zip(seq, seq[1:]):
        if not X.has_edge(a, b):
            return False
    if cert.kind == "cycle":
        return X.n >= 3 and X.has_edge(seq[-1], seq[0])
    if cert.kind == "path":
        return True
    return False


def jackson_condition(X: Graph) -> bool:
    """2-connected, regular, valency at least a third of the order."""
    rep = structure_report(X)
    return (rep.two_connected and rep.regular is not None
            and 3 * rep.regular >= X.n)


def _cycle_dp(X: Graph) -> SolveResult:
    """Held-Karp style reachability DP; exhaustive for small n."""
    n = X.n
    adj = [0] * n
    for v in range(n):
        for w in X.adj[v]:
            adj[v] |= 1 << w
    full = (1 << n) - 1
    dp = [0] * (1 << n)  # dp[mask] = endpoint bitmask of 0-rooted paths
    dp[1] = 1
    nodes = 0
    for mask in range(1, 1 << n, 2):  # only masks containing vertex 0
        ends = dp[mask]
        if not ends:
            continue
        v = 0
        while ends:
            bit = ends & -ends
            ends ^= bit
            v = bit.bit_length() - 1
            nodes += 1
            ext = adj[v] & ~mask
            while ext:
                b = ext & -ext
                ext ^= b
                dp[mask | b] |= b
    closing = dp[full] & adj[0]
    if not closing:
        return SolveResult("none", None, nodes)
    # deterministic reconstruction: smallest closing endpoint, then walk back
    seq = []
    mask = full
    v = (closing & -closing).bit_length() - 1
    while v != 0:
        seq.append(v)
        prevmask = mask ^ (1 << v)
        cand = dp[prevmask] & adj[v]
        v = (cand & -cand).bit_length() - 1
        mask = prevmask
    seq.append(0)
    seq.reverse()
    cert = HamiltonCertificate("cycle", tuple(seq))
    return SolveResult("found", cert, nodes)


def _cycle_backtrack(X: Graph, budget: int) -> SolveResult:
    n = X.n
    adj = [0] * n
    for v in range(n):
        for w in X.adj[v]:
            adj[v] |= 1 << w
    full = (1 << n) - 1
    # lowest-degree-first start vertex, ties by index
    start = min(range(n), key=lambda v: (len(X.adj[v]), v))
    sbit = 1 << start
    nodes = 0

    def prune(v: int, visited: int) -> bool:
        rem = full & ~visited
        vbit = 1 << v
        # every unvisited vertex needs two usable connections
        ctx = rem | vbit | sbit
        m = rem
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if (adj[u] & ctx & ~b).bit_count() < 2:
                return True
        if adj[start] & rem == 0:
            return True
        # rem + v must be connected
        seen = vbit
        frontier = vbit
        target = rem | vbit
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= adj[b.bit_length() - 1] & target & ~seen
            seen |= nxt
            frontier = nxt
        return seen != target

    path = [start]

    def search(v: int, visited: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if visited == full:
            return bool(adj[v] & sbit)
        if prune(v, visited):
            return False
        cand = adj[v] & ~visited
        while cand:
            b = cand & -cand
            cand ^= b
            u = b.bit_length() - 1
            path.append(u)
            if search(u, visited | b):
                return True
            path.pop()
        return False

    try:
        if search(start, sbit):
            return SolveResult("found",
                               HamiltonCertificate("cycle", tuple(path)),
                               nodes)
        return SolveResult("none", None, nodes)
    except _Budget:
        return SolveResult("unknown", None, nodes)


def find_hamilton_cycle(X: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exhaustive deterministic Hamilton cycle search."""
    n = X.n
    if n < 3 or not X.is_connected() or min(X.degree(v) for v in range(n)) < 2:
        return SolveResult("none", None, 0)
    if n <= DP_LIMIT:
        return _cycle_dp(X)
    return _cycle_backtrack(X, budget)


def find_hamilton_path(X: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exhaustive deterministic Hamilton path search."""
    n = X.n
    if n == 0:
        return SolveResult("none", None, 0)
    if n == 1:
        return SolveResult("found", HamiltonCertificate("path", (0,)), 0)
    if not X.is_connected():
        return SolveResult("none", None, 0)
    adj = [0] * n
    for v in range(n):
        for w in X.adj[v]:
            adj[v] |= 1 << w
    full = (1 << n) - 1
    nodes = 0

    def prune(v: int, visited: int) -> bool:
        rem = full & ~visited
        vbit = 1 << v
        ctx = rem | vbit
        # at most one unvisited vertex may be the far endpoint (one link)
        slack = 1
        m = rem
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            c = (adj[u] & ctx & ~b).bit_count()
            if c == 0:
                return True
            if c == 1:
                slack -= 1
                if slack < 0:
                    return True
        seen = vbit
        frontier = vbit
        target = rem | vbit
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= adj[b.bit_length() - 1] & target & ~seen
            seen |= nxt
            frontier = nxt
        return seen != target

    path: list[int] = []

    def search(v: int, visited: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if visited == full:
            return True
        if prune(v, visited):
            return False
        cand = adj[v] & ~visited
        while cand:
            b = cand & -cand
            cand ^= b
            u = b.bit_length() - 1
            path.append(u)
            if search(u, visited | b):
                return True
            path.pop()
        return False

    try:
        for s in range(n):
            path[:] = [s]
            if search(s, 1 << s):
                return SolveResult("found",
                                   HamiltonCertificate("path", tuple(path)),
                                   nodes)
        return SolveResult("none", None, nodes)
    except _Budget:
        return SolveResult("unknown", None, nodes)


def iter_hamilton_cycles(X: Graph):
    """Yield every Hamilton cycle once, as a tuple starting at vertex 0
    with second entry smaller than last (orientation canonicalized).

    Intended for small graphs (quotients); no budget.
    """
    n = X.n
    if n < 3 or not X.is_connected():
        return
    adj = [0] * n
    for v in range(n):
        for w in X.adj[v]:
            adj[v] |= 1 << w
    full = (1 << n) - 1
    path = [0]

    def rec(v: int, visited: int):
        if visited == full:
            if adj[v] & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        cand = adj[v] & ~visited
        while cand:
            b = cand & -cand
            cand ^= b
            u = b.bit_length() - 1
            path.append(u)
            yield from rec(u, visited | b)
            path.pop()

    yield from rec(0, 1)
