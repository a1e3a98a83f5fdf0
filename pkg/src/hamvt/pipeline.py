"""Strategy-cascade analysis: blocks, lifting, Jackson, exact fallback.

The cascade mirrors the structural proof strategy but is case-agnostic:
(1) validate the supplied automorphisms, (2) enumerate minimal block
systems, (3) try cycle lifting through a semiregular p-element for each
prime p dividing n, (4) solve directly when the Jackson sufficient
condition holds, (5) fall back to the exact solver within budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, structure_report
from .hamilton import (DEFAULT_BUDGET, HamiltonCertificate,
                       find_hamilton_cycle, find_hamilton_path,
                       jackson_condition, verify_hamilton)
from .lift import lift_hamilton
from .perms import (SEMIREGULAR_SEED, Perm, PermGroup, block_systems,
                    find_semiregular)
from .products import catalog


class MalformedInput(ValueError):
    pass


class GroupDegreeMismatch(ValueError):
    pass


class GroupNotAutomorphisms(ValueError):
    pass


@dataclass
class AnalysisReport:
    n: int
    edge_count: int
    connected: bool
    vertex_transitive: bool | None
    block_cell_sizes: list[int]
    strategy_trace: list[dict] = field(default_factory=list)
    result: str = "unknown"  # "certificate" | "no_hamilton_cycle" | "unknown"
    certificate: HamiltonCertificate | None = None
    path_certificate: HamiltonCertificate | None = None
    exception_flag: bool = False
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "vertex_transitive": self.vertex_transitive,
            "block_cell_sizes": self.block_cell_sizes,
            "strategy_trace": self.strategy_trace,
            "result": self.result,
            "certificate": (self.certificate.to_json()
                            if self.certificate else None),
            "path_certificate": (self.path_certificate.to_json()
                                 if self.path_certificate else None),
            "exception_flag": self.exception_flag,
            "reason": self.reason,
        }


def _primes(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_truncation_exception(X: Graph) -> bool:
    return X == catalog("truncated_petersen")


def analyze(X: Graph, group_gens=None, budget: int = DEFAULT_BUDGET,
            seed: int = SEMIREGULAR_SEED) -> AnalysisReport:
    """Full strategy-cascade report for a graph and optional group."""
    rep = structure_report(X)
    report = AnalysisReport(X.n, X.edge_count(), rep.connected, None, [])
    report.exception_flag = _is_truncation_exception(X)

    if not rep.connected:
        report.result = "no_hamilton_cycle"
        report.reason = "disconnected"
        report.strategy_trace.append(
            {"strategy": "structure", "outcome": "disconnected"})
        return report
    if X.n < 3:
        report.result = "no_hamilton_cycle"
        report.reason = "fewer than three vertices"
        report.strategy_trace.append(
            {"strategy": "structure", "outcome": "too small"})
        return report

    G = None
    if group_gens is not None:
        gens = [g if isinstance(g, Perm) else Perm.from_images(g)
                for g in group_gens]
        for g in gens:
            if g.degree != X.n:
                raise GroupDegreeMismatch(
                    f"generator degree {g.degree} != {X.n}")
            for u, w in X.edges():
                if not X.has_edge(g.images[u], g.images[w]):
                    raise GroupNotAutomorphisms(
                        "a generator does not preserve the edge set")
        G = PermGroup(X.n, gens)
        report.vertex_transitive = G.is_transitive()
        if report.vertex_transitive and X.n > 1:
            systems = block_systems(G)
            report.block_cell_sizes = sorted({s.cell_size for s in systems})
            report.strategy_trace.append(
                {"strategy": "block_systems",
                 "outcome": f"cell sizes {report.block_cell_sizes}"})

    if G is not None:
        for p in _primes(X.n):
            rho = find_semiregular(G, p, seed=seed)
            if rho is None:
                report.strategy_trace.append(
                    {"strategy": f"lift_p{p}",
                     "outcome": "no semiregular element found"})
                continue
            cert = lift_hamilton(X, rho, p)
            if cert is not None:
                if not verify_hamilton(X, cert):
                    raise AssertionError("lift produced a bad certificate")
                report.strategy_trace.append(
                    {"strategy": f"lift_p{p}", "outcome": "found"})
                report.result = "certificate"
                report.certificate = cert
                return report
            report.strategy_trace.append(
                {"strategy": f"lift_p{p}", "outcome": "no lift"})

    if jackson_condition(X):
        res = find_hamilton_cycle(X, budget)
        report.strategy_trace.append(
            {"strategy": "jackson", "outcome": res.status})
        if res.status == "found":
            report.result = "certificate"
            report.certificate = res.certificate
            return report
    else:
        report.strategy_trace.append(
            {"strategy": "jackson", "outcome": "condition not met"})

    res = find_hamilton_cycle(X, budget)
    report.strategy_trace.append(
        {"strategy": "exact_search", "outcome": res.status})
    if res.status == "found":
        report.result = "certificate"
        report.certificate = res.certificate
    elif res.status == "none":
        report.result = "no_hamilton_cycle"
        report.reason = "exhaustive search completed"
        pres = find_hamilton_path(X, budget)
        if pres.status == "found":
            report.path_certificate = pres.certificate
    else:
        report.result = "unknown"
        report.reason = "search budget exhausted"
    return report


def graph_from_json(d: dict) -> Graph:
    """Ingest {"n": int, "edges": [[u, v], ...]} with validation."""
    try:
        n = int(d["n"])
        edges = [(int(u), int(v)) for u, v in d["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad graph JSON: {e}") from None
    if n < 0 or any(not 0 <= u < n or not 0 <= v < n for u, v in edges):
        raise MalformedInput("vertex out of range")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as e:
        raise MalformedInput(str(e)) from None


def group_from_json(d: dict) -> list[Perm]:
    """Ingest {"degree": n, "generators": [[..], ...]}."""
    try:
        n = int(d["degree"])
        gens = [Perm.from_images(images) for images in d["generators"]]
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad group JSON: {e}") from None
    for g in gens:
        if g.degree != n:
            raise GroupDegreeMismatch("generator degree != declared degree")
    return gens
