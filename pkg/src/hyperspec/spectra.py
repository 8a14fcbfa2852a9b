"""Weighted adjacency matrix, principal eigenpair and eigenvector checks.

Entry ``(i, j)`` of the adjacency matrix sums ``1/(|e|-1)`` over the edges
containing both ``i`` and ``j``. The principal eigenpair comes from power
iteration on ``A + I``; the shift makes the iteration matrix primitive for
every connected hypergraph, so the all-ones start converges to the Perron
vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _accel, config
from .canon import OrbitPartition
from .hypercore import Hypergraph, HypergraphError, degrees, is_connected


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric adjacency stored as its strict upper triangle."""

    n: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    vals: tuple[float, ...]

    def entry(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        a, b = min(i, j), max(i, j)
        for r, c, w in zip(self.rows, self.cols, self.vals):
            if r == a and c == b:
                return w
        return 0.0

    def dense(self) -> list[list[float]]:
        out = [[0.0] * self.n for _ in range(self.n)]
        for r, c, w in zip(self.rows, self.cols, self.vals):
            out[r][c] = w
            out[c][r] = w
        return out

    def row_sums(self) -> list[float]:
        sums = [0.0] * self.n
        for r, c, w in zip(self.rows, self.cols, self.vals):
            sums[r] += w
            sums[c] += w
        return sums

    def matvec(self, x: Sequence[float]) -> list[float]:
        return _accel.matvec(self.n, self.rows, self.cols, self.vals, list(x))

    def quadratic_form(self, x: Sequence[float]) -> float:
        return _accel.quadratic_form(self.rows, self.cols, self.vals, list(x))


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    x: tuple[float, ...]
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {"rho": self.rho, "x": list(self.x), "residual": self.residual,
                "iterations": self.iterations}


def adjacency_matrix(H: Hypergraph) -> AdjacencyMatrix:
    acc: dict[tuple[int, int], float] = {}
    for e in H.edges:
        if len(e) < 2:
            raise HypergraphError(f"edge {list(e)} has fewer than 2 vertices")
        w = 1.0 / (len(e) - 1)
        for p in range(len(e)):
            for q in range(p + 1, len(e)):
                key = (e[p], e[q])
                acc[key] = acc.get(key, 0.0) + w
    rows = tuple(i for i, _ in acc)
    cols = tuple(j for _, j in acc)
    return AdjacencyMatrix(H.n, rows, cols, tuple(acc.values()))


def spectral_radius(H: Hypergraph, *, rq_tol: float = config.RQ_REL_TOL,
                    residual_tol: float = config.RESIDUAL_TOL,
                    max_iter: int = config.MAX_ITER) -> SpectralResult:
    if not H.edges:
        raise HypergraphError("spectral radius needs at least one edge")
    if not is_connected(H):
        raise HypergraphError("principal eigenvector is ambiguous for a disconnected hypergraph")
    A = adjacency_matrix(H)
    rho, x, residual, iterations, converged = _accel.power_iteration(
        H.n, A.rows, A.cols, A.vals, rq_tol, residual_tol, max_iter)
    if not converged:
        raise ConvergenceError(
            f"power iteration stopped after {iterations} iterations, residual {residual:.3e}")
    return SpectralResult(rho, tuple(x), residual, iterations)


def rayleigh_quotient(H: Hypergraph, y: Sequence[float]) -> float:
    if len(y) != H.n:
        raise ValueError(f"vector has length {len(y)}, expected {H.n}")
    norm2 = sum(v * v for v in y)
    if norm2 == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return adjacency_matrix(H).quadratic_form(y) / norm2


def eigen_residual(H: Hypergraph, rho: float, x: Sequence[float]) -> float:
    ax = adjacency_matrix(H).matvec(x)
    return max(abs(a - rho * v) for a, v in zip(ax, x))


def pendant_edges(H: Hypergraph) -> list[tuple[int, int]]:
    """(edge index, hub) for pendant edges whose hub has degree at least 2."""
    deg = degrees(H)
    out = []
    for idx, e in enumerate(H.edges):
        heavy = [v for v in e if deg[v] > 1]
        if len(heavy) == 1:
            out.append((idx, heavy[0]))
    return out


def check_pendant_formula(H: Hypergraph, result: SpectralResult,
                          tol: float = config.FORMULA_TOL) -> list[dict]:
    """Leaves of a pendant edge at hub u carry ``x_u / ((k-1) rho - (k-2))``."""
    x, rho = result.x, result.rho
    violations = []
    for idx, hub in pendant_edges(H):
        e = H.edges[idx]
        k = len(e)
        expected = x[hub] / ((k - 1) * rho - (k - 2))
        for v in e:
            if v == hub:
                continue
            err = abs(x[v] - expected)
            if err > tol or not x[v] < x[hub]:
                violations.append({"edge": list(e), "vertex": v, "expected": expected,
                                   "actual": x[v], "error": err})
    return violations


def internal_edges(H: Hypergraph) -> list[tuple[int, int, int]]:
    """(edge index, v1, vk) for edges whose other vertices all have degree 1
    and whose ends each meet exactly one further edge in a single vertex."""
    deg = degrees(H)
    out = []
    for idx, e in enumerate(H.edges):
        if len(e) < 3:
            continue
        heavy = [v for v in e if deg[v] > 1]
        if len(heavy) != 2:
            continue
        a, b = heavy
        se = set(e)
        ok_a = any(a in f and se & set(f) == {a} for j, f in enumerate(H.edges) if j != idx)
        ok_b = any(b in f and se & set(f) == {b} for j, f in enumerate(H.edges) if j != idx)
        if ok_a and ok_b:
            out.append((idx, a, b))
    return out


def check_internal_edge_formula(H: Hypergraph, result: SpectralResult,
                                tol: float = config.FORMULA_TOL) -> list[dict]:
    """Interior vertices carry ``(x_v1 + x_vk) / ((k-1) rho - (k-3))``,
    strictly below both end values."""
    x, rho = result.x, result.rho
    violations = []
    for idx, a, b in internal_edges(H):
        e = H.edges[idx]
        k = len(e)
        expected = (x[a] + x[b]) / ((k - 1) * rho - (k - 3))
        for v in e:
            if v in (a, b):
                continue
            err = abs(x[v] - expected)
            if err > tol or not x[v] < min(x[a], x[b]):
                violations.append({"edge": list(e), "vertex": v, "expected": expected,
                                   "actual": x[v], "error": err})
    return violations


def check_f1_interior_formula(result: SpectralResult, k: int, v1: int, eta: int,
                              interior: Sequence[int],
                              tol: float = config.FORMULA_TOL) -> list[dict]:
    """In the graph with all pendants at eta, the other interior vertices of
    eta's cycle edge carry ``(2 x_v1 + x_eta) / ((k-1) rho - (k-4))``."""
    x, rho = result.x, result.rho
    expected = (2 * x[v1] + x[eta]) / ((k - 1) * rho - (k - 4))
    violations = []
    for v in interior:
        err = abs(x[v] - expected)
        if err > tol or not x[v] < min(x[v1], x[eta]):
            violations.append({"vertex": v, "expected": expected, "actual": x[v], "error": err})
    return violations


def check_orbit_constancy(H: Hypergraph, result: SpectralResult, orbits: OrbitPartition) -> float:
    """Largest spread of eigenvector values inside one orbit."""
    spread = 0.0
    for orbit in orbits.orbits:
        vals = [result.x[v] for v in orbit]
        spread = max(spread, max(vals) - min(vals))
    return spread


def degree_bounds_hold(H: Hypergraph, rho: float, slack: float = 1e-12) -> bool:
    """min degree <= rho <= max degree (row sums equal degrees when uniform)."""
    deg = degrees(H)
    return min(deg) - slack <= rho <= max(deg) + slack
