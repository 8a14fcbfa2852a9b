"""Slow reference computations used to cross-check the fast paths.

Nothing in the library calls these; they exist for tests and for manual
auditing of small cases.
"""

from __future__ import annotations

import itertools
import math

from .hypercore import Hypergraph

JACOBI_MAX_N = 32


def jacobi_eigenvalues(matrix: list[list[float]], tol: float = 1e-15, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations, ascending."""
    n = len(matrix)
    if n > JACOBI_MAX_N:
        raise ValueError(f"Jacobi oracle limited to n <= {JACOBI_MAX_N}")
    a = [list(map(float, row)) for row in matrix]
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p][q]) < 1e-300:
                    continue
                theta = (a[q][q] - a[p][p]) / (2 * a[p][q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    return sorted(a[i][i] for i in range(n))


def dense_spectral_radius(H: Hypergraph) -> float:
    """Largest eigenvalue modulus from an explicitly assembled dense matrix."""
    dense = [[0.0] * H.n for _ in range(H.n)]
    for e in H.edges:
        w = 1.0 / (len(e) - 1)
        for i in e:
            for j in e:
                if i != j:
                    dense[i][j] += w
    return max(abs(v) for v in jacobi_eigenvalues(dense))


def brute_force_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if H1.n != H2.n or H1.m != H2.m:
        return False
    target = H2.edges
    return any(H1.relabel(p).edges == target for p in itertools.permutations(range(H1.n)))


def brute_force_automorphisms(H: Hypergraph) -> list[tuple[int, ...]]:
    return [p for p in itertools.permutations(range(H.n)) if H.relabel(p).edges == H.edges]


def brute_force_orbits(H: Hypergraph) -> list[list[int]]:
    images: dict[int, set[int]] = {v: {v} for v in range(H.n)}
    for p in brute_force_automorphisms(H):
        for v in range(H.n):
            images[v].add(p[v])
    return [list(o) for o in sorted({tuple(sorted(s)) for s in images.values()})]
