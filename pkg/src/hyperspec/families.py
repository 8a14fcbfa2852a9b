"""Constructors for the named unicyclic families.

Every family is built on the two-edge cycle with a fixed vertex layout:

* ``V1 = 0`` and ``V2 = 1`` are the two shared vertices;
* ``2 .. k-1`` are the other vertices of the first cycle edge (``a(1, i)``);
* ``k .. 2k-3`` are the other vertices of the second cycle edge (``a(2, i)``);
  the first of these, vertex ``k``, is ``eta``;
* pendant edges follow, each taking ``k-1`` fresh vertices in the order the
  pendants are attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .hypercore import Hypergraph, HypergraphError

V1 = 0
V2 = 1

KINDS = ("loose_path", "loose_cycle", "two_cycle", "u_star", "f", "f1", "f2", "f3", "f_rst")


def a1(k: int, i: int) -> int:
    """Vertex ``a(1, i)`` of the first cycle edge, ``1 <= i <= k-2``."""
    return 1 + i


def a2(k: int, i: int) -> int:
    """Vertex ``a(2, i)`` of the second cycle edge, ``1 <= i <= k-2``."""
    return k - 1 + i


def eta(k: int) -> int:
    return a2(k, 1)


def edge_count(n: int, k: int) -> int:
    """Edges of a k-uniform unicyclic hypergraph on n vertices."""
    if k < 2 or n % (k - 1):
        raise HypergraphError(f"n={n} is not a multiple of k-1={k - 1}")
    return n // (k - 1)


def attach_pendants(H: Hypergraph, v: int, count: int, k: int) -> Hypergraph:
    """Add ``count`` edges, each made of ``v`` and ``k-1`` new vertices."""
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} out of range [0, {H.n})")
    edges = list(H.edges)
    n = H.n
    for _ in range(count):
        edges.append((v, *range(n, n + k - 1)))
        n += k - 1
    return Hypergraph(n, tuple(edges))


def two_cycle(k: int) -> Hypergraph:
    if k < 3:
        raise HypergraphError(f"two_cycle needs k >= 3, got {k}")
    e1 = (V1, V2, *range(2, k))
    e2 = (V1, V2, *range(k, 2 * k - 2))
    return Hypergraph(2 * (k - 1), (e1, e2))


def loose_path(q: int, k: int) -> Hypergraph:
    """q edges, consecutive ones sharing one vertex; n = q(k-1) + 1."""
    if q < 1 or k < 2:
        raise HypergraphError(f"invalid loose path parameters q={q}, k={k}")
    edges = [tuple(range(i * (k - 1), i * (k - 1) + k)) for i in range(q)]
    return Hypergraph(q * (k - 1) + 1, tuple(edges))


def loose_cycle(q: int, k: int) -> Hypergraph:
    """Anchors are ``0, k-1, 2(k-1), ...``; edge i runs from anchor i to i+1."""
    if q == 2 and k >= 3:
        return two_cycle(k)
    if q < 3 or k < 2:
        raise HypergraphError(f"invalid loose cycle parameters q={q}, k={k}")
    n = q * (k - 1)
    edges = [tuple((i * (k - 1) + j) % n for j in range(k)) for i in range(q)]
    return Hypergraph(n, tuple(edges))


def _check_unicyclic_params(n: int, k: int, min_m: int, name: str) -> int:
    if k < 3:
        raise HypergraphError(f"{name} needs k >= 3, got {k}")
    m = edge_count(n, k)
    if m < min_m:
        raise HypergraphError(f"{name} needs m = n/(k-1) >= {min_m}, got m={m}")
    return m


def f_rst(k: int, R: Sequence[int], S: Sequence[int] = (), T: Sequence[int] = ()) -> Hypergraph:
    """Two-edge cycle with R[i] pendants at v_{i+1}, S[i] at a(1, i+1), T[i] at a(2, i+1).

    Missing trailing S/T entries count as zero. The edge count is
    ``2 + sum(R) + sum(S) + sum(T)``.
    """
    if k < 3:
        raise HypergraphError(f"f_rst needs k >= 3, got {k}")
    R = list(R)
    S = list(S) + [0] * (k - 2 - len(S))
    T = list(T) + [0] * (k - 2 - len(T))
    if len(R) != 2 or len(S) != k - 2 or len(T) != k - 2:
        raise HypergraphError(f"R needs 2 entries and S, T at most {k - 2} entries")
    if min(R + S + T, default=0) < 0:
        raise HypergraphError("pendant counts must be nonnegative")
    H = two_cycle(k)
    for v, count in zip((V1, V2), R):
        H = attach_pendants(H, v, count, k)
    for i, count in enumerate(S, start=1):
        H = attach_pendants(H, a1(k, i), count, k)
    for i, count in enumerate(T, start=1):
        H = attach_pendants(H, a2(k, i), count, k)
    return H


def f_rst_for(n: int, k: int, R: Sequence[int], S: Sequence[int] = (),
              T: Sequence[int] = ()) -> Hypergraph:
    """``f_rst`` with the budget ``sum(R)+sum(S)+sum(T) = n/(k-1) - 2`` enforced."""
    m = edge_count(n, k)
    total = sum(R) + sum(S) + sum(T)
    if total != m - 2:
        raise HypergraphError(f"pendant budget {total} != n/(k-1) - 2 = {m - 2}")
    return f_rst(k, R, S, T)


def u_star(n: int, k: int) -> Hypergraph:
    m = _check_unicyclic_params(n, k, 2, "u_star")
    return attach_pendants(two_cycle(k), V1, m - 2, k)


def f_graph(n: int, k: int) -> Hypergraph:
    m = _check_unicyclic_params(n, k, 3, "f")
    return f_rst(k, [m - 3, 1])


def f1(n: int, k: int) -> Hypergraph:
    m = _check_unicyclic_params(n, k, 3, "f1")
    return attach_pendants(two_cycle(k), eta(k), m - 2, k)


def f2(n: int, k: int) -> Hypergraph:
    m = _check_unicyclic_params(n, k, 4, "f2")
    H = attach_pendants(two_cycle(k), eta(k), m - 3, k)
    return attach_pendants(H, V1, 1, k)


def f3(n: int, k: int) -> Hypergraph:
    m = _check_unicyclic_params(n, k, 4, "f3")
    H = attach_pendants(two_cycle(k), V1, m - 3, k)
    return attach_pendants(H, eta(k), 1, k)


def compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def rst_compositions(n: int, k: int):
    """Every (R, S, T) with the pendant budget of order n."""
    m = edge_count(n, k)
    for c in compositions(m - 2, 2 + 2 * (k - 2)):
        yield list(c[:2]), list(c[2:k]), list(c[k:])


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    k: int = 3
    q: int | None = None
    R: tuple[int, ...] = ()
    S: tuple[int, ...] = ()
    T: tuple[int, ...] = field(default=())

    def build(self) -> Hypergraph:
        kind, n, k = self.kind, self.n, self.k
        if kind == "two_cycle":
            return two_cycle(k)
        if kind in ("loose_cycle", "loose_path"):
            q = self.q
            if q is None:
                if n is None:
                    raise HypergraphError(f"{kind} needs q or n")
                q = n // (k - 1) if kind == "loose_cycle" else (n - 1) // (k - 1)
            return loose_cycle(q, k) if kind == "loose_cycle" else loose_path(q, k)
        if kind == "f_rst":
            if n is None:
                return f_rst(k, self.R, self.S, self.T)
            return f_rst_for(n, k, self.R, self.S, self.T)
        builders = {"u_star": u_star, "f": f_graph, "f1": f1, "f2": f2, "f3": f3}
        if kind not in builders:
            raise HypergraphError(f"unknown family {kind!r}; choose from {', '.join(KINDS)}")
        if n is None:
            raise HypergraphError(f"{kind} needs n")
        return builders[kind](n, k)
