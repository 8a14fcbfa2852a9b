"""Canonical forms, isomorphism, automorphisms and vertex orbits.

The hypergraph is encoded as its incidence graph (vertex nodes ``0..n-1``
followed by one node per edge). Colour refinement on that graph, followed by
individualisation of vertex nodes and backtracking, yields discrete colourings;
each gives a relabelling of the vertices, and the lexicographically smallest
relabelled edge list is the canonical key. Leaves that produce the same key
differ by an automorphism, which is recorded and used to prune the search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hypercore import Hypergraph

Perm = tuple[int, ...]


@dataclass(frozen=True)
class CanonicalForm:
    key: tuple
    relabeling: Perm

    @property
    def hex(self) -> str:
        return key_bytes(self.key).hex()


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[int, ...], ...]

    def orbit_of(self, v: int) -> tuple[int, ...]:
        for orbit in self.orbits:
            if v in orbit:
                return orbit
        raise KeyError(v)


def key_bytes(key: tuple) -> bytes:
    """Byte string for a canonical key; equal keys give equal bytes and vice versa."""
    n, edges = key
    out = bytearray(n.to_bytes(2, "big"))
    out += len(edges).to_bytes(2, "big")
    for e in edges:
        out += len(e).to_bytes(2, "big")
        for v in e:
            out += v.to_bytes(2, "big")
    return bytes(out)


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for a in range(len(self.parent)):
            out.setdefault(self.find(a), []).append(a)
        return sorted(out.values())


def orbits_of(n: int, generators: Sequence[Perm]) -> list[list[int]]:
    uf = UnionFind(n)
    for g in generators:
        for v, w in enumerate(g):
            uf.union(v, w)
    return uf.groups()


def _refine(colors: list[int], adj: list[list[int]]) -> list[int]:
    """Equitable refinement; cell order is a function of the old cell order only."""
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[u], tuple(sorted(colors[w] for w in adj[u]))) for u in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


class _Search:
    def __init__(self, H: Hypergraph):
        self.H = H
        n, m = H.n, H.m
        adj: list[list[int]] = [[] for _ in range(n + m)]
        for j, e in enumerate(H.edges):
            for v in e:
                adj[v].append(n + j)
                adj[n + j].append(v)
        self.adj = adj
        self.first_path: list[int] | None = None
        self.first_cert = None
        self.first_perm: Perm | None = None
        self.best_cert = None
        self.best_perm: Perm | None = None
        self.generators: list[Perm] = []

    def run(self) -> None:
        n = self.H.n
        colors = [0] * n + [1] * self.H.m
        self._visit(_refine(colors, self.adj), [])

    def _certificate(self, perm: Perm) -> tuple:
        return (self.H.n, tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in self.H.edges)))

    def _record(self, perm_a: Perm, perm_b: Perm) -> None:
        # leaf a and leaf b relabel H identically, so a^-1 . b fixes H
        inv_a = [0] * len(perm_a)
        for v, p in enumerate(perm_a):
            inv_a[p] = v
        sigma = tuple(inv_a[p] for p in perm_b)
        if any(sigma[v] != v for v in range(len(sigma))) and sigma not in self.generators:
            self.generators.append(sigma)

    def _visit(self, colors: list[int], path: list[int]) -> int | None:
        n = self.H.n
        vcolors = colors[:n]
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(vcolors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break

        if target is None:
            perm = tuple(vcolors)
            cert = self._certificate(perm)
            if self.first_cert is None:
                self.first_path = list(path)
                self.first_cert = self.best_cert = cert
                self.first_perm = self.best_perm = perm
                return None
            if cert == self.first_cert:
                self._record(self.first_perm, perm)
                depth = 0
                for a, b in zip(path, self.first_path):
                    if a != b:
                        break
                    depth += 1
                return depth
            if cert == self.best_cert:
                self._record(self.best_perm, perm)
            elif cert < self.best_cert:
                self.best_cert, self.best_perm = cert, perm
            return None

        level = len(path)
        explored: list[int] = []
        for v in target:
            if explored:
                fixing = [g for g in self.generators if all(g[p] == p for p in path)]
                if fixing:
                    uf = UnionFind(n)
                    for g in fixing:
                        for a, b in enumerate(g):
                            uf.union(a, b)
                    root = uf.find(v)
                    if any(uf.find(u) == root for u in explored):
                        continue
            c = colors[v]
            child = [2 * x + 1 for x in colors]
            child[v] = 2 * c
            jump = self._visit(_refine(child, self.adj), path + [v])
            explored.append(v)
            if jump is not None and jump < level:
                return jump
        return None


def _search(H: Hypergraph) -> _Search:
    s = _Search(H)
    s.run()
    return s


def canonical_form(H: Hypergraph) -> CanonicalForm:
    s = _search(H)
    return CanonicalForm(s.best_cert, s.best_perm)


def canonical_graph(H: Hypergraph) -> Hypergraph:
    return H.relabel(canonical_form(H).relabeling)


def are_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if H1.n != H2.n or H1.m != H2.m:
        return False
    if sorted(len(e) for e in H1.edges) != sorted(len(e) for e in H2.edges):
        return False
    return canonical_form(H1).key == canonical_form(H2).key


def automorphism_generators(H: Hypergraph) -> list[Perm]:
    return list(_search(H).generators)


def orbit_partition(H: Hypergraph) -> OrbitPartition:
    gens = automorphism_generators(H)
    return OrbitPartition(tuple(tuple(o) for o in orbits_of(H.n, gens)))


def is_automorphism(H: Hypergraph, sigma: Sequence[int]) -> bool:
    """Definition check: sigma permutes the edge set."""
    if sorted(sigma) != list(range(H.n)):
        raise ValueError("sigma is not a permutation of the vertex set")
    return H.relabel(sigma).edges == H.edges


def exact_adjacency(H: Hypergraph) -> dict[tuple[int, int], Fraction]:
    entries: dict[tuple[int, int], Fraction] = {}
    for e in H.edges:
        w = Fraction(1, len(e) - 1)
        for a in e:
            for b in e:
                if a != b:
                    entries[a, b] = entries.get((a, b), Fraction(0)) + w
    return entries


def permutation_commutes(H: Hypergraph, sigma: Sequence[int]) -> bool:
    """Whether ``P_sigma A = A P_sigma``, with exact rational entries."""
    if sorted(sigma) != list(range(H.n)):
        raise ValueError("sigma is not a permutation of the vertex set")
    A = exact_adjacency(H)
    zero = Fraction(0)
    for i in range(H.n):
        for j in range(H.n):
            if A.get((sigma[i], sigma[j]), zero) != A.get((i, j), zero):
                return False
    return True


def random_relabel(H: Hypergraph, rng: random.Random) -> Hypergraph:
    perm = list(range(H.n))
    rng.shuffle(perm)
    return H.relabel(perm)
