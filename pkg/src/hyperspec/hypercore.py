"""Hypergraph data model and structural queries.

Vertices are the integers ``0..n-1``; an edge is a strictly increasing tuple
of at least two vertices. Edges are kept in lexicographic order, so two
:class:`Hypergraph` values with the same vertex count and the same edge set
compare equal.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Raised when a hypergraph violates a structural precondition."""


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError(f"vertex count must be nonnegative, got {self.n}")
        normalized = []
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) < 2:
                raise HypergraphError(f"edge {list(e)} has fewer than 2 vertices")
            if len(set(t)) != len(t):
                raise HypergraphError(f"edge {list(e)} repeats a vertex")
            if t[0] < 0 or t[-1] >= self.n:
                raise HypergraphError(f"edge {list(e)} has a vertex outside [0, {self.n})")
            normalized.append(t)
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {list(a)}")
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, edge: Iterable[int]) -> int:
        t = tuple(sorted(edge))
        try:
            return self.edges.index(t)
        except ValueError:
            raise HypergraphError(f"edge {list(t)} not present") from None

    def incident(self, v: int) -> list[int]:
        """Indices of the edges containing ``v``."""
        return [i for i, e in enumerate(self.edges) if v in e]

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image of the hypergraph under the vertex map ``v -> perm[v]``."""
        return Hypergraph(self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "Hypergraph":
        try:
            return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError) as exc:
            raise HypergraphError(f"malformed hypergraph object: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Hyperpath:
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)


@dataclass(frozen=True)
class Hypercycle:
    """Cycle ``v1 e1 v2 ... vq eq v1``; ``vertices`` are the anchors in order."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    key: tuple = field(default=(), compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.edge_indices)


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} out of range [0, {H.n})")


def degree(H: Hypergraph, v: int) -> int:
    _check_vertex(H, v)
    return sum(1 for e in H.edges if v in e)


def degrees(H: Hypergraph) -> list[int]:
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    return deg


def neighbors(H: Hypergraph) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in range(H.n)]
    for e in H.edges:
        for v in e:
            nbrs[v].update(e)
    for v in range(H.n):
        nbrs[v].discard(v)
    return nbrs


def _bfs(H: Hypergraph, source: int) -> list[int]:
    nbrs = neighbors(H)
    dist = [-1] * H.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(H: Hypergraph) -> bool:
    if H.n == 0:
        return True
    return min(_bfs(H, 0)) >= 0


def distance(H: Hypergraph, u: int, v: int) -> int:
    """Number of edges on a shortest hyperpath from ``u`` to ``v``."""
    _check_vertex(H, u)
    _check_vertex(H, v)
    if not is_connected(H):
        raise HypergraphError("distance requires a connected hypergraph")
    return _bfs(H, u)[v]


def is_k_uniform(H: Hypergraph) -> int | None:
    """Common edge size, or ``None`` if edge sizes differ."""
    if not H.edges:
        raise HypergraphError("uniformity is undefined without edges")
    sizes = {len(e) for e in H.edges}
    return sizes.pop() if len(sizes) == 1 else None


def cyclicity_r(H: Hypergraph) -> int:
    """The r with ``n - 1 = (k-1) m - r`` for a connected k-uniform H."""
    if not is_connected(H):
        raise HypergraphError("cyclicity requires a connected hypergraph")
    k = is_k_uniform(H)
    if k is None:
        raise HypergraphError("cyclicity requires a uniform hypergraph")
    return (k - 1) * H.m - (H.n - 1)


def find_hypercycles(H: Hypergraph, limit: int | None = None) -> list[Hypercycle]:
    """Distinct hypercycles of H, stopping once ``limit`` have been found.

    Length-2 cycles are pairs of edges meeting in at least two vertices (the
    anchors reported are the two smallest shared ones). Longer cycles are loose:
    consecutive edges meet in exactly the anchor vertex and non-consecutive
    edges are disjoint. Each cycle is reported once, starting from its
    smallest edge index.
    """
    edges = [frozenset(e) for e in H.edges]
    m = len(edges)
    found: list[Hypercycle] = []
    seen: set[tuple] = set()

    def add(vertices, eidx) -> bool:
        key = (frozenset(eidx), frozenset(vertices))
        if key not in seen:
            seen.add(key)
            found.append(Hypercycle(tuple(vertices), tuple(eidx), key))
        return limit is not None and len(found) >= limit

    for i in range(m):
        for j in range(i + 1, m):
            common = edges[i] & edges[j]
            if len(common) >= 2:
                a, b = sorted(common)[:2]
                if add((a, b), (i, j)):
                    return found

    incident: list[list[int]] = [[] for _ in range(H.n)]
    for idx, e in enumerate(H.edges):
        for v in e:
            incident[v].append(idx)

    # walk v1 e1 v2 e2 ... with e1 the smallest edge index on the cycle
    def extend(path_v: list[int], path_e: list[int]) -> bool:
        last = path_e[-1]
        start = path_e[0]
        v1 = path_v[0]
        for w in sorted(edges[last]):
            if w in path_v:
                continue
            for nxt in incident[w]:
                if nxt <= start or nxt in path_e:
                    continue
                # consecutive edges meet only at the anchor
                if edges[nxt] & edges[last] != {w}:
                    continue
                # the new edge avoids every earlier edge except, when
                # closing, the first one
                clash = [p for p in path_e[:-1] if edges[nxt] & edges[p]]
                if clash == [start] and len(path_e) >= 2:
                    closing = edges[nxt] & edges[start]
                    if closing == {v1} and w != v1:
                        if add(path_v + [w], path_e + [nxt]):
                            return True
                    continue
                if clash:
                    continue
                if v1 in edges[nxt]:
                    continue
                if extend(path_v + [w], path_e + [nxt]):
                    return True
        return False

    for s in range(m):
        for v1 in sorted(edges[s]):
            if extend([v1], [s]):
                return found
    return found


def is_unicyclic(H: Hypergraph) -> bool:
    """Connected, uniform, r = 1, and exactly one hypercycle."""
    if not H.edges or not is_connected(H):
        return False
    k = is_k_uniform(H)
    if k is None:
        return False
    if cyclicity_r(H) != 1:
        return False
    return len(find_hypercycles(H, limit=2)) == 1


def find_unique_cycle(H: Hypergraph) -> Hypercycle:
    if not is_connected(H) or is_k_uniform(H) is None:
        raise HypergraphError("unique cycle requires a connected uniform hypergraph")
    cycles = find_hypercycles(H, limit=2)
    if not cycles:
        raise HypergraphError("hypergraph is acyclic")
    if len(cycles) > 1 or cyclicity_r(H) != 1:
        raise HypergraphError("hypergraph has more than one cycle")
    return cycles[0]


def edit(H: Hypergraph, remove: Iterable[Iterable[int]] = (),
         add: Iterable[Iterable[int]] = ()) -> Hypergraph:
    """``H - remove + add`` as a new hypergraph."""
    current = set(H.edges)
    for e in remove:
        t = tuple(sorted(e))
        if t not in current:
            raise HypergraphError(f"cannot remove missing edge {list(t)}")
        current.remove(t)
    for e in add:
        t = tuple(sorted(e))
        if t in current:
            raise HypergraphError(f"adding {list(t)} would duplicate an edge")
        current.add(t)
    return Hypergraph(H.n, tuple(current))


def components_without(H: Hypergraph, edge_indices: Iterable[int]) -> list[Hypergraph]:
    """Connected pieces of ``H - E(C)`` that still carry edges, reindexed."""
    drop = set(edge_indices)
    rest = [e for i, e in enumerate(H.edges) if i not in drop]
    parent = list(range(H.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in rest:
        for v in e[1:]:
            ra, rb = find(e[0]), find(v)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[Edge]] = {}
    for e in rest:
        groups.setdefault(find(e[0]), []).append(e)
    pieces = []
    for group in groups.values():
        verts = sorted({v for e in group for v in e})
        index = {v: i for i, v in enumerate(verts)}
        pieces.append(Hypergraph(len(verts), tuple(tuple(index[v] for v in e) for e in group)))
    return pieces
