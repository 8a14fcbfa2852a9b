"""Edge relocation and block exchange between two edges.

Relocation replaces part of an edge by other vertices; block exchange swaps
equal-size vertex blocks between two edges. Both return new hypergraphs and
both come with a numeric check of the radius comparison they are used for.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import config
from .hypercore import Hypergraph, HypergraphError, edit, is_connected
from .spectra import adjacency_matrix, spectral_radius


@dataclass(frozen=True)
class SwapSpec:
    """Exchange block ``U1`` of edge ``e_index`` with block ``V1`` of edge ``f_index``."""

    e_index: int
    f_index: int
    U1: tuple[int, ...]
    V1: tuple[int, ...]

    def resolve(self, H: Hypergraph) -> tuple[tuple[int, ...], tuple[int, ...], set, set]:
        """Return ``(e', f', U2, V2)`` after validating against H."""
        if not (0 <= self.e_index < H.m and 0 <= self.f_index < H.m):
            raise HypergraphError("swap edge index out of range")
        if self.e_index == self.f_index:
            raise HypergraphError("swap needs two distinct edges")
        e, f = set(H.edges[self.e_index]), set(H.edges[self.f_index])
        U1, V1 = set(self.U1), set(self.V1)
        if len(U1) != len(self.U1) or len(V1) != len(self.V1):
            raise HypergraphError("swap blocks repeat a vertex")
        if len(U1) != len(V1):
            raise HypergraphError("swap blocks differ in size")
        if not U1 <= e or not V1 <= f:
            raise HypergraphError("swap block is not inside its edge")
        if not 1 <= len(U1) <= len(e) - 1:
            raise HypergraphError("swap block size must be between 1 and k-1")
        U2, V2 = e - U1, f - V1
        e_new, f_new = U2 | V1, V2 | U1
        if len(e_new) != len(e) or len(f_new) != len(f):
            raise HypergraphError("swap would put a vertex twice into one edge")
        e_new_t, f_new_t = tuple(sorted(e_new)), tuple(sorted(f_new))
        existing = set(H.edges)
        if e_new_t in existing or f_new_t in existing or e_new_t == f_new_t:
            raise HypergraphError("swap would create a duplicate edge")
        return e_new_t, f_new_t, U2, V2

    def to_dict(self) -> dict:
        return {"e_index": self.e_index, "f_index": self.f_index,
                "U1": list(self.U1), "V1": list(self.V1)}


def edge_swap(H: Hypergraph, spec: SwapSpec) -> Hypergraph:
    e_new, f_new, _, _ = spec.resolve(H)
    return edit(H, remove=[H.edges[spec.e_index], H.edges[spec.f_index]], add=[e_new, f_new])


def swap_delta(H: Hypergraph, spec: SwapSpec, x: Sequence[float]) -> tuple[float, float]:
    """``(x'A(H')x - x'A(H)x, 2/(k-1) (x_U1 - x_V1)(x_V2 - x_U2))``.

    The left side is computed from the two adjacency matrices, not from the
    formula.
    """
    if len(x) != H.n:
        raise ValueError(f"vector has length {len(x)}, expected {H.n}")
    _, _, U2, V2 = spec.resolve(H)
    k = len(H.edges[spec.e_index])
    if len(H.edges[spec.f_index]) != k:
        raise HypergraphError("swap_delta needs two edges of the same size")
    G = edge_swap(H, spec)
    lhs = adjacency_matrix(G).quadratic_form(x) - adjacency_matrix(H).quadratic_form(x)
    xs = lambda block: sum(x[v] for v in block)  # noqa: E731
    rhs = 2.0 / (k - 1) * (xs(spec.U1) - xs(spec.V1)) * (xs(V2) - xs(U2))
    return lhs, rhs


@dataclass(frozen=True)
class Move:
    """Replace ``source`` (inside ``edge``) by ``target``."""

    edge: tuple[int, ...]
    source: tuple[int, ...]
    target: tuple[int, ...]

    def new_edge(self) -> tuple[int, ...]:
        e = set(self.edge)
        if not set(self.source) <= e:
            raise HypergraphError(f"{list(self.source)} is not a subset of edge {list(self.edge)}")
        if len(self.source) != len(self.target) or not self.source:
            raise HypergraphError("relocation source and target must be nonempty and equal-sized")
        if len(self.source) >= len(self.edge):
            raise HypergraphError("relocation must keep at least one vertex of the edge")
        out = (e - set(self.source)) | set(self.target)
        if len(out) != len(e):
            raise HypergraphError(f"relocating into edge {list(self.edge)} repeats a vertex")
        return tuple(sorted(out))


def relocate_edges(H: Hypergraph, moved: Sequence[int], from_sets: Sequence[Sequence[int]],
                   to_sets: Sequence[Sequence[int]]) -> Hypergraph:
    """``H - sum e_i + sum e'_i`` with ``e'_i = (e_i minus from_i) plus to_i``."""
    if not (len(moved) == len(from_sets) == len(to_sets)):
        raise HypergraphError("moved, from_sets and to_sets must have equal length")
    if len(set(moved)) != len(moved):
        raise HypergraphError("an edge is moved twice")
    moves = [Move(H.edges[i], tuple(src), tuple(dst)) for i, src, dst in zip(moved, from_sets, to_sets)]
    return apply_moves(H, moves)


def apply_moves(H: Hypergraph, moves: Sequence[Move]) -> Hypergraph:
    present = set(H.edges)
    removed = []
    added = []
    for mv in moves:
        if tuple(sorted(mv.edge)) not in present:
            raise HypergraphError(f"edge {list(mv.edge)} not present")
        new = mv.new_edge()
        if new in present or new in added:
            raise HypergraphError(f"relocation creates duplicate edge {list(new)}")
        removed.append(mv.edge)
        added.append(new)
    return edit(H, remove=removed, add=added)


@dataclass(frozen=True)
class RelocationVerdict:
    status: str  # "increase", "inapplicable" or "fail"
    rho_before: float
    rho_after: float | None
    reason: str = ""

    @property
    def margin(self) -> float | None:
        return None if self.rho_after is None else self.rho_after - self.rho_before

    def to_dict(self) -> dict:
        return {"status": self.status, "rho_before": self.rho_before,
                "rho_after": self.rho_after, "margin": self.margin, "reason": self.reason}


def check_relocation_lemma(H: Hypergraph, moves: Sequence[Move], x: Sequence[float] | None = None,
                           margin: float = config.LEMMA_MARGIN) -> RelocationVerdict:
    """Check that relocating toward larger eigenvector entries raises rho.

    The hypothesis is pairwise: the j-th source vertex has eigenvector entry at
    most that of the j-th target vertex (blocks are compared in the order
    given). If it fails, or the result is disconnected, the verdict is
    ``inapplicable``.
    """
    result = spectral_radius(H)
    if x is None:
        x = result.x
    for mv in moves:
        if set(mv.target) <= set(mv.edge):
            return RelocationVerdict("inapplicable", result.rho, None,
                                     f"target {list(mv.target)} already inside {list(mv.edge)}")
        for s, t in zip(mv.source, mv.target):
            if x[s] > x[t]:
                return RelocationVerdict("inapplicable", result.rho, None,
                                         f"x[{s}]={x[s]:.6g} exceeds x[{t}]={x[t]:.6g}")
    G = apply_moves(H, moves)
    if not is_connected(G):
        return RelocationVerdict("inapplicable", result.rho, None, "relocation disconnects the graph")
    after = spectral_radius(G).rho
    status = "increase" if after - result.rho > margin else "fail"
    return RelocationVerdict(status, result.rho, after)


def check_swap_lemma(H: Hypergraph, spec: SwapSpec, margin: float = config.LEMMA_MARGIN) -> dict:
    """Compare the swap delta at the principal vector with the radius change."""
    res = spectral_radius(H)
    lhs, rhs = swap_delta(H, spec, res.x)
    G = edge_swap(H, spec)
    _, _, U2, V2 = spec.resolve(H)
    x = res.x
    xu1, xv1 = sum(x[v] for v in spec.U1), sum(x[v] for v in spec.V1)
    xu2, xv2 = sum(x[v] for v in U2), sum(x[v] for v in V2)
    strict = xu1 > xv1 and xu2 < xv2
    report = {"lhs": lhs, "rhs": rhs, "rho_before": res.rho, "rho_after": None,
              "strict_hypothesis": strict, "connected_after": is_connected(G)}
    if report["connected_after"]:
        after = spectral_radius(G).rho
        report["rho_after"] = after
        report["bound_holds"] = after - res.rho >= lhs - config.IDENTITY_TOL
        if strict:
            report["strict_increase"] = after - res.rho > margin
    return report
