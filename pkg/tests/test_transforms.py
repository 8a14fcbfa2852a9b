import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperspec import families
from hyperspec.canon import are_isomorphic
from hyperspec.families import V1, V2
from hyperspec.hypercore import HypergraphError, find_unique_cycle, is_unicyclic
from hyperspec.spectra import spectral_radius
from hyperspec.transforms import (
    Move,
    SwapSpec,
    apply_moves,
    check_relocation_lemma,
    check_swap_lemma,
    edge_swap,
    relocate_edges,
    swap_delta,
)

from .conftest import random_swap, random_unicyclic, swap_triples


class TestRelocate:
    def test_identity_move_rejected(self):
        H = families.u_star(8, 3)
        with pytest.raises(HypergraphError, match="duplicate"):
            relocate_edges(H, [H.m - 1], [[V1]], [[V1]])

    def test_f_pendant_to_v1(self):
        H = families.f_graph(8, 3)
        idx = next(i for i, e in enumerate(H.edges) if V2 in e and len(set(e) & {V1, V2}) == 1)
        G = relocate_edges(H, [idx], [[V2]], [[V1]])
        assert are_isomorphic(G, families.u_star(8, 3))

    def test_cycle_shortening(self):
        H = families.loose_cycle(3, 4)  # anchors 0, 3, 6
        e1 = H.edges[0]
        assert e1 == (0, 1, 2, 3)
        G = relocate_edges(H, [0], [[3]], [[6]])
        assert is_unicyclic(G) and find_unique_cycle(G).length == 2

    def test_source_outside_edge(self):
        with pytest.raises(HypergraphError, match="subset"):
            Move((0, 1, 2), (5,), (4,)).new_edge()

    def test_vertex_repeated(self):
        with pytest.raises(HypergraphError, match="repeats"):
            Move((0, 1, 2), (2,), (1,)).new_edge()

    def test_edge_moved_twice(self):
        H = families.u_star(8, 3)
        with pytest.raises(HypergraphError, match="twice"):
            relocate_edges(H, [2, 2], [[0], [0]], [[1], [1]])

    def test_apply_moves(self):
        H = families.u_star(6, 3)
        G = apply_moves(H, [Move(H.edges[-1], (V1,), (V2,))])
        assert are_isomorphic(G, H)


class TestRelocationLemma:
    def test_f_to_u_star_increases(self):
        H = families.f_graph(8, 3)
        x = spectral_radius(H).x
        assert x[V1] >= x[V2]
        idx = next(i for i, e in enumerate(H.edges) if V2 in e and V1 not in e)
        verdict = check_relocation_lemma(H, [Move(H.edges[idx], (V2,), (V1,))])
        assert verdict.status == "increase" and verdict.margin > 1e-10

    def test_gate_blocks_smaller_target(self):
        H = families.f_graph(8, 3)
        idx = next(i for i, e in enumerate(H.edges) if V1 in e and V2 not in e)
        leaf = next(v for v in H.edges[next(i for i, e in enumerate(H.edges) if V2 in e and V1 not in e)]
                    if v != V2)
        verdict = check_relocation_lemma(H, [Move(H.edges[idx], (V1,), (leaf,))])
        assert verdict.status == "inapplicable"
        assert verdict.rho_after is None and verdict.margin is None

    def test_three_cycle_to_two_cycle(self):
        H = families.loose_cycle(3, 3)  # anchors 0, 2, 4
        x = spectral_radius(H).x
        anchors = [0, 2, 4]
        best = max(anchors, key=lambda v: x[v])
        e1 = next(e for e in H.edges if best not in e)
        ends = [v for v in e1 if v in anchors]
        verdict = check_relocation_lemma(H, [Move(e1, (ends[1],), (best,))])
        assert verdict.status == "increase"

    def test_disconnecting_move_inapplicable(self):
        H = families.loose_path(3, 3)  # (0,1,2), (2,3,4), (4,5,6)
        verdict = check_relocation_lemma(H, [Move((2, 3, 4), (2,), (5,))], x=[1.0] * H.n)
        assert verdict.status == "inapplicable" and "disconnects" in verdict.reason

    def test_target_inside_edge_inapplicable(self):
        H = families.loose_path(2, 3)
        verdict = check_relocation_lemma(H, [Move((0, 1, 2), (0,), (1,))], x=[1.0] * H.n)
        assert verdict.status == "inapplicable"

    def test_to_dict(self):
        H = families.f_graph(8, 3)
        idx = next(i for i, e in enumerate(H.edges) if V2 in e and V1 not in e)
        d = check_relocation_lemma(H, [Move(H.edges[idx], (V2,), (V1,))]).to_dict()
        assert set(d) == {"status", "rho_before", "rho_after", "margin", "reason"}


class TestSwap:
    def test_identical_content_rejected(self, B3):
        # exchanging the shared anchor recreates both edges
        with pytest.raises(HypergraphError, match="duplicate"):
            edge_swap(B3, SwapSpec(0, 1, (V1,), (V1,)))

    def test_middle_vertex_swap_on_two_cycle_with_pendants(self):
        H = families.u_star(12, 4)
        G = edge_swap(H, SwapSpec(0, 1, (2,), (4,)))
        assert G != H and are_isomorphic(G, H)

    @pytest.mark.parametrize("n, k", [(12, 4), (16, 5)])
    def test_f1_subcase_swap(self, n, k):
        # pendant interior block against the non-eta interior of the second cycle edge
        H = families.f1(n, k)
        eta = families.eta(k)
        e3 = next(e for e in H.edges if eta in e and V1 not in e)
        e2 = next(e for e in H.edges if eta in e and V1 in e)
        U1 = tuple(v for v in e3 if v != eta)[:k - 3]
        W1 = tuple(families.a2(k, i) for i in range(2, k - 1))
        G = edge_swap(H, SwapSpec(H.edges.index(e3), H.edges.index(e2), U1, W1))
        assert are_isomorphic(G, H)

    @pytest.mark.parametrize("U1, V1_, msg", [
        ((2, 3), (4,), "size"),
        ((0, 1, 2), (0, 1, 3), "between"),
        ((5,), (3,), "inside"),
        ((2, 2), (3, 0), "repeat"),
    ])
    def test_invalid_specs(self, B3, U1, V1_, msg):
        with pytest.raises(HypergraphError, match=msg):
            SwapSpec(0, 1, U1, V1_).resolve(B3)

    def test_same_edge(self, B3):
        with pytest.raises(HypergraphError, match="distinct"):
            SwapSpec(0, 0, (2,), (2,)).resolve(B3)


class TestSwapIdentity:
    def test_all_ones_vector(self):
        H = families.u_star(12, 4)
        lhs, rhs = swap_delta(H, SwapSpec(0, 1, (2,), (4,)), [1.0] * H.n)
        assert abs(lhs) < 1e-12 and rhs == 0

    def test_seeded_triples(self):
        for H, spec, x in swap_triples(100):
            lhs, rhs = swap_delta(H, spec, x)
            assert abs(lhs - rhs) < 1e-12

    @given(st.integers(0, 10_000), st.integers(3, 5), st.integers(3, 6))
    def test_identity_property(self, seed, k, m):
        rng = random.Random(seed)
        H = random_unicyclic(rng, k, m)
        spec = random_swap(rng, H)
        if spec is None:
            return
        lhs, rhs = swap_delta(H, spec, [rng.random() for _ in range(H.n)])
        assert abs(lhs - rhs) < 1e-12

    def test_wrong_length(self, B3):
        with pytest.raises(ValueError):
            swap_delta(B3, SwapSpec(0, 1, (2,), (3,)), [1.0])

    @pytest.mark.parametrize("H, expect_connected", [
        (families.loose_cycle(4, 3), True), (families.loose_cycle(3, 4), True),
        (families.f1(12, 4), True),
        # every strict swap here cuts a pendant off
        (families.f_graph(8, 3), False),
    ], ids=["cycle4_3", "cycle3_4", "f8_3", "f1_12_4"])
    def test_strict_hypothesis_raises_rho(self, H, expect_connected):
        x = spectral_radius(H).x
        tot = lambda block: sum(x[v] for v in block)  # noqa: E731
        connected = 0
        for i, j in itertools.permutations(range(H.m), 2):
            for s in range(1, len(H.edges[i])):
                for U in itertools.combinations(H.edges[i], s):
                    for W in itertools.combinations(H.edges[j], s):
                        spec = SwapSpec(i, j, U, W)
                        try:
                            _, _, U2, W2 = spec.resolve(H)
                        except HypergraphError:
                            continue
                        if not (tot(U) > tot(W) + 1e-9 and tot(U2) < tot(W2) - 1e-9):
                            continue
                        report = check_swap_lemma(H, spec)
                        assert report["rhs"] > 0
                        if report["connected_after"]:
                            assert report["strict_increase"]
                            connected += 1
        assert (connected > 0) == expect_connected

    @given(st.integers(0, 10_000), st.integers(3, 4), st.integers(3, 6))
    def test_bound_property(self, seed, k, m):
        rng = random.Random(seed)
        H = random_unicyclic(rng, k, m)
        spec = random_swap(rng, H)
        if spec is None:
            return
        report = check_swap_lemma(H, spec)
        assert abs(report["lhs"] - report["rhs"]) < 1e-12
        if report["connected_after"]:
            assert report["bound_holds"]
