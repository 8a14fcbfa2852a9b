import random

import pytest
from hypothesis import HealthCheck, settings

from hyperspec import Hypergraph, HypergraphError, families
from hyperspec.transforms import SwapSpec

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_connected(rng: random.Random, k: int, m: int, fresh_bias: float = 0.6) -> Hypergraph:
    """Connected k-uniform simple hypergraph grown edge by edge.

    Each new edge keeps one existing vertex and fills the rest with a mix of
    fresh and old vertices, so cycles of every kind show up.
    """
    edges = {tuple(range(k))}
    n = k
    attempts = 0
    while len(edges) < m and attempts < 1000:
        attempts += 1
        anchor = rng.randrange(n)
        members = {anchor}
        while len(members) < k:
            if rng.random() < fresh_bias:
                members.add(n + len(members) - 1)
            else:
                members.add(rng.randrange(n))
        new = [v for v in members if v >= n]
        # compact fresh labels to n, n+1, ...
        relabel = {v: n + i for i, v in enumerate(sorted(new))}
        e = tuple(sorted(relabel.get(v, v) for v in members))
        if e in edges:
            continue
        edges.add(e)
        n += len(new)
    return Hypergraph(n, tuple(edges))


def random_unicyclic(rng: random.Random, k: int, m: int) -> Hypergraph:
    """Loose cycle of random length plus pendant edges at random vertices."""
    q = rng.randint(2 if k >= 3 else 3, m)
    H = families.loose_cycle(q, k)
    for _ in range(m - q):
        H = families.attach_pendants(H, rng.randrange(H.n), 1, k)
    return H


def random_swap(rng, H):
    """A valid swap on H, or None after a bounded number of tries."""
    for _ in range(200):
        i, j = rng.sample(range(H.m), 2)
        e, f = H.edges[i], H.edges[j]
        s = rng.randint(1, min(len(e), len(f)) - 1)
        spec = SwapSpec(i, j, tuple(rng.sample(e, s)), tuple(rng.sample(f, s)))
        try:
            spec.resolve(H)
        except HypergraphError:
            continue
        return spec
    return None


def swap_triples(count, seed=0):
    """``count`` seeded (graph, swap, vector) triples."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(2, 5)
        H = random_connected(rng, k, rng.randint(2, 7))
        spec = random_swap(rng, H)
        if spec is None:
            continue
        out.append((H, spec, [rng.uniform(-1, 1) for _ in range(H.n)]))
    return out


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def B3():
    return families.two_cycle(3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
