"""Isomorph-free enumeration of k-uniform unicyclic hypergraphs and
numerical verification of the extremal results built on it.

The structured generator grows graphs one pendant edge at a time. Every
unicyclic graph is either a bare loose cycle or has a pendant edge whose
removal leaves a unicyclic graph with one edge fewer, so starting from all
cycle lengths and attaching a pendant edge at one vertex of every
automorphism orbit reaches each isomorphism class. Classes are deduplicated
by canonical key after every round.
"""

from __future__ import annotations

import csv
import io
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import config, families
from .canon import canonical_form, key_bytes, orbit_partition
from .hypercore import Hypergraph, HypergraphError, is_unicyclic
from .spectra import spectral_radius

log = logging.getLogger(__name__)


def _guard(n: int, limit: int, override: bool, what: str) -> None:
    if n > limit and not override:
        raise HypergraphError(
            f"{what} at n={n} exceeds the size guard n <= {limit}; "
            "pass override=True or raise HYPERSPEC_MAX_N")


def _canonical(H: Hypergraph) -> tuple[tuple, Hypergraph]:
    cf = canonical_form(H)
    return cf.key, H.relabel(cf.relabeling)


def enumerate_unicyclic(n: int, k: int, override: bool = False) -> list[Hypergraph]:
    """One canonically labelled representative per isomorphism class."""
    m = families.edge_count(n, k)
    _guard(n, config.max_n(), override, "enumeration")
    qmin = 2 if k >= 3 else 3
    if m < qmin:
        return []
    level: dict[tuple, Hypergraph] = {}
    for j in range(qmin, m + 1):
        nxt: dict[tuple, Hypergraph] = {}
        for G in level.values():
            for orbit in orbit_partition(G).orbits:
                key, rep = _canonical(families.attach_pendants(G, orbit[0], 1, k))
                nxt.setdefault(key, rep)
        key, rep = _canonical(families.loose_cycle(j, k))
        nxt.setdefault(key, rep)
        level = nxt
        log.debug("enumerate(%d, %d): %d classes with %d edges", n, k, len(level), j)
    return [level[key] for key in sorted(level)]


def brute_force_unicyclic(n: int, k: int, max_n: int | None = None) -> list[Hypergraph]:
    """Filter edge sets directly; independent of the structured generator.

    Every class has a labelling in which ``{0, ..., k-1}`` is an edge, so only
    edge sets containing it are scanned; the other ``m-1`` edges range over
    all remaining k-subsets.
    """
    m = families.edge_count(n, k)
    limit = max_n if max_n is not None else config.max_n(config.BRUTE_FORCE_MAX_N)
    _guard(n, limit, False, "brute force")
    full = (1 << n) - 1
    base = tuple(range(k))
    others = [c for c in itertools.combinations(range(n), k) if c != base]
    masks = {c: sum(1 << v for v in c) for c in others}
    base_mask = sum(1 << v for v in base)
    found: dict[tuple, Hypergraph] = {}
    for rest in itertools.combinations(others, m - 1):
        cover = base_mask
        for c in rest:
            cover |= masks[c]
        if cover != full:
            continue
        # connectivity by merging edge masks into components
        comps = [base_mask] + [masks[c] for c in rest]
        merged = True
        while merged and len(comps) > 1:
            merged = False
            for i in range(1, len(comps)):
                if comps[0] & comps[i]:
                    comps[0] |= comps.pop(i)
                    merged = True
                    break
        if len(comps) != 1:
            continue
        H = Hypergraph(n, (base, *rest))
        if not is_unicyclic(H):
            continue
        key, rep = _canonical(H)
        found.setdefault(key, rep)
    return [found[key] for key in sorted(found)]


def family_tags(n: int, k: int) -> dict[tuple, str]:
    """Canonical key -> family name(s) for the named families of order n."""
    builders = (("u_star", families.u_star), ("f", families.f_graph), ("f1", families.f1),
                ("f2", families.f2), ("f3", families.f3))
    tags: dict[tuple, list[str]] = {}
    for name, build in builders:
        try:
            H = build(n, k)
        except HypergraphError:
            continue
        tags.setdefault(canonical_form(H).key, []).append(name)
    return {key: "|".join(names) for key, names in tags.items()}


@dataclass
class ClassRecord:
    key: tuple
    rho: float
    residual: float
    family_tag: str
    graph: Hypergraph

    @property
    def key_hex(self) -> str:
        return key_bytes(self.key).hex()

    def to_dict(self) -> dict:
        return {"canonical_key": self.key_hex, "rho": self.rho, "residual": self.residual,
                "family_tag": self.family_tag, "graph": self.graph.to_dict()}


@dataclass
class EnumerationReport:
    n: int
    k: int
    classes: list[ClassRecord]
    warnings: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def top1(self) -> ClassRecord | None:
        return self.classes[0] if self.classes else None

    @property
    def top2(self) -> ClassRecord | None:
        return self.classes[1] if len(self.classes) > 1 else None

    def counts(self) -> dict:
        tagged = sum(1 for c in self.classes if c.family_tag)
        return {"classes": len(self.classes), "tagged": tagged}

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "n": self.n, "k": self.k, "m": families.edge_count(self.n, self.k),
            "counts": self.counts(),
            "top1": self.top1.key_hex if self.top1 else None,
            "top2": self.top2.key_hex if self.top2 else None,
            "warnings": self.warnings,
            "classes": [c.to_dict() for c in self.classes],
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["canonical_key", "rho", "residual", "family_tag"])
        for c in self.classes:
            writer.writerow([c.key_hex, format(c.rho, ".17g"), format(c.residual, ".17g"), c.family_tag])
        return buf.getvalue()


def _evaluate(payload: tuple[int, tuple]) -> tuple[float, float]:
    n, edges = payload
    res = spectral_radius(Hypergraph(n, edges))
    return res.rho, res.residual


def evaluate_all(graphs: list[Hypergraph], jobs: int = 1) -> list[tuple[float, float]]:
    payloads = [(G.n, G.edges) for G in graphs]
    if jobs <= 1 or len(graphs) < 2:
        return [_evaluate(p) for p in payloads]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate, payloads, chunksize=max(1, len(payloads) // (4 * jobs))))


def rank_table(n: int, k: int, jobs: int = 1, graphs: list[Hypergraph] | None = None,
               override: bool = False) -> EnumerationReport:
    start = time.perf_counter()
    if graphs is None:
        graphs = enumerate_unicyclic(n, k, override=override)
    tags = family_tags(n, k)
    keyed = [(canonical_form(G).key, G) for G in graphs]
    values = evaluate_all([G for _, G in keyed], jobs)
    records = [ClassRecord(key, rho, res, tags.get(key, ""), G)
               for (key, G), (rho, res) in zip(keyed, values)]
    records.sort(key=lambda r: (-r.rho, r.key))
    warnings = []
    for a, b in zip(records, records[1:]):
        if abs(a.rho - b.rho) < config.TIE_TOL:
            warnings.append({"kind": "tie", "keys": [a.key_hex, b.key_hex],
                             "rho": [a.rho, b.rho]})
    for r in records:
        if r.residual >= config.REPORT_RESIDUAL_TOL:
            warnings.append({"kind": "residual", "key": r.key_hex, "residual": r.residual})
    return EnumerationReport(n, k, records, warnings, time.perf_counter() - start)


@dataclass
class Verdict:
    check: str
    n: int
    k: int
    passed: bool
    message: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "k": self.k, "passed": self.passed,
                "message": self.message, **self.details}


def _argmax_verdict(check: str, n: int, k: int, records: list[ClassRecord], expected: Hypergraph,
                    name: str) -> Verdict:
    expected_key = canonical_form(expected).key
    if not records:
        return Verdict(check, n, k, False, "no classes enumerated")
    top = records[0]
    details = {"classes": len(records), "expected": name,
               "expected_key": key_bytes(expected_key).hex(),
               "argmax_key": top.key_hex, "rho_max": top.rho,
               "rho_runner_up": None, "margin": None}
    if len(records) > 1:
        runner = records[1]
        margin = top.rho - runner.rho
        details.update(rho_runner_up=runner.rho, margin=margin, runner_up_key=runner.key_hex,
                       runner_up_tag=runner.family_tag)
        if margin < config.TIE_TOL:
            return Verdict(check, n, k, False,
                           f"tie between {top.key_hex} and {runner.key_hex}: uniqueness fails", details)
        if margin <= config.MARGIN_TOL:
            return Verdict(check, n, k, False, f"margin {margin:.3e} not above {config.MARGIN_TOL}", details)
    if top.key != expected_key:
        return Verdict(check, n, k, False, f"maximizer {top.key_hex} is not {name}", details)
    return Verdict(check, n, k, True, f"maximizer is {name}", details)


def verify_theorem_1(n: int, k: int, jobs: int = 1, report: EnumerationReport | None = None) -> Verdict:
    """The unique radius maximizer among unicyclic classes is u_star(n, k)."""
    expected = families.u_star(n, k)
    if report is None:
        report = rank_table(n, k, jobs)
    return _argmax_verdict("theorem1", n, k, report.classes, expected, "u_star")


def verify_theorem_2(n: int, k: int, jobs: int = 1, report: EnumerationReport | None = None) -> Verdict:
    """Among classes with m >= 4 other than u_star, the unique maximizer is f(n, k)."""
    m = families.edge_count(n, k)
    if m < 4:
        raise HypergraphError(f"theorem 2 needs m = n/(k-1) >= 4, got m={m}")
    if report is None:
        report = rank_table(n, k, jobs)
    u_key = canonical_form(families.u_star(n, k)).key
    lam = [r for r in report.classes if r.key != u_key]
    return _argmax_verdict("theorem2", n, k, lam, families.f_graph(n, k), "f")


def verify_family_ordering(n: int, k: int) -> Verdict:
    """rho(f1), rho(f2), rho(f3) < rho(f) < rho(u_star), and every other
    (R; S; T) member of the second-place class range sits below rho(f)."""
    m = families.edge_count(n, k)
    if m < 4:
        raise HypergraphError(f"family ordering needs m = n/(k-1) >= 4, got m={m}")
    rho = {name: spectral_radius(build(n, k)).rho for name, build in
           (("u_star", families.u_star), ("f", families.f_graph), ("f1", families.f1),
            ("f2", families.f2), ("f3", families.f3))}
    checks = []

    def record(label: str, lower: float, upper: float):
        margin = upper - lower
        checks.append({"label": label, "lower": lower, "upper": upper, "margin": margin,
                       "ok": margin > config.MARGIN_TOL})

    for name in ("f1", "f2", "f3"):
        record(f"{name} < f", rho[name], rho["f"])
    record("f < u_star", rho["f"], rho["u_star"])
    u_key = canonical_form(families.u_star(n, k)).key
    f_key = canonical_form(families.f_graph(n, k)).key
    skipped = {"u_star": 0, "f": 0}
    members = 0
    for R, S, T in families.rst_compositions(n, k):
        G = families.f_rst(k, R, S, T)
        key = canonical_form(G).key
        if key == u_key:
            skipped["u_star"] += 1
            continue
        if key == f_key:
            skipped["f"] += 1
            continue
        members += 1
        record(f"f_rst(R={R}, S={S}, T={T}) < f", spectral_radius(G).rho, rho["f"])
    failed = [c for c in checks if not c["ok"]]
    details = {"rho": rho, "compositions_checked": members, "skipped": skipped,
               "min_margin": min(c["margin"] for c in checks), "checks": checks}
    if failed:
        return Verdict("ordering", n, k, False, f"{len(failed)} inequalities fail", details)
    return Verdict("ordering", n, k, True, f"all {len(checks)} strict inequalities hold", details)
