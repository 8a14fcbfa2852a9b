"""Command-line interface.

Exit status: 0 on success or a passing verdict, 1 on a failing verdict,
2 on a usage error (bad arguments, malformed input, violated preconditions).
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import random
import sys
from pathlib import Path

from . import __version__, config, families, xlab
from ._accel import BACKEND
from .hypercore import Hypergraph, HypergraphError
from .spectra import ConvergenceError, spectral_radius
from .transforms import Move, SwapSpec, apply_moves, check_relocation_lemma, edge_swap, swap_delta

log = logging.getLogger("hyperspec")


class UsageError(Exception):
    pass


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(str(x))
    return format(x, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _int_list(text: str) -> list[int]:
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load_json(source: str):
    """Inline JSON, ``-`` for stdin, or a path to a JSON file."""
    try:
        if source == "-":
            return json.load(sys.stdin)
        stripped = source.lstrip()
        if stripped.startswith(("{", "[")):
            return json.loads(source)
        return json.loads(Path(source).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {source!r}: {exc}") from None


def _graph_from(obj) -> Hypergraph:
    if not isinstance(obj, dict):
        raise UsageError("expected a JSON object with 'n' and 'edges'")
    return Hypergraph.from_dict(obj)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + ("" if text.endswith("\n") else "\n"))
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, args.n, args.k, args.q,
                               tuple(args.R or ()), tuple(args.S or ()), tuple(args.T or ()))
    if args.family == "f_rst" and args.R is None:
        raise UsageError("f_rst needs --R")
    H = spec.build()
    _emit(dumps(H.to_dict()), args.out)
    return 0


def cmd_spectrum(args) -> int:
    H = _graph_from(_load_json(args.input))
    res = spectral_radius(H, residual_tol=args.residual_tol, max_iter=args.max_iter)
    _emit(dumps(res.to_dict()), args.out)
    return 0


def _edge_index(H: Hypergraph, spec: dict, name: str) -> int:
    if f"{name}_index" in spec:
        return int(spec[f"{name}_index"])
    if name in spec:
        return H.edge_index(spec[name])
    raise UsageError(f"swap spec needs '{name}' (vertex list) or '{name}_index'")


def cmd_swap(args) -> int:
    spec = _load_json(args.spec)
    H = _graph_from(spec.get("graph"))
    try:
        swap = SwapSpec(_edge_index(H, spec, "e"), _edge_index(H, spec, "f"),
                        tuple(spec["U1"]), tuple(spec["V1"]))
    except KeyError as exc:
        raise UsageError(f"swap spec is missing {exc}") from None
    G = edge_swap(H, swap)
    rng = random.Random(args.seed)
    worst = 0.0
    for _ in range(args.trials):
        x = [rng.uniform(-1.0, 1.0) for _ in range(H.n)]
        lhs, rhs = swap_delta(H, swap, x)
        worst = max(worst, abs(lhs - rhs))
    report = {"seed": args.seed, "swap": swap.to_dict(), "graph": G.to_dict(),
              "identity_trials": args.trials, "identity_max_error": worst,
              "identity_holds": worst < config.IDENTITY_TOL}
    try:
        res = spectral_radius(H)
    except HypergraphError:
        res = None
    if res is not None:
        lhs, rhs = swap_delta(H, swap, res.x)
        report.update(rho_before=res.rho, lhs=lhs, rhs=rhs)
        try:
            report["rho_after"] = spectral_radius(G).rho
        except HypergraphError:
            report["rho_after"] = None
    _emit(dumps(report), args.out)
    return 0 if report["identity_holds"] else 1


def cmd_relocate(args) -> int:
    spec = _load_json(args.spec)
    H = _graph_from(spec.get("graph"))
    try:
        moves = [Move(tuple(mv["edge"]), tuple(mv["from"]), tuple(mv["to"])) for mv in spec["moves"]]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"relocate spec needs 'moves' with edge/from/to: {exc}") from None
    G = apply_moves(H, moves)
    report = {"graph": G.to_dict()}
    try:
        verdict = check_relocation_lemma(H, moves)
        report["lemma"] = verdict.to_dict()
    except HypergraphError as exc:
        report["lemma"] = {"status": "inapplicable", "reason": str(exc)}
    _emit(dumps(report), args.out)
    return 1 if report["lemma"]["status"] == "fail" else 0


def cmd_enumerate(args) -> int:
    report = xlab.rank_table(args.n, args.k, jobs=args.jobs, override=args.override)
    fmt = args.format or ("csv" if args.out and args.out.endswith(".csv") else "json")
    if fmt == "csv":
        text = report.to_csv()
    else:
        text = dumps(report.to_dict(timing=args.timing))
    _emit(text, args.out)
    log.info("enumerated %d classes in %.3fs", len(report.classes), report.wall_time)
    return 0


def cmd_rank(args) -> int:
    report = xlab.rank_table(args.n, args.k, jobs=args.jobs, override=args.override)
    rows = [{"position": i + 1, "canonical_key": c.key_hex, "rho": c.rho, "family_tag": c.family_tag}
            for i, c in enumerate(report.classes[:args.top] if args.top else report.classes)]
    out = {"n": args.n, "k": args.k, "classes": len(report.classes), "warnings": report.warnings,
           "table": rows}
    _emit(dumps(out), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.theorem == "1":
        verdict = xlab.verify_theorem_1(args.n, args.k, jobs=args.jobs)
    elif args.theorem == "2":
        verdict = xlab.verify_theorem_2(args.n, args.k, jobs=args.jobs)
    else:
        verdict = xlab.verify_family_ordering(args.n, args.k)
    _emit(dumps(verdict.to_dict()), args.out)
    return 0 if verdict.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspec",
        description="Spectra of hypergraphs under the 1/(|e|-1) weighted adjacency matrix.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        if out:
            p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("gen", help="build a named family as JSON",
                       description="Build a named hypergraph: the two-edge cycle, loose paths "
                                   "and cycles, U* (all pendants at v1), F (one pendant moved to v2), "
                                   "F1-F3 (pendants at the cycle vertex eta) or F_(R;S;T).")
    p.add_argument("--family", required=True, choices=families.KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--q", type=int, help="edge count for loose_path / loose_cycle")
    p.add_argument("--R", type=_int_list, help="pendants at v1,v2 (f_rst)")
    p.add_argument("--S", type=_int_list, help="pendants at a(1,1..k-2) (f_rst)")
    p.add_argument("--T", type=_int_list, help="pendants at a(2,1..k-2) (f_rst)")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("spectrum", help="spectral radius and principal eigenvector",
                       description="Spectral radius rho and the positive unit principal eigenvector "
                                   "of the weighted adjacency matrix, by shifted power iteration.")
    p.add_argument("--input", default="-", help="hypergraph JSON: path, inline text, or - for stdin")
    p.add_argument("--residual-tol", type=float, default=config.RESIDUAL_TOL)
    p.add_argument("--max-iter", type=int, default=config.MAX_ITER)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("swap", help="exchange vertex blocks between two edges",
                       description="Apply G<U1 <-> V1> and report the quadratic-form identity "
                                   "x'A(G')x - x'A(G)x = 2/(k-1) (x_U1 - x_V1)(x_V2 - x_U2) on seeded "
                                   "random vectors and at the principal eigenvector.")
    p.add_argument("--spec", required=True,
                   help='JSON {"graph": {...}, "e": [...], "f": [...], "U1": [...], "V1": [...]}')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("relocate", help="move parts of edges onto other vertices",
                       description="Replace vertex blocks of edges (edge relocation) and check that "
                                   "moving toward larger eigenvector entries raises rho.")
    p.add_argument("--spec", required=True,
                   help='JSON {"graph": {...}, "moves": [{"edge": [...], "from": [...], "to": [...]}]}')
    common(p)
    p.set_defaults(func=cmd_relocate)

    for name, func, text in (
            ("enumerate", cmd_enumerate, "all k-uniform unicyclic classes of order n with their radii"),
            ("rank", cmd_rank, "unicyclic classes ranked by spectral radius, with family tags")):
        p = sub.add_parser(name, help=text, description=f"Isomorph-free list of {text}.")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--override", action="store_true", help="ignore the size guard")
        if name == "enumerate":
            p.add_argument("--format", choices=("json", "csv"))
            p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
        else:
            p.add_argument("--top", type=int, default=0, help="only the first N rows")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check an extremal result by enumeration",
                       description="theorem 1: U* uniquely maximizes rho among unicyclic graphs; "
                                   "theorem 2: F uniquely maximizes rho once U* is excluded (m >= 4); "
                                   "ordering: rho(F1), rho(F2), rho(F3), rho(F_(R;S;T)) < rho(F) < rho(U*).")
    p.add_argument("--theorem", required=True, choices=("1", "2", "ordering"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            parser.error("--jobs must be at least 1")
    except SystemExit as exc:  # --help, --version and argparse usage errors
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, HypergraphError, ValueError) as exc:
        print(f"hyperspec {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"hyperspec {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
