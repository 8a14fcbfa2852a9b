"""Compare the compiled and pure-Python power-iteration kernels.

    python benchmarks/bench_kernels.py [--n 12 --k 3 --repeat 3]

Times the full spectral sweep over every unicyclic class of order n, plus
one large u_star, and checks that both backends return identical results.
"""

import argparse
import importlib
import sys
import timeit

from hyperspec import _kernels_py, config, families
from hyperspec.spectra import adjacency_matrix
from hyperspec.xlab import enumerate_unicyclic


def sweep(mod, mats):
    return [mod.power_iteration(A.n, A.rows, A.cols, A.vals, config.RQ_REL_TOL,
                                config.RESIDUAL_TOL, config.MAX_ITER) for A in mats]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--big", type=int, default=200, help="order of the large u_star case")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    try:
        compiled = importlib.import_module("hyperspec._kernels")
    except ImportError:
        print("compiled kernels are not built; reinstall without HYPERSPEC_PURE", file=sys.stderr)
        return 1

    cases = {
        f"all classes ({args.n},{args.k})": [adjacency_matrix(G) for G in enumerate_unicyclic(args.n, args.k)],
        f"u_star({args.big},{args.k})": [adjacency_matrix(families.u_star(args.big, args.k))],
    }
    print(f"{'case':32} {'graphs':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, mats in cases.items():
        if sweep(compiled, mats) != sweep(_kernels_py, mats):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: sweep(_kernels_py, mats), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: sweep(compiled, mats), number=1, repeat=args.repeat))
        print(f"{label:32} {len(mats):>6} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
