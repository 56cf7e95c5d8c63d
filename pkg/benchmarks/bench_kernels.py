"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--graphs 300] [--order 10] [--seed 0]

Each kernel runs over the same random graphs on both backends; results are
checked for equality before timings are reported.  A last row times the
order-6 labeled sweep record building end to end under each backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from zfgraph import _kernels_py

try:
    from zfgraph import _kernels as _compiled
except ImportError:
    _compiled = None


def random_graphs(count: int, n: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.choice([0.25, 0.4, 0.55])
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        out.append(rows)
    return out


def zf_scan(k, adj, n):
    for size in range(n + 1):
        if k.first_forcing_subset(adj, n, size)[0] >= 0:
            return size


KERNELS = {
    "zero forcing scan": zf_scan,
    "max clique": lambda k, adj, n: k.max_clique(adj, n),
    "path cover": lambda k, adj, n: k.path_cover(adj, n),
}


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


SWEEP_SNIPPET = (
    "import time; from zfgraph import verify; t = time.perf_counter(); "
    "verify.Sweep(1).records('graphs', 6, True); print(time.perf_counter() - t)"
)


def sweep_seconds(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("ZFGRAPH_PURE_PYTHON", None)
    if pure:
        env["ZFGRAPH_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SWEEP_SNIPPET], capture_output=True,
                         text=True, env=env, check=True)
    return float(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--order", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-sweep", action="store_true")
    args = ap.parse_args()
    if _compiled is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    graphs = random_graphs(args.graphs, args.order, args.seed)
    n = args.order
    print(f"{args.graphs} random graphs of order {n}, seed {args.seed}")
    print(f"{'kernel':<20} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in KERNELS.items():
        py, t_py = timed(lambda: [fn(_kernels_py, g, n) for g in graphs])
        cy, t_cy = timed(lambda: [fn(_compiled, g, n) for g in graphs])
        if py != cy:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:<20} {t_py:>10.3f} {t_cy:>10.3f} {t_py / t_cy:>7.1f}x")
    if not args.skip_sweep:
        t_py, t_cy = sweep_seconds(True), sweep_seconds(False)
        print(f"{'sweep n=6 records':<20} {t_py:>10.3f} {t_cy:>10.3f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
