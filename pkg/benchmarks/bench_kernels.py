"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--n 14] [--k 4] [--repeat 3]

JIT compilation happens in a warm-up call and is excluded from the timings.
"""
import argparse
import random
import time

import numpy as np

from submcp import _kernels
from submcp.generators import random_function, random_graph
from submcp.matroid import UniformMatroid, independent_sets


def best_of(fn, repeat):
    fn()  # warm-up (JIT compile, caches)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(n, k, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p=0.5)
    us = np.array([u for u, _, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v, _ in g.edges], dtype=np.int64)
    ws = np.array([w for _, _, w in g.edges], dtype=np.int64)
    table = random_function(rng, n, "general").table()
    nodes = np.array([1 << e for e in range(n)], dtype=np.int64)
    pn = min(n, 10)
    ptable = random_function(rng, pn, "general").table()
    cands = np.array(independent_sets(UniformMatroid(pn, k), k), dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    full = (1 << n) - 1
    return {
        f"cut_table n={n}": lambda b: b.cut_table(n, us, vs, ws),
        f"submodular_local n={n}": lambda b: b.submodular_local(table.values, n, table.eps),
        f"monotone_check n={n}": lambda b: b.monotone_check(table.values, n, table.eps),
        f"min_split_enum n={n}": lambda b: b.min_split_enum(table.values, nodes, 0, 1, full, 1,
                                                             table.eps),
        f"partition_search n={pn} k={k}": lambda b: b.partition_search(
            ptable.values, pn, k, cands, empty, ptable.eps),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=14)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernels.numba_backend is None:
        raise SystemExit("numba is not importable; nothing to compare")
    backends = {"numba": _kernels.numba_backend, "numpy": _kernels.numpy_backend}
    print(f"{'kernel':32s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fn in cases(args.n, args.k, args.seed).items():
        t = {b: best_of(lambda: fn(mod), args.repeat) * 1e3 for b, mod in backends.items()}
        print(f"{name:32s} {t['numba']:10.2f} {t['numpy']:10.2f} {t['numpy'] / t['numba']:8.1f}x")


if __name__ == "__main__":
    main()
