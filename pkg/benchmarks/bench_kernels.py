"""Compare the numba and numpy kernels on GF(p) row reduction and the
exhaustive cluster-tilting subset scan.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 20 60 120]

Both backends are imported from the same process, so the env flag is not
needed here.  Results are checked for equality before timing is reported.
"""
import argparse
import time

import numpy as np

from extrired import _kernels
from extrired.cluster import _bits, vanishing_matrix
from extrired.instance import build_category, load_fixture


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_rref(sizes, repeat, p=32003):
    rng = np.random.default_rng(0)
    rows = []
    for n in sizes:
        a = rng.integers(0, p, size=(n, n + n // 2), dtype=np.int64)
        ref = a.copy()
        r_np = _kernels.rref_numpy(ref, p)
        t_np = best_of(lambda: _kernels.rref_numpy(a.copy(), p), repeat)
        if _kernels.HAS_NUMBA:
            b = a.copy()
            r_nb = _kernels.rref_numba(b, p)
            assert r_nb[0] == r_np[0] and np.array_equal(b, ref), "rref backends disagree"
            t_nb = best_of(lambda: _kernels.rref_numba(a.copy(), p), repeat)
        else:
            t_nb = float("nan")
        rows.append((f"rref {n}x{n + n // 2}", t_np, t_nb))
    return rows


def bench_scan(repeat):
    spec = load_fixture("ex5")
    C = build_category(spec)
    Z = vanishing_matrix(C, spec.cluster.bound)
    n = len(C.roster)
    right = np.array([_bits(~Z[i, :]) for i in range(n)], dtype=np.uint64)
    left = np.array([_bits(~Z[:, i]) for i in range(n)], dtype=np.uint64)
    universe = np.uint64((1 << n) - 1)
    rows = []
    for k in (12, 16, 18):
        members = np.arange(k, dtype=np.int64)
        args = (right, left, members, universe, np.uint64(0))
        ref = np.sort(_kernels.subset_scan_numpy(*args))
        t_np = best_of(lambda: _kernels.subset_scan_numpy(*args), repeat)
        if _kernels.HAS_NUMBA:
            got = np.sort(_kernels.subset_scan_numba(*args))
            assert np.array_equal(got, ref), "subset scan backends disagree"
            t_nb = best_of(lambda: _kernels.subset_scan_numba(*args), repeat)
        else:
            t_nb = float("nan")
        rows.append((f"subset scan 2^{k}", t_np, t_nb))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 60, 120])
    args = ap.parse_args()
    if not _kernels.HAS_NUMBA:
        print("numba is not installed; only the numpy column is timed")
    rows = bench_rref(args.sizes, args.repeat) + bench_scan(args.repeat)
    print(f"{'kernel':<22}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for name, t_np, t_nb in rows:
        print(f"{name:<22}{t_np:>12.5f}{t_nb:>12.5f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
