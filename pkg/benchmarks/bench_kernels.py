#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three hot paths (chain counting sweep, PGL2 canonicalization,
census branch scan) through both implementations and prints a timing table.

    python benchmarks/bench_kernels.py [--repeat N]

The active backend for the library itself is irrelevant here; both
implementations are loaded explicitly.
"""

import argparse
import time

import numpy as np

from ramlab._kernels import get_impl
from ramlab.backend import numba_available
from ramlab.counting import iter_profiles
from ramlab.fields import Field
from ramlab.poly import Poly
from ramlab.ratfunc import RatFunc


def bench_chain(impl, p=7, n=6):
    total = 0
    for prof in iter_profiles(p, n):
        e = np.array(prof.entries, dtype=np.int64)
        total += impl.chain_count_dp(e, p)
        total += impl.chain_count_enum(e, p)
    return total


def bench_pgl2(impl, p=7, k=2, reps=3):
    F = Field(p, k)
    add_t, mul_t, neg_t, inv_t = F.tables()
    f = RatFunc(Poly.from_ints(F, [0, 0, 0, 2, 1]), Poly.from_ints(F, [3, 1]))
    L = f.degree + 1
    num, den = f.num.padded(L), f.den.padded(L)
    acc = 0
    for _ in range(reps):
        vec = impl.pgl2_min_vec(num, den, F.q, add_t, mul_t, inv_t)
        acc += int(vec.sum())
        acc += impl.pgl2_stab_count(num, den, F.q, add_t, mul_t, inv_t)
    return acc


def bench_branch_scan(impl, p=7, k=2):
    F = Field(p, k)
    add_t, mul_t, neg_t, inv_t = F.tables()
    d = 4
    g0 = Poly.linear_power(F, 3, 3).padded(4)
    ginf = Poly.linear_power(F, 6, 3).padded(4)
    pts01 = np.array([3, 6], dtype=np.int64)
    one_pts = np.array([0], dtype=np.int64)
    one_ords = np.array([3], dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    out = np.empty((100_000, 2 * (d + 1)), dtype=np.int64)
    found = 0
    for deg_a, deg_b in ((1, 1), (1, 0), (0, 1)):
        found += impl.branch_scan(F.q, d, p, g0, ginf, deg_a, deg_b, pts01,
                                  one_pts, one_ords, empty, empty,
                                  add_t, mul_t, inv_t, neg_t, out)
    return found


BENCHES = (
    ("chain counts (p=7, all n=6 profiles)", bench_chain),
    ("pgl2 canonicalization (q=49, deg 4)", bench_pgl2),
    ("census branch scan (q=49, d=4)", bench_branch_scan),
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    impls = [("numpy", get_impl("numpy"))]
    if numba_available():
        impls.append(("numba", get_impl("numba")))
    else:
        print("numba unavailable: benchmarking numpy only")

    results = {}
    for bench_name, fn in BENCHES:
        for impl_name, impl in impls:
            fn(impl)  # warm up (numba compilation, caches)
            best = min(_timed(fn, impl) for _ in range(args.repeat))
            results[(bench_name, impl_name)] = best

    width = max(len(b) for b, _ in BENCHES)
    print(f"{'benchmark':<{width}}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}")
    for bench_name, _ in BENCHES:
        t_np = results[(bench_name, "numpy")]
        row = f"{bench_name:<{width}}  {t_np:>9.3f}s"
        if ("numba" in dict(impls)):
            t_nb = results.get((bench_name, "numba"))
            row += f"  {t_nb:>9.3f}s  {t_np / t_nb:>7.1f}x"
        print(row)


def _timed(fn, impl):
    t0 = time.perf_counter()
    fn(impl)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
