"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from urbasis import _kernels_py
from urbasis.sidon import prime_field_ext

try:
    from urbasis import _kernels
except ImportError:
    _kernels = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_bose_chowla(repeat):
    q = 499
    ext = prime_field_ext(q)
    b, c = ext.modulus
    ga, gb = ext.generator
    rows = []
    pure = timeit(lambda: _kernels_py.bose_chowla_scan(q, b, c, ga, gb), repeat)
    rows.append(("python", pure))
    if _kernels is not None:
        fast = timeit(lambda: _kernels.bose_chowla_scan(q, b, c, ga, gb), repeat)
        rows.append(("cython", fast))
    return f"bose_chowla_scan(q={q})", rows


def bench_find_sum_collision(repeat):
    # a Sidon set forces the full O(n^2 log n) stream (no early exit)
    elems = sorted(2 * 983 * k + (k * k) % 983 for k in range(983))
    arr = np.asarray(elems, dtype=np.int64)
    rows = [("python", timeit(lambda: _kernels_py.find_sum_collision(elems), repeat))]
    if _kernels is not None:
        rows.append(("cython", timeit(lambda: _kernels.find_sum_collision(arr), repeat)))
    return f"find_sum_collision(|S|={len(elems)}, no collision)", rows


def bench_mian_chowla(repeat):
    count = 120
    rows = [("python", timeit(lambda: _kernels_py.mian_chowla(count), repeat))]
    if _kernels is not None:
        rows.append(("cython", timeit(lambda: _kernels.mian_chowla(count), repeat)))
    return f"mian_chowla({count})", rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()
    if _kernels is None:
        print("note: compiled extension not available, pure results only")
    for bench in (bench_bose_chowla, bench_find_sum_collision, bench_mian_chowla):
        name, rows = bench(args.repeat)
        print(f"\n{name}")
        base = rows[0][1]
        for backend, seconds in rows:
            speedup = base / seconds if seconds else float("inf")
            print(f"  {backend:<8} {seconds * 1e3:10.2f} ms   x{speedup:.1f}")


if __name__ == "__main__":
    main()
