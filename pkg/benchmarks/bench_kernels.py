#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

Times the three hot kernels on representative workloads: dense truncated
series products, the hexagonal-norm count table, and the first-gap scan
over the full escalator-equivalence box. Run from the repository root:

    python benchmarks/bench_kernels.py

If the extension is not built only the pure timings are printed.
"""

import random
import time
from array import array

from hexforms import _kernels_py
from hexforms.kernels import _speedups


def best_of(fn, repeats):
    best = None
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - started
        best = elapsed if best is None else min(best, elapsed)
    return best


def bench_mul_theta(order):
    coeffs = _kernels_py.hex_count_table(order)  # sparse-friendly series
    return _mul_case(coeffs)


def bench_mul_dense(order):
    rng = random.Random(5)
    coeffs = [rng.randrange(1, 10) for _ in range(order + 1)]  # no zeros
    return _mul_case(coeffs)


def _mul_case(coeffs):
    arr = array("q", coeffs)
    pure = lambda: _kernels_py.mul_trunc(coeffs, coeffs)
    compiled = None
    if _speedups is not None:
        compiled = lambda: _speedups.mul_trunc(arr, arr)
    return pure, compiled


def bench_hex_table(n_max):
    pure = lambda: _kernels_py.hex_count_table(n_max)
    compiled = None
    if _speedups is not None:
        compiled = lambda: _speedups.hex_count_table(n_max)
    return pure, compiled


def bench_box_scan(bound):
    flags = bytes(1 if v else 0 for v in _kernels_py.hex_count_table(bound))
    triples = [(a, b, c)
               for c in range(1, 9)
               for a in range(1, 13)
               for b in range(a, 13)]

    def run(gap):
        for a, b, c in triples:
            gap(a, b, c, flags, bound)

    pure = lambda: run(_kernels_py.quaternary_first_gap)
    compiled = None
    if _speedups is not None:
        compiled = lambda: run(_speedups.quaternary_first_gap)
    return pure, compiled


CASES = [
    ("mul_trunc, hex theta squared, order 1000", 3, bench_mul_theta(1000)),
    ("mul_trunc, hex theta squared, order 3000", 2, bench_mul_theta(3000)),
    ("mul_trunc, dense series squared, order 2000", 2, bench_mul_dense(2000)),
    ("hex_count_table to 100000", 2, bench_hex_table(100_000)),
    ("first-gap scan, 624 triples, bound 2000", 2, bench_box_scan(2000)),
]


def main():
    if _speedups is None:
        print("compiled extension not built; timing the pure kernels only\n")
    header = f"{'kernel workload':<44} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, repeats, (pure, compiled) in CASES:
        pure_t = best_of(pure, repeats)
        if compiled is None:
            print(f"{name:<44} {pure_t:>9.4f}s {'-':>10} {'-':>8}")
        else:
            comp_t = best_of(compiled, repeats)
            print(f"{name:<44} {pure_t:>9.4f}s {comp_t:>9.4f}s {pure_t / comp_t:>7.1f}x")


if __name__ == "__main__":
    main()
