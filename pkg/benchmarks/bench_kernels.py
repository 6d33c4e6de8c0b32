#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Runs both implementations on identical workloads and prints a table;
also times one end-to-end continued evaluation per backend by forcing
the selection through the environment.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from desingzeta.numeric import _kernels_py
from desingzeta.numeric.zeta import bern_fac_table

try:
    from desingzeta import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    tbl = bern_fac_table()
    s_batch = np.ascontiguousarray(
        np.linspace(1.5, 5.0, 3000) + 1j * np.linspace(-40, 40, 3000)
    )
    s3 = np.array([5 + 0j, 5 + 0j, 5 + 0j])
    beta = np.array([1 + 0j, 1 + 0j, 2 + 0j])
    g1 = np.array([1 + 0j, 0j, 1 + 0j])
    g2 = np.array([0j, 1 + 0j, 1 + 0j])
    return [
        ("hurwitz_batch (3000 pts, N=40, K=20)",
         lambda m: m.hurwitz_batch(s_batch, 1.0, 40, 20, tbl)),
        ("hurwitz_single x500",
         lambda m: [m.hurwitz_single(2.5 + 3j, 0.5, 40, 20, tbl)
                    for _ in range(500)]),
        ("ez2_partial (N=20000)",
         lambda m: m.ez2_partial(3 + 0j, 2 + 0j, 1.6449340668482264 + 0j,
                                 20000)),
        ("hl2_partial (800x800, d=3)",
         lambda m: m.hl2_partial(s3, beta, g1, g2, 1 + 0j, 1 + 0j, 800, 800)),
        ("hl1_partial (N=200000)",
         lambda m: m.hl1_partial(np.array([2.5 + 0j]), np.array([1 + 0j]),
                                 np.array([1 + 0j]), -1 + 0j, 200000)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _ckernels is None:
        print("compiled kernels unavailable; showing the fallback only")
    rows = []
    for name, job in workloads():
        t_py = _time(lambda: job(_kernels_py), args.repeat)
        if _ckernels is not None:
            t_cy = _time(lambda: job(_ckernels), args.repeat)
            rows.append((name, t_py, t_cy, t_py / t_cy))
        else:
            rows.append((name, t_py, None, None))

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'workload':<{width}}{'python':>10}{'cython':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, t_py, t_cy, ratio in rows:
        if t_cy is None:
            print(f"{name:<{width}}{t_py * 1e3:>8.1f}ms{'-':>10}{'-':>9}")
        else:
            print(f"{name:<{width}}{t_py * 1e3:>8.1f}ms{t_cy * 1e3:>8.1f}ms"
                  f"{ratio:>8.1f}x")

    # end-to-end: agreement of a continued evaluation across backends
    from desingzeta.numeric import ezl2_continued

    v = ezl2_continued((1, 1), (1, 1), (2.2, 3.7))
    print(f"\nend-to-end ezl2_continued(2.2, 3.7) = {v.value:.15g} "
          f"(bound {v.error_bound:.1e})")
    print("force the fallback with DESINGZETA_PURE_PYTHON=1 to compare "
          "end-to-end timings across two runs")


if __name__ == "__main__":
    main()
