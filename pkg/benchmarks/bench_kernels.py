"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot paths (batch coherent amplitudes, weighted projector
accumulation) on resolution-of-unity sized workloads for several spins.

Run:  python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from spinclock import kernels
from spinclock.grids import sphere_grid


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(j: float, repeats: int):
    two_j = int(round(2 * j))
    grid = sphere_grid(j)
    hlb = kernels._log_binomial_halves(two_j)
    xi = np.ascontiguousarray(grid.xi)
    out = np.empty((len(xi), two_j + 1), dtype=np.complex128)
    coeff = grid.weights.astype(np.complex128)

    rows = {}
    if kernels.NUMBA_ENABLED:
        kernels._amplitudes_jit(xi, two_j, hlb, out)  # warm up JIT
        rows["amplitudes_numba"] = _time(
            lambda: kernels._amplitudes_jit(xi, two_j, hlb, out), repeats)
    rows["amplitudes_numpy"] = _time(
        lambda: kernels._amplitudes_numpy(xi, two_j, hlb, out), repeats)

    vecs = np.ascontiguousarray(out)
    acc = np.zeros((two_j + 1, two_j + 1), dtype=np.complex128)
    if kernels.NUMBA_ENABLED:
        kernels._accumulate_jit(vecs, coeff, acc)
        rows["accumulate_numba"] = _time(
            lambda: kernels._accumulate_jit(vecs, coeff, acc), repeats)
    rows["accumulate_numpy"] = _time(
        lambda: kernels._accumulate_numpy(vecs, coeff, acc), repeats)
    return len(xi), rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--spins", type=float, nargs="+", default=[5, 20, 50, 100])
    args = ap.parse_args()
    if not kernels.NUMBA_ENABLED:
        print("numba disabled (SPINCLOCK_NO_NUMBA or import failure); "
              "timing the numpy path only")
    print(f"{'j':>6} {'grid':>8}  kernel                 best [ms]")
    for j in args.spins:
        npts, rows = bench(j, args.repeats)
        for name, dt in rows.items():
            print(f"{j:>6} {npts:>8}  {name:<22} {dt * 1e3:9.3f}")


if __name__ == "__main__":
    main()
