#!/usr/bin/env python3
"""Benchmark the hot kernels: numba-compiled vs pure-numpy fallback.

Runs each kernel in both modes on representative workloads, checks the two
paths agree, and prints a timing table.  The numpy path is the same code the
package uses when THZCHAN_DISABLE_NUMBA=1 (or numba is unavailable).
"""

import time

import numpy as np

from thzchan import _kernels
from thzchan._accel import NUMBA_ENABLED
from thzchan.constants import C0, H_PLANCK, K_BOLTZMANN


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm-up (jit compile)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_absorption():
    rng = np.random.default_rng(0)
    n_lines, n_grid = 400, 20_000
    f = np.linspace(0.1e12, 10e12, n_grid)
    tanh_f = np.tanh(H_PLANCK * f / (2 * K_BOLTZMANN * 296.0))
    centers = rng.uniform(0.1e12, 10e12, n_lines)
    widths = rng.uniform(1e9, 5e9, n_lines)
    coeffs = rng.uniform(1e-40, 1e-38, n_lines)
    args = (f, tanh_f, centers, widths, coeffs, 750e9)
    t_np, out_np = timeit(_kernels._absorption_sum_numpy, *args)
    if NUMBA_ENABLED:
        t_nb, out_nb = timeit(_kernels._absorption_sum_numba, *args)
        assert np.allclose(out_nb, out_np, rtol=1e-12)
        return "absorption line sum", f"{n_lines} lines x {n_grid} points", t_np, t_nb
    return "absorption line sum", f"{n_lines} lines x {n_grid} points", t_np, None


def bench_array_response():
    rng = np.random.default_rng(1)
    qbar, n = 1024, 20_000
    lam = C0 / 300e9
    y = rng.uniform(-0.05, 0.05, qbar)
    z = rng.uniform(-0.05, 0.05, qbar)
    phi = rng.uniform(-np.pi, np.pi, n)
    theta = rng.uniform(0.1, np.pi - 0.1, n)
    phi0 = rng.uniform(-np.pi, np.pi, n)
    theta0 = rng.uniform(0.1, np.pi - 0.1, n)
    args = (y, z, phi, theta, phi0, theta0, 1.0 / lam, 1.0 / lam)
    t_np, out_np = timeit(_kernels._array_response_numpy, *args)
    if NUMBA_ENABLED:
        t_nb, out_nb = timeit(_kernels._array_response_numba, *args)
        assert np.allclose(out_nb, out_np, rtol=1e-10)
        return "equivalent array response", f"{qbar} elements x {n} angle pairs", t_np, t_nb
    return "equivalent array response", f"{qbar} elements x {n} angle pairs", t_np, None


def bench_pairwise():
    rng = np.random.default_rng(2)
    nr = nt = 512
    k = 8
    pos_r = rng.uniform(0, 0.05, (nr, 3)) + np.array([2.0, 0, 0])
    pos_t = rng.uniform(0, 0.05, (nt, 3))
    f_k = np.linspace(295e9, 305e9, k)
    absorb = np.full(k, 0.0033)
    spread = C0 / (4 * np.pi * f_k)
    args = (pos_r, pos_t, f_k, absorb, spread, 2.0, 2 * np.pi / C0)
    t_np, out_np = timeit(_kernels._pairwise_channel_numpy, *args)
    if NUMBA_ENABLED:
        t_nb, out_nb = timeit(_kernels._pairwise_channel_numba, *args)
        assert np.allclose(out_nb, out_np, rtol=1e-10)
        return "pairwise spherical channel", f"{nr}x{nt} elements x {k} subcarriers", t_np, t_nb
    return "pairwise spherical channel", f"{nr}x{nt} elements x {k} subcarriers", t_np, None


def main():
    print(f"numba acceleration: {'ON' if NUMBA_ENABLED else 'OFF (numpy fallback)'}\n")
    rows = [bench_absorption(), bench_array_response(), bench_pairwise()]
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'workload':<36} {'numpy':>9}  {'numba':>9}  speedup")
    for name, workload, t_np, t_nb in rows:
        if t_nb is None:
            print(f"{name:<{width}}  {workload:<36} {t_np*1e3:8.2f}ms        --       --")
        else:
            print(f"{name:<{width}}  {workload:<36} {t_np*1e3:8.2f}ms {t_nb*1e3:8.2f}ms  {t_np/t_nb:6.1f}x")


if __name__ == "__main__":
    main()
