"""Throughput comparison of the compiled and pure-python path kernels.

Both kernels draw from identical RNG streams and produce bit-identical
paths, so the comparison is pure overhead. Run from the repo root:

    python3 benchmarks/bench_kernels.py [--horizon H] [--reps N]
"""
import argparse
import time

import numpy as np

from lcmjumps import _kernels_py
from lcmjumps import vertex_sim as vs

try:
    from lcmjumps import _kernels
except ImportError:
    _kernels = None


def bench(mod, tables, horizon, reps, seed=0):
    args = tables.as_kernel_args()
    n_jumps = 0
    children = np.random.SeedSequence(seed).spawn(reps)
    t0 = time.perf_counter()
    for child in children:
        rng = np.random.default_rng(child)
        v0 = vs.sample_v0(rng, tables)
        times, _, _ = mod.run_path(rng, v0, horizon, *args)
        n_jumps += len(times)
    dt = time.perf_counter() - t0
    return dt, n_jumps


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--horizon", type=float, default=2000.0)
    ap.add_argument("--reps", type=int, default=50)
    opts = ap.parse_args()

    t0 = time.perf_counter()
    tables = vs.build_sim_tables()
    t_build = time.perf_counter() - t0
    print(f"table build: {t_build:.2f} s")

    rows = [("python", _kernels_py)]
    if _kernels is not None:
        rows.insert(0, ("compiled", _kernels))
    else:
        print("compiled kernel not available; showing pure python only")

    base = None
    for name, mod in rows:
        dt, n_jumps = bench(mod, tables, opts.horizon, opts.reps)
        per_path = 1e3 * dt / opts.reps
        line = (f"{name:9s} {opts.reps} paths, horizon {opts.horizon:g}: "
                f"{dt:7.3f} s  ({per_path:8.3f} ms/path, "
                f"{n_jumps / dt:,.0f} jumps/s)")
        if base is None:
            base = dt
        else:
            line += f"  [{dt / base:.1f}x slower]"
        print(line)


if __name__ == "__main__":
    main()
