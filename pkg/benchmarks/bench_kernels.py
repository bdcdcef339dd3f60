#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Kernel microbenchmarks import both backends directly; the end-to-end section
solves a quadrature-heavy norm in subprocesses with EXPORLICZ_BACKEND forced
each way.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import math
import os
import subprocess
import sys
import time

import numpy as np

from exporlicz._kernels import _ref

try:
    from exporlicz._kernels import _fast
except ImportError:
    _fast = None


def best_of(fn, reps=7, inner=20):
    fn()  # warmup
    best = math.inf
    for _ in range(reps):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn()
        best = min(best, (time.perf_counter() - t0) / inner)
    return best


def workloads(n):
    rng = np.random.default_rng(0)
    xs = rng.uniform(-8.0, 8.0, n)
    args = rng.uniform(-500.0, 200.0, n)
    ws = rng.uniform(0.0, 1.0, n)
    ts = np.geomspace(1e-6, 1e3, n)
    lnm = 0.5 * ts ** 2
    gammas = rng.uniform(1.0, 200.0, 256)
    return [
        ("phi_grid p=1.7", lambda m: m.phi_grid(1.7, xs)),
        ("phi_scalar x4096",
         lambda m: [m.phi_scalar(1.7, float(x)) for x in xs[:4096]]),
        ("weighted_exp_sum", lambda m: m.weighted_exp_sum(args, ws)),
        ("log_sum_exp", lambda m: m.log_sum_exp(args, ws)),
        ("tau_margin q=2", lambda m: m.tau_margin(2.0, 0.9, ts, lnm)),
        ("lgamma x256", lambda m: [m.lgamma(float(g)) for g in gammas]),
    ]


def bench_kernels(n):
    print(f"kernel microbenchmarks (arrays of {n}):")
    print(f"{'kernel':<22} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for name, call in workloads(n):
        t_py = best_of(lambda: call(_ref))
        if _fast is None:
            print(f"{name:<22} {t_py * 1e6:>10.1f}us {'n/a':>12} {'':>9}")
            continue
        t_cy = best_of(lambda: call(_fast))
        print(
            f"{name:<22} {t_py * 1e6:>10.1f}us {t_cy * 1e6:>10.1f}us"
            f" {t_py / t_cy:>8.1f}x"
        )


END_TO_END = (
    "import time; t0=time.perf_counter(); "
    "from exporlicz import WeibullSym, tau_norm, luxemburg_norm; "
    "m=WeibullSym(2.0,1.0); "
    "v1=tau_norm(m,2.0).value; v2=luxemburg_norm(m,1.5).value; "
    "print(f'{time.perf_counter()-t0:.3f}s  tau={v1:.9g} lux={v2:.9g}')"
)


def bench_end_to_end():
    print("\nend-to-end (WeibullSym tau + luxemburg solve, subprocess):")
    for backend in ("python", "compiled"):
        if backend == "compiled" and _fast is None:
            print("  compiled: extension not built")
            continue
        env = dict(os.environ, EXPORLICZ_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, "-c", END_TO_END],
            capture_output=True, text=True, env=env,
        )
        print(f"  {backend:<9} {out.stdout.strip() or out.stderr.strip()}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller arrays")
    ns = ap.parse_args()
    n = 8192 if ns.quick else 65536
    bench_kernels(n)
    bench_end_to_end()


if __name__ == "__main__":
    main()
