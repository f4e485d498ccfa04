"""Compiled vs numpy elimination kernel.

    python benchmarks/bench_kernels.py [--reps N]

Part one times ``rref_inplace`` from each available backend on identical
random batches.  Part two runs whole workloads in a subprocess, once per
backend (``CODETOPS_PURE_PYTHON=1`` forces the fallback).
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from codetops import field_of_order, kernels

SHAPES = [(3, 12), (6, 64), (6, 360), (12, 40)]
WORKLOADS = {
    "analyze example2": "from codetops.fixtures import example2; from codetops.tops import analyze; analyze(example2().M)",
    "stabilizer example4 q=7": "from codetops.fixtures import example4; from codetops.autos import stabilizer_order; "
                               "from codetops.matspace import row_space; stabilizer_order(row_space(example4(7).M))",
    "census (5,2,3)": "from codetops.verify import census; census(5, 2, 3)",
}


def bench_kernel(reps: int):
    rng = np.random.default_rng(0)
    backends = kernels.available_backends()
    print(f"{'q':>3} {'shape':>9} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for q in (2, 3, 9):
        F = field_of_order(q)
        for shape in SHAPES:
            batch = [rng.integers(0, q, size=shape, dtype=np.int64) for _ in range(reps)]
            times = {}
            for name, fn in backends.items():
                work = [a.copy() for a in batch]
                t0 = time.perf_counter()
                for a in work:
                    fn(a, F)
                times[name] = (time.perf_counter() - t0) / reps * 1e6
            speed = times["python"] / times["cython"] if "cython" in times else float("nan")
            print(f"{q:>3} {str(shape):>9} " + " ".join(f"{t:10.1f}us" for t in times.values())
                  + f"   {speed:6.1f}x")


def bench_workloads():
    print()
    for label, code in WORKLOADS.items():
        row = []
        for pure in ("", "1"):
            env = dict(os.environ, CODETOPS_PURE_PYTHON=pure)
            t0 = time.perf_counter()
            subprocess.run([sys.executable, "-c", code], env=env, check=True)
            row.append(time.perf_counter() - t0)
        print(f"{label:<26} compiled {row[0]:6.2f}s   fallback {row[1]:6.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=2000)
    args = ap.parse_args()
    print("backend in use:", kernels.BACKEND)
    bench_kernel(args.reps)
    bench_workloads()
