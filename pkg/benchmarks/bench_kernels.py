#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-NumPy fallback.

Usage:  python benchmarks/bench_kernels.py [--sizes 500,1000,2000]

Prints per-kernel timings for both backends and the worst relative
disagreement between them (should sit at float rounding).
"""

import argparse
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from surfloss._kernels import _py  # noqa: E402

try:
    from surfloss._kernels import _core
except ImportError:
    _core = None


def timeit(fn, *args, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def rel_diff(a, b):
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    scale = np.maximum(np.abs(a), np.abs(b))
    scale[scale == 0] = 1.0
    return float(np.max(np.abs(a - b) / scale))


def bench(n: int):
    rng = np.random.default_rng(12345)
    z = np.sort(rng.uniform(1e-6, 1e-4, n))
    r = rng.uniform(5e-8, 5e-6, n)
    w = np.diff(np.concatenate([[0.5e-6], z]))
    w = np.abs(w) + 1e-8
    x = rng.uniform(-1e-4, 1e-4, n)
    y = rng.uniform(-1e-4, 1e-4, n)
    th = rng.uniform(0, 2 * np.pi, n)
    q = rng.uniform(-1e-12, 1e-12, n)
    m_arg = -rng.uniform(0.01, 1e4, n * n)

    cases = [
        ("ellipk_grid (n^2 values)", lambda b: b.ellipk_grid(m_arg)),
        ("planar_matrix", lambda b: b.planar_matrix(x, y, w)),
        ("ring_matrix", lambda b: b.ring_matrix(z, r, w)),
        ("flatwire_matrix", lambda b: b.flatwire_matrix(z, r, w)),
        ("segment_field (n pts)", lambda b: b.segment_field(
            x, y + 2e-4, x, y, np.cos(th), np.sin(th), w, q)),
    ]
    print(f"\nN = {n}")
    print(f"{'kernel':28s} {'python':>10s} {'compiled':>10s} "
          f"{'speedup':>8s} {'max rel diff':>13s}")
    for name, call in cases:
        t_py, out_py = timeit(call, _py)
        if _core is None:
            print(f"{name:28s} {t_py * 1e3:9.1f}ms {'-':>10s} {'-':>8s} {'-':>13s}")
            continue
        t_c, out_c = timeit(call, _core)
        if isinstance(out_py, tuple):
            diff = max(rel_diff(a, b) for a, b in zip(out_py, out_c))
        else:
            diff = rel_diff(out_py, out_c)
        print(f"{name:28s} {t_py * 1e3:9.1f}ms {t_c * 1e3:8.1f}ms "
              f"{t_py / t_c:7.1f}x {diff:13.2e}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="500,1000,2000")
    args = ap.parse_args()
    if _core is None:
        print("compiled kernels not built (python setup.py build_ext "
              "--inplace); timing the fallback only")
    for n in (int(s) for s in args.sizes.split(",")):
        bench(n)


if __name__ == "__main__":
    main()
