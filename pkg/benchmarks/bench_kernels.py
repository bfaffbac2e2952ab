"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import math
import timeit

import numpy as np

from nomafl import _kernels_py

try:
    from nomafl import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def cases(rng):
    x = np.concatenate([-1 / math.e + np.logspace(-6, -0.5, 5000), np.logspace(-6, 6, 5000)])
    gains = np.sort(10 ** rng.uniform(-13, -9, 8))[::-1].copy()
    products = rng.uniform(0, 0.01, 8) * gains
    return {
        "lambert_w0_array (10k points)": lambda k: k.lambert_w0_array(x),
        "lambert_w0 scalar x1000": lambda k: [k.lambert_w0(v) for v in x[:1000]],
        "closed_form_power x1000": lambda k: [
            k.closed_form_power(1e-10, 1e-14, 3.98e-15, 1e5, 1e6, v)
            for v in np.logspace(-2, 3, 1000)],
        "sic_rates (8 clients) x1000": lambda k: [
            k.sic_rates(products, 3.98e-15, 1e6) for _ in range(1000)],
        "dual_power_sweep (8 clients, 500 it)": lambda k: k.dual_power_sweep(
            gains, 3.98e-15, 1e5, 1e6, 0.01, np.full(8, 1e3), 1e-2, 500, 0.0, 0.0),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels_c is None:
        print("compiled extension not built; only the Python backend is timed")
    backends = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    print(f"{'kernel':40s} " + " ".join(f"{n:>12s}" for n, _ in backends) + "   speedup")
    for name, fn in cases(np.random.default_rng(0)).items():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
                 for _, k in backends]
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{name:40s} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
