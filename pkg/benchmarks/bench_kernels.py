"""Compare the compiled and pure-Python kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Times raw convolution on small-coefficient and big-integer inputs, then an
end-to-end identity sweep run in a subprocess under each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from incpoly import _purepy

try:
    from incpoly import _speedups
except ImportError:
    _speedups = None

SWEEP = (
    "import time; from incpoly import parse, BACKEND;"
    "from incpoly.identities import verify_catalog;"
    "t=time.perf_counter();"
    "[verify_catalog(parse(h), 30) for h in ('1','2','x','x^2 + 1','3*x')];"
    "print(BACKEND, time.perf_counter()-t)"
)


def bench_convolve(repeat):
    rng = random.Random(0)
    cases = {
        "deg 60, |c| < 2^20": [rng.randint(-(2**20), 2**20) for _ in range(61)],
        "deg 200, |c| < 2^10": [rng.randint(-1024, 1024) for _ in range(201)],
        "deg 60, |c| < 2^100": [rng.randint(-(2**100), 2**100) for _ in range(61)],
    }
    print(f"{'case':<24}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, a in cases.items():
        b = list(reversed(a))
        py = min(timeit.repeat(lambda: _purepy.convolve(a, b), number=20, repeat=repeat)) / 20
        if _speedups is None:
            print(f"{name:<24}{py * 1e3:>14.3f}{'n/a':>14}{'':>10}")
            continue
        cy = min(timeit.repeat(lambda: _speedups.convolve(a, b), number=20, repeat=repeat)) / 20
        print(f"{name:<24}{py * 1e3:>14.3f}{cy * 1e3:>14.3f}{py / cy:>9.1f}x")


def bench_sweep():
    print("\nidentity sweep, n <= 30, five h:")
    for pure in ("1", "0"):
        env = dict(os.environ, INCPOLY_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"  {out[0]:<8}{float(out[1]):8.2f} s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    bench_convolve(args.repeat)
    bench_sweep()


if __name__ == "__main__":
    main()
