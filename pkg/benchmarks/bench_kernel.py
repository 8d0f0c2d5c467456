"""Census kernel: compiled vs pure Python.

    python3 benchmarks/bench_kernel.py [--n-max 6] [--repeat 3]

Both kernels must return the same census; the table reports the best of
``--repeat`` wall-clock runs.
"""

import argparse
import time

from staircase import _kernel_py

try:
    from staircase import _ckernel
except ImportError:
    _ckernel = None


def best_of(fn, n, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(n)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return
    print(f"{'n':>2} {'tableaux':>10} {'keys':>7} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for n in range(1, args.n_max + 1):
        tp, a = best_of(_kernel_py.census, n, args.repeat if n < 6 else 1)
        tc, b = best_of(_ckernel.census, n, args.repeat)
        assert dict(a) == dict(b), f"kernels disagree at n={n}"
        print(f"{n:>2} {sum(a.values()):>10} {len(a):>7} {tp:>9.4f} {tc:>9.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
