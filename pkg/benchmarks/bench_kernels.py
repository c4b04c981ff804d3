"""Time the batched ``det(I - lam*A)`` kernel: numba vs pure numpy.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.  Batches are the
full Weyl groups the brute-force oracle enumerates.
"""

import argparse
import time

import numpy as np

from nilhodge import _kernels
from nilhodge.weyl import _signed_permutation_matrices

CASES = [("S_6", 6, False), ("S_7", 7, False), ("S_8", 8, False), ("C_4", 4, True), ("C_5", 5, True)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    have_numba = _kernels._HAVE_NUMBA
    if have_numba:
        # compile outside the timed region
        _kernels.det_shifted_numba(np.eye(2, dtype=np.int64)[None], np.arange(3))

    print(f"{'batch':<6}{'elements':>10}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, n, signed in CASES:
        mats = _signed_permutation_matrices(n, signed)
        points = np.arange(n + 1)
        t_np, ref = best_of(lambda: _kernels.det_shifted_numpy(mats, points), args.repeat)
        if have_numba:
            t_nb, got = best_of(lambda: _kernels.det_shifted_numba(mats, points), args.repeat)
            assert np.array_equal(got, ref), f"backends disagree on {name}"
            print(f"{name:<6}{len(mats):>10}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")
        else:
            print(f"{name:<6}{len(mats):>10}{t_np:>10.4f}{'n/a':>10}{'':>9}")


if __name__ == "__main__":
    main()
