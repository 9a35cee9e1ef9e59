#!/usr/bin/env python3
"""Benchmark the modular rank kernel: numba @njit vs the pure-numpy fallback.

The same elimination runs through both code paths (the fallback is what you
get with APOLAR_NO_NUMBA=1 or without numba installed); this script times
them side by side on random dense matrices and on a realistic tangent-space
workload, and cross-checks that both paths report identical ranks.
"""

import os
import random
import time

from apolar import modular
from apolar.modular import _rank_mod_numpy, reduce_matrix
from apolar.secant import _veronese_gradient_rows
from apolar.seeding import random_point, trial_rng

P = modular.DEFAULT_MODULUS


def random_rows(rng, n, m, bound=10**6):
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def time_path(rows, use_njit, repeats=5):
    best = float("inf")
    rank = None
    for _ in range(repeats):
        a = reduce_matrix(rows, P)
        t0 = time.perf_counter()
        if use_njit:
            rank = int(modular._rank_mod_njit(a, P))
        else:
            rank = _rank_mod_numpy(a, P)
        best = min(best, time.perf_counter() - t0)
    return rank, best


def main():
    if os.environ.get("APOLAR_NO_NUMBA"):
        print("unset APOLAR_NO_NUMBA to benchmark the compiled path")
        return
    if not modular.numba_active():
        print("numba unavailable; nothing to compare")
        return

    rng = random.Random(0)
    workloads = []
    for n in (50, 100, 200, 400):
        workloads.append(("random %dx%d" % (n, n), random_rows(rng, n, n)))
    # tangent-space matrix of the 9th secant of the quartic Veronese of P^3
    trial = trial_rng(0, 0)
    points = [random_point(trial, 4) for _ in range(9)]
    workloads.append(("veronese n=3 d=4 s=9 (36x35)",
                      _veronese_gradient_rows(3, 4, points)))

    # trigger JIT compilation outside the timed region
    time_path(workloads[0][1], use_njit=True, repeats=1)

    print("%-30s %10s %12s %12s %8s" % ("workload", "rank", "njit [ms]",
                                        "numpy [ms]", "speedup"))
    for name, rows in workloads:
        rank_fast, fast = time_path(rows, use_njit=True)
        rank_slow, slow = time_path(rows, use_njit=False)
        assert rank_fast == rank_slow, "paths disagree on %s" % name
        print("%-30s %10d %12.3f %12.3f %7.1fx"
              % (name, rank_fast, fast * 1e3, slow * 1e3, slow / fast))


if __name__ == "__main__":
    main()
