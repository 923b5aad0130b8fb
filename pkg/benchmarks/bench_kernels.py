"""Compare the numba kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]

Per-kernel timings call both implementations directly on the same inputs
(numba is compiled first, so compile time is excluded). The end-to-end rows
run the n=4 theorem suite in a fresh interpreter under each backend.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from fintop import _kernels_numba as nb
from fintop import _kernels_numpy as npk
from fintop.core import canonical_rank
from fintop.lab import _permutation_table, labeled_preorders


def _inputs(n, rng):
    nbhd = np.array(next(iter(reversed(list(labeled_preorders(min(n, 5)))))), dtype=np.int64)
    if n > 5:  # pad with isolated points
        nbhd = np.concatenate([nbhd, 1 << np.arange(5, n, dtype=np.int64)])
    mask = rng.random(1 << n) < 0.3
    mask[0] = True
    left = rng.integers(0, 1 << n, size=200, dtype=np.int64)
    right = rng.integers(0, 1 << n, size=200, dtype=np.int64)
    return nbhd, mask, left, right


def kernel_rows(n, repeat):
    rng = np.random.default_rng(0)
    nbhd, mask, left, right = _inputs(n, rng)
    k = min(n, 7)
    opens = np.sort(rng.choice(1 << k, size=40, replace=False)).astype(np.int64)  # any family will do
    perms, rank = _permutation_table(k), canonical_rank(k)
    cases = [
        ("interior_table", (nbhd, n)),
        ("closure_table", (nbhd, n)),
        ("subset_union_table", (mask, n)),
        ("superset_intersection_table", (mask, n)),
        ("pair_intersection_mask", (left, right, n)),
        ("sandwich_mask", (left & right, left | right, n)),
        ("least_relabeling", (opens, rank, perms)),
    ]
    for name, args in cases:
        getattr(nb, name)(*args)  # compile
        times = {}
        for label, mod in (("numba", nb), ("numpy", npk)):
            fn = getattr(mod, name)
            times[label] = min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))
        yield name, times["numba"], times["numpy"]


def suite_time(disable_numba):
    env = dict(os.environ)
    env.pop("FINTOP_DISABLE_NUMBA", None)
    if disable_numba:
        env["FINTOP_DISABLE_NUMBA"] = "1"
    code = (
        "import time; from fintop.lab import verify_all; verify_all(3); t=time.perf_counter(); "
        "s=verify_all(4); print(time.perf_counter()-t, s.passed)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    seconds, passed = out.stdout.split()
    assert passed == "True"
    return float(seconds)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=12, help="space size for the table kernels")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':30} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, t_nb, t_np in kernel_rows(args.points, args.repeat):
        print(f"{name:30} {t_nb * 1e3:10.3f} {t_np * 1e3:10.3f} {t_np / t_nb:8.1f}")
    t_nb, t_np = suite_time(False), suite_time(True)
    print(f"{'suite n=4 (end to end)':30} {t_nb * 1e3:10.1f} {t_np * 1e3:10.1f} {t_np / t_nb:8.1f}")


if __name__ == "__main__":
    main()
