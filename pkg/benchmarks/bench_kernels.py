"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--max-n 5] [--repeat 3]
"""

import argparse
import random
import time

import numpy as np

from latticeiso import _purepy

try:
    from latticeiso import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _speedups is None:
        print("compiled kernels are not built; nothing to compare")
        return

    print(f"{'kernel':<24}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for n in range(1, args.max_n + 1):
        tp, (cp, bp) = best_of(lambda: _purepy.enumerate_candidates(n), args.repeat)
        tc, (cc, bc) = best_of(lambda: _speedups.enumerate_candidates(n), args.repeat)
        assert np.array_equal(cp, cc) and np.array_equal(bp, bc), "backends disagree"
        print(f"{f'enumerate n={n}':<24}{tp:>12.4f}{tc:>12.4f}{tp / max(tc, 1e-9):>10.1f}x")

    rng = random.Random(0)
    sets = [{(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(200)} for _ in range(500)]
    tp, rp = best_of(lambda: [_purepy.boundary_size(s) for s in sets], args.repeat)
    tc, rc = best_of(lambda: [_speedups.boundary_size(s) for s in sets], args.repeat)
    assert rp == rc, "backends disagree"
    print(f"{'boundary x500':<24}{tp:>12.4f}{tc:>12.4f}{tp / max(tc, 1e-9):>10.1f}x")


if __name__ == "__main__":
    main()
