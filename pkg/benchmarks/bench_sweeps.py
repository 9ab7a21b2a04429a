#!/usr/bin/env python3
"""Benchmark the exhaustive sweep kernels: compiled extension vs pure Python.

Run: python benchmarks/bench_sweeps.py [--max-degree N] [--repeats R]
"""

import argparse
import time

from monogenic import _sweeps_py

try:
    from monogenic import _sweeps_cy
except ImportError:
    _sweeps_cy = None


def best_of(func, arg, repeats):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        result = func(arg)
        best = min(best, time.perf_counter() - started)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    kernels = [("python", _sweeps_py)]
    if _sweeps_cy is not None:
        kernels.append(("compiled", _sweeps_cy))
    else:
        print("compiled kernel unavailable, timing pure Python only")

    for label, func_name in [
        ("transformations", "transformation_type_counts"),
        ("partial perms", "partial_perm_type_counts"),
    ]:
        print(f"\n{label}")
        header = f"{'n':>3} " + "".join(f"{name:>12} " for name, _ in kernels)
        if len(kernels) == 2:
            header += f"{'speedup':>9}"
        print(header)
        for n in range(1, args.max_degree + 1):
            times = []
            results = []
            for _, mod in kernels:
                elapsed, result = best_of(getattr(mod, func_name), n, args.repeats)
                times.append(elapsed)
                results.append(result)
            assert all(r == results[0] for r in results), f"kernel disagreement at n={n}"
            row = f"{n:>3} " + "".join(f"{t * 1000:>10.2f}ms " for t in times)
            if len(times) == 2:
                row += f"{times[0] / times[1]:>8.1f}x"
            print(row)


if __name__ == "__main__":
    main()
