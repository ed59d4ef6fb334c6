"""Benchmark the compiled kernels against the pure fallback.

Times the two kernel primitives and an end-to-end Monte Carlo volume with
each lane active, and verifies on the way that both lanes produce identical
bits (the package guarantees lane-independent results).

Usage: python benchmarks/bench_kernels.py [--samples N] [--repeat K]
"""

import argparse
import time

import numpy as np

import indivisibles._kernels as kernels
from indivisibles._kernels import _pure
from indivisibles.oracle import mc_volume

try:
    from indivisibles._kernels import _core
except ImportError:
    _core = None


def best_of(repeat, fn, *args, **kwargs):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        best = min(best, time.perf_counter() - start)
    return best, result


def sphere_volume_estimate(samples):
    return mc_volume(
        lambda x, y, z: x * x + y * y + z * z <= 1.0,
        ((-1, 1), (-1, 1), (-1, 1)),
        samples,
        seed=42,
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--samples", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _core is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")
        return

    n = args.samples
    rows = []

    out_pure = np.empty(n)
    out_core = np.empty(n)
    t_pure, _ = best_of(args.repeat, _pure.fill_uniform01, out_pure, 42, 0)
    t_core, _ = best_of(args.repeat, _core.fill_uniform01, out_core, 42, 0)
    assert np.array_equal(out_pure, out_core), "lanes disagree on the uniform stream"
    rows.append(("uniform01", n, t_pure, t_core))

    t_pure, s_pure = best_of(args.repeat, _pure.ordered_sum, out_pure, 0.0)
    t_core, s_core = best_of(args.repeat, _core.ordered_sum, out_core, 0.0)
    assert s_pure == s_core, "lanes disagree on the ordered sum"
    rows.append(("ordered_sum", n, t_pure, t_core))

    saved = kernels._impl
    try:
        kernels._impl = _pure
        t_pure, est_pure = best_of(args.repeat, sphere_volume_estimate, n)
        kernels._impl = _core
        t_core, est_core = best_of(args.repeat, sphere_volume_estimate, n)
    finally:
        kernels._impl = saved
    assert est_pure == est_core, "lanes disagree on the Monte Carlo estimate"
    rows.append(("mc_volume(sphere)", n, t_pure, t_core))

    print(f"{'kernel':<20} {'n':>10} {'pure [ms]':>12} {'compiled [ms]':>14} {'speedup':>9}")
    for name, count, tp, tc in rows:
        print(f"{name:<20} {count:>10} {tp * 1e3:>12.2f} {tc * 1e3:>14.2f} {tp / tc:>8.1f}x")
    print("\nall lane outputs bit-identical")


if __name__ == "__main__":
    main()
