#!/usr/bin/env python3
"""Benchmark the compiled kernel lane against the pure-Python fallback.

Micro-benchmarks call both lane modules directly in one process; the
end-to-end scan comparison re-runs the scanner in subprocesses with
NGCURVES_PURE toggled so each lane is selected at import time.

Usage:
    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import subprocess
import sys
import time

from ngcurves._kernels import pure

try:
    from ngcurves._kernels import _fast as fast
except ImportError:
    fast = None


def best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def row(name, t_pure, t_fast):
    speed = t_pure / t_fast if t_fast else float("nan")
    print(f"{name:<34} {t_pure * 1000:>10.2f} {t_fast * 1000:>10.2f} {speed:>8.1f}x")


def micro(lane, gens, limit, an):
    m1 = lane.min_summands(gens, limit)
    g2 = tuple(an - v for v in reversed(gens[:-1])) + (an,)
    m2 = lane.min_summands(g2, (g2[0] - 1) * (an - 1) + 2 * an)
    f1 = lane.largest_gap(m1)
    f2 = lane.largest_gap(m2)
    nus = lane.least_member_per_class(m1, an)
    mus = [-1] + [m1[nus[r]] * an - nus[r] for r in range(1, an)]
    nus = [-1] + nus[1:]
    lane.b_tilde_residues(nus, mus, an)
    lane.canonical_box(m1, m2, f1, f2, an, [0, *gens])
    lane.non_cm_witness(m1, an, min(len(m1) // an, an + 2))


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="skip the subprocess scans")
    args = parser.parse_args()

    if fast is None:
        print("compiled lane unavailable; rebuild with `pip install -e .`")
        return 1

    print(f"{'kernel benchmark':<34} {'pure ms':>10} {'cython ms':>10} {'speedup':>8}")

    cases = [
        ("full curve pass (29, 37, 41)", (29, 37, 41)),
        ("full curve pass (31, 59, 83, 97)", (31, 59, 83, 97)),
        ("full curve pass (97, 113, 128)", (97, 113, 128)),
    ]
    for name, gens in cases:
        an = gens[-1]
        limit = (gens[0] - 1) * (an - 1) + 2 * an
        t_pure = best_of(lambda: micro(pure, gens, limit, an))
        t_fast = best_of(lambda: micro(fast, gens, limit, an))
        row(name, t_pure, t_fast)

    gens = (101, 103, 211)
    limit = (gens[0] - 1) * (gens[-1] - 1) + 2 * gens[-1]
    t_pure = best_of(lambda: pure.min_summands(gens, limit))
    t_fast = best_of(lambda: fast.min_summands(gens, limit))
    row(f"min_summands limit={limit}", t_pure, t_fast)

    if not args.quick:
        print()
        print(f"{'end-to-end scanner':<34} {'pure s':>10} {'cython s':>10} {'speedup':>8}")
        code = (
            "import time, ngcurves; t0 = time.perf_counter(); "
            "r = ngcurves.scan(3, 40); assert r.verdict; "
            "print(time.perf_counter() - t0)"
        )
        times = {}
        for lane_name, env_value in (("pure", "1"), ("cython", "0")):
            env = dict(os.environ, NGCURVES_PURE=env_value)
            out = subprocess.run(
                [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
            )
            times[lane_name] = float(out.stdout.strip())
        speed = times["pure"] / times["cython"]
        print(
            f"{'scan(3, 40)':<34} {times['pure']:>10.2f} {times['cython']:>10.2f} {speed:>8.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
