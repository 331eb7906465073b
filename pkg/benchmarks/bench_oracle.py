#!/usr/bin/env python3
"""Time the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_oracle.py [--repeat 3] [--quick]
"""

import argparse
import time

from siteswap import _backend

# (label, kernel function, args)
CASES = [
    ("patterns n=8 all c=7", "count_patterns", (8, 7, -1, -1)),
    ("patterns n=6 b=5 c=30", "count_patterns", (6, 30, 30, -1)),
    ("patterns n=5 b=6 c=14", "count_patterns", (5, 14, 30, -1)),
    ("patterns n=9 all c=6", "count_patterns", (9, 6, -1, -1)),
    ("rook s=1 n=10", "count_rook", (1, 10)),
    ("rook s=3 n=11", "count_rook", (3, 11)),
]
QUICK = {"patterns n=8 all c=7", "patterns n=5 b=6 c=14", "rook s=1 n=10"}


def best_of(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, int(result)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--quick", action="store_true", help="only the smaller cases")
    args = p.parse_args()

    names = _backend.available()
    header = f"{'case':<24}{'count':>12}" + "".join(f"{n + ' (s)':>16}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn_name, fn_args in CASES:
        if args.quick and label not in QUICK:
            continue
        timings = {}
        counts = set()
        for name in names:
            fn = getattr(_backend.get(name), fn_name)
            timings[name], value = best_of(fn, fn_args, args.repeat)
            counts.add(value)
        if len(counts) != 1:
            raise SystemExit(f"kernels disagree on {label}: {sorted(counts)}")
        line = f"{label:<24}{counts.pop():>12}" + "".join(f"{timings[n]:>16.4f}" for n in names)
        if len(names) > 1:
            line += f"{timings['python'] / max(timings['cython'], 1e-9):>9.0f}x"
        print(line)


if __name__ == "__main__":
    main()
