"""Kernel backend benchmark: compiled extension versus pure Python.

Times the per-candidate inspection kernel and a whole brute-force scan for
one n across all feasible edge counts. Run as:

    python -m sachs4.benchmark --n 9 --repeat 3
"""

import argparse
import time

from . import kernels
from .partition import feasible_edge_range
from .search import _row_multisets, _scan, _splits


def _candidates(n: int):
    out = []
    lo, hi = feasible_edge_range(n)
    for m in range(lo, hi + 1):
        for a, b in _splits(n):
            if m > a * b:
                continue
            for rows in _row_multisets(a, b, m):
                out.append((rows, b, a == b))
    return out


def _time_scan(n: int, inspect) -> tuple[float, int, int]:
    lo, hi = feasible_edge_range(n)
    t0 = time.perf_counter()
    classes = 0
    checksum = 0
    for m in range(lo, hi + 1):
        for _, _, _, a4 in _scan(n, m, inspect=inspect):
            classes += 1
            checksum += a4
    return time.perf_counter() - t0, classes, checksum


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python -m sachs4.benchmark")
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    names = kernels.available_backends()
    print(f"available backends: {', '.join(names)} (selected: {kernels.BACKEND})")

    cands = _candidates(args.n)
    print(f"n={args.n}: {len(cands)} row multisets to inspect\n")

    results = {}
    for name in names:
        impl = kernels.get_backend(name)

        best_inspect = min(
            _time_block(impl.inspect_rows, cands) for _ in range(args.repeat)
        )
        scan_time, classes, checksum = min(
            (_time_scan(args.n, impl.inspect_rows) for _ in range(args.repeat)),
            key=lambda t: t[0],
        )
        results[name] = (best_inspect, scan_time)
        rate = len(cands) / best_inspect if best_inspect else float("inf")
        print(
            f"{name:>7}: inspect {best_inspect * 1e3:8.1f} ms "
            f"({rate:10.0f} rows/s) | full scan {scan_time * 1e3:8.1f} ms "
            f"({classes} classes, a4 checksum {checksum})"
        )

    if len(results) == 2:
        speedup = results["pure"][1] / results["native"][1]
        print(f"\nnative speedup on the full scan: {speedup:.1f}x")
    return 0


def _time_block(inspect, cands) -> float:
    t0 = time.perf_counter()
    for rows, b, square in cands:
        inspect(rows, b, square)
    return time.perf_counter() - t0


if __name__ == "__main__":
    raise SystemExit(main())
