#!/usr/bin/env python3
"""Time the compiled strip-insertion kernel against the pure-Python one.

Both kernels expose the same ``schur_mult``; this script runs an identical
grid of products through each, checks the coefficient sums agree, and
reports the best wall time over a few repeats.
"""

import argparse
import itertools
import time

from quiverinv import _lrkernel_py

try:
    from quiverinv import _lrkernel
except ImportError:
    _lrkernel = None


def partitions_up_to(size, rows):
    def rec(remaining, maxpart, rows_left):
        yield ()
        if not remaining or not rows_left:
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    seen = set()
    for total in range(size + 1):
        seen.update(rec(total, total, rows))
    return sorted(seen)


def workload(kernel, parts, rows):
    checksum = 0
    for lam, mu in itertools.product(parts, parts):
        checksum += sum(kernel.schur_mult(lam, mu, rows).values())
    return checksum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=9, help="max partition size")
    ap.add_argument("--rows", type=int, default=5, help="row bound")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    parts = partitions_up_to(args.size, args.rows)
    print(
        f"{len(parts)} partitions up to size {args.size}, "
        f"{len(parts) ** 2} products, rows <= {args.rows}"
    )
    results = {}
    for name, kernel in (("compiled", _lrkernel), ("python", _lrkernel_py)):
        if kernel is None:
            print(f"{name:>9}: not built")
            continue
        best = None
        checksum = None
        for _ in range(args.repeat):
            start = time.perf_counter()
            checksum = workload(kernel, parts, args.rows)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        results[name] = (best, checksum)
        print(f"{name:>9}: {best:8.3f}s  coefficient sum {checksum}")
    if len(results) == 2:
        if results["compiled"][1] != results["python"][1]:
            raise SystemExit("kernel outputs disagree")
        print(f"  speedup: {results['python'][0] / results['compiled'][0]:.1f}x")


if __name__ == "__main__":
    main()
