#!/usr/bin/env python3
"""Track the streamed fixed-point sum on larger ground sets.

The cube family (all subsets feasible) keeps the answer self-checking:
the characteristic of its polytope class is 2^n.
"""

import argparse
import time

from deltak.dmat import DeltaMatroid
from deltak.engine import euler_char_polytope_streamed
from deltak.fan import w_count


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=8)
    parser.add_argument("--chunk", type=int, default=4096)
    args = parser.parse_args()

    D = DeltaMatroid(args.n, [frozenset(i + 1 for i in range(args.n) if m >> i & 1)
                              for m in range(1 << args.n)], check=False)
    print(f"n={args.n}: {w_count(args.n)} fixed points, {args.jobs} workers")
    t0 = time.time()
    chi = euler_char_polytope_streamed(D, jobs=args.jobs, chunk=args.chunk)
    elapsed = time.time() - t0
    assert chi == 2 ** args.n, chi
    print(f"chi = {chi} in {elapsed:.1f}s "
          f"({w_count(args.n) / elapsed:.0f} fixed points/s)")


if __name__ == "__main__":
    main()
