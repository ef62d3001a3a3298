#!/usr/bin/env python3
"""Reproduce the worked examples end to end and print every invariant.

Covers the three headline delta-matroids: the generic rank-3 realization
(4 feasible sets), the rank-4 family where the orbit-side generating
polynomial breaks away from (v+1) * interlace, and the 7-vertex graph
example with its non-very-ample vertex-span lattice.  The graph case takes
about a minute; pass --skip-large to leave it out.
"""

import argparse
import time

from deltak import (DeltaMatroid, from_graph, interlace, is_normal_bounded,
                    is_very_ample, r_poly_orbit, r_poly_y)
from deltak.laurent import UniPoly


def show(D, name, orbit_budget=200000, skip_y=False):
    print(f"== {name}: {D}")
    t0 = time.time()
    ip = interlace(D)
    print(f"   interlace:            {ip}")
    print(f"   (v+1) * interlace:    {UniPoly((1, 1)) * ip}")
    if not skip_y:
        print(f"   tangent-cone R(v):    {r_poly_y(D)}")
    print(f"   orbit R(v):           {r_poly_orbit(D, max_pairs=orbit_budget)}")
    ample, gaps = is_very_ample(D, stop_at_first_vertex=True)
    print(f"   very ample (Z^n):     {ample}"
          + (f", first gaps {[(sorted(S), g) for S, g in gaps[:2]]}" if gaps else ""))
    print(f"   normal up to level 2: {is_normal_bounded(D, 2)}")
    print(f"   ({time.time() - t0:.1f}s)")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--skip-large", action="store_true")
    args = parser.parse_args()

    show(DeltaMatroid(3, [{1, 2, 3}, {1}, {2}, {3}]), "rank 3, four feasible sets")
    show(DeltaMatroid(4, [set(), {1}, {2}, {3}, {4}, {2, 3, 4}, {1, 3, 4},
                          {1, 2, 4}, {1, 2, 3}]), "rank 4, nine feasible sets")
    if not args.skip_large:
        D, _ = from_graph(7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5),
                              (5, 6), (5, 7), (6, 7)], check=False)
        print(f"== graph on [7]: {len(D.feasible)} feasible sets")
        t0 = time.time()
        print(f"   orbit R(v):           {r_poly_orbit(D, max_pairs=2000000)}")
        print(f"   (v+1) * interlace:    {UniPoly((1, 1)) * interlace(D)}")
        ample, gaps = is_very_ample(D, lattice="vertex-span",
                                    stop_at_first_vertex=True)
        print(f"   very ample (vertex-span lattice): {ample}, "
              f"gaps {[g for _, g in gaps]}")
        print(f"   ({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main()
