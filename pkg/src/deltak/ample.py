"""Very-ampleness and bounded normality certificates for base polytopes.

A polytope is very ample with respect to a lattice L when, at every
vertex, each Hilbert-basis element of the tangent cone (taken inside L)
already lies in the semigroup generated by the lattice points of the
shifted polytope.  Failures are reported as (vertex, gap point) pairs:
exactly the witnesses that separate the tangent-cone class from the
vertex-semigroup class on the Grassmannian side.
"""

from itertools import combinations_with_replacement, product

from .cones import hilbert_basis, span_lattice, tangent_cone
from .dmat import vertex_of
from .errors import InputError
from .lp import in_hull
from .toric import member


def vertex_difference_lattice(D):
    """Row basis of the lattice affinely spanned by the polytope vertices."""
    verts = D.vertices()
    base = verts[0]
    diffs = [tuple(a - b for a, b in zip(v, base)) for v in verts[1:]]
    if not diffs:
        raise InputError("a single vertex spans no lattice")
    return span_lattice(diffs)


def is_very_ample(D, lattice="standard", stop_at_first_vertex=False,
                  member_budget=500000, hb_budget=200000):
    """(flag, gaps): flag is True iff no vertex has a gap; gaps lists
    (vertex subset, gap vector) pairs in vertex order.

    lattice: "standard" for Z^n, "vertex-span" for the lattice generated
    by vertex differences.  With stop_at_first_vertex=True the scan stops
    after the first vertex contributing gaps (the certificate of failure
    is complete for that vertex).
    """
    if lattice not in ("standard", "vertex-span"):
        raise InputError("lattice must be 'standard' or 'vertex-span'")
    n = D.n
    if len(D.feasible) == 1:
        return True, []
    L = None if lattice == "standard" else vertex_difference_lattice(D)
    gaps = []
    for S in D.sorted_feasible():
        base = vertex_of(S, n)
        gens = [tuple(a - b for a, b in zip(vertex_of(S2, n), base))
                for S2 in D.sorted_feasible() if S2 != S]
        cone = tangent_cone(D, S)
        basis = hilbert_basis(cone, lattice=L, budget=hb_budget)
        vertex_gaps = []
        for h in basis:
            if not member(h, gens, state_budget=member_budget):
                vertex_gaps.append((S, h))
        gaps.extend(vertex_gaps)
        if vertex_gaps and stop_at_first_vertex:
            return False, gaps
    return not gaps, gaps


def polytope_lattice_points(D, level):
    """Lattice points of level * P(D), enumerated exactly over the box."""
    n = D.n
    verts = [tuple(level * x for x in v) for v in D.vertices()]
    points = []
    for x in product(range(level + 1), repeat=n):
        if in_hull(x, verts):
            points.append(x)
    return points


def is_normal_bounded(D, level):
    """Check the normality equation (L P) ∩ Z^n = {sums of L points of P}
    for every L = 2..level.  True certifies normality only up to the given
    level; a False is a definite failure."""
    if level < 2:
        raise InputError("level must be at least 2")
    base_points = [vertex_of(S, D.n) for S in D.sorted_feasible()]
    for ell in range(2, level + 1):
        sums = set()
        for combo in combinations_with_replacement(base_points, ell):
            sums.add(tuple(sum(xs) for xs in zip(*combo)))
        actual = set(polytope_lattice_points(D, ell))
        if sums != actual:
            return False
    return True
