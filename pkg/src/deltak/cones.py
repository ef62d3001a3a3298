"""Pointed rational cones: triangulation, lattice-point series, Hilbert
bases.

The lattice-point generating function of a pointed cone is assembled from
a triangulation of its extreme rays.  We use a regular triangulation from
generic lifting weights placed incrementally in the ray order (redrawn on
degeneracy), so the construction is exact and deterministic.  Overlaps
between simplicial pieces are removed by the half-open trick: a generic
reference point q inside the cone marks, for every piece, the facets
separating it from q, and excluding those facets makes the pieces
partition the cone.  Each half-open piece contributes the lattice points
of its shifted fundamental parallelepiped as numerator over the
denominators 1 - T^{-ray}.
"""

import random
from itertools import combinations

from ._rat import QQ, as_int, is_integral
from .errors import InputError, ResourceBudgetExceeded
from .laurent import LaurentPoly
from .linalg import (dot, invert_unimodular, lattice_basis, primitive,
                     rank, smith_normal_form, solve_exact, vec_sub)
from .lp import in_cone, is_pointed, positive_functional


class RationalCone:
    """Pointed cone given by integer generators (possibly redundant)."""

    __slots__ = ("ambient", "gens")

    def __init__(self, ambient, gens):
        gens = tuple(tuple(int(x) for x in g) for g in gens
                     if any(x != 0 for x in g))
        for g in gens:
            if len(g) != ambient:
                raise InputError("generator dimension mismatch")
        if not is_pointed(gens):
            raise InputError("cone is not pointed")
        self.ambient = ambient
        self.gens = gens

    def dim(self):
        return rank(self.gens) if self.gens else 0

    def __repr__(self):
        return f"RationalCone(ambient={self.ambient}, gens={list(self.gens)})"


def tangent_cone(D, S):
    """Tangent cone of the base polytope at a feasible vertex, generated by
    the differences to the other feasible vertices."""
    from .dmat import vertex_of

    S = frozenset(S)
    if S not in D.feasible:
        raise InputError(f"{sorted(S)} is not a feasible set")
    base = vertex_of(S, D.n)
    gens = [vec_sub(vertex_of(S2, D.n), base) for S2 in D.sorted_feasible()
            if S2 != S]
    return RationalCone(D.n, gens)


def extreme_rays(cone):
    """Primitive extreme rays: generators not in the cone of the others."""
    prims = []
    for g in cone.gens:
        p = primitive(g)
        if p not in prims:
            prims.append(p)
    rays = []
    for i, g in enumerate(prims):
        others = prims[:i] + prims[i + 1:]
        if not in_cone(g, others):
            rays.append(g)
    return rays


def _coords_in_span(rays):
    """Express every ray in the exact coordinates of a maximal independent
    subset, so downstream work happens in full dimension."""
    basis_idx = []
    for i in range(len(rays)):
        if rank([rays[j] for j in basis_idx + [i]]) > len(basis_idx):
            basis_idx.append(i)
    basis = [rays[i] for i in basis_idx]
    d = len(basis)
    coords = []
    for r in rays:
        sol = solve_exact([[basis[k][j] for k in range(d)]
                           for j in range(len(r))], r)
        assert sol is not None
        coords.append(tuple(sol))
    return coords, d


def regular_triangulation(coords, d, max_cells=100000):
    """Simplicial cells of the regular subdivision induced by generic
    integer lifting weights; cells are index d-tuples.

    A d-subset sigma is a cell iff the unique alpha with
    <alpha, r_i> = w_i on sigma satisfies <alpha, r_k> < w_k off sigma.
    """
    m = len(coords)
    if m < d:
        raise InputError("configuration does not span its dimension")
    rng = random.Random("deltak:lift")
    for _attempt in range(32):
        weights = [rng.randrange(1, 1 << 20) for _ in range(m)]
        cells = []
        degenerate = False
        count = 0
        for sigma in combinations(range(m), d):
            count += 1
            if count > max_cells:
                raise ResourceBudgetExceeded("triangulation cell budget hit")
            mat = [list(coords[i]) for i in sigma]
            if rank(mat) < d:
                continue
            alpha = solve_exact(mat, [weights[i] for i in sigma])
            assert alpha is not None
            ok = True
            for k in range(m):
                if k in sigma:
                    continue
                val = dot(alpha, coords[k])
                if val == weights[k]:
                    degenerate = True
                    ok = False
                    break
                if val > weights[k]:
                    ok = False
                    break
            if degenerate:
                break
            if ok:
                cells.append(sigma)
        if not degenerate:
            return cells
    raise InputError("no generic lifting found for the triangulation")


def half_open_marks(coords, cells, d):
    """Facets to exclude per cell so the cells partition the cone: facet i
    of a cell is dropped when the generic interior reference point lies
    strictly on its far side (negative i-th barycentric ray coordinate)."""
    rng = random.Random("deltak:halfopen")
    for _attempt in range(32):
        weights = [rng.randrange(1, 1 << 16) for _ in coords]
        q = tuple(sum(w * c[j] for w, c in zip(weights, coords))
                  for j in range(d))
        marks = []
        ok = True
        for sigma in cells:
            mat = [[coords[i][j] for i in sigma] for j in range(d)]
            lam = solve_exact(mat, q)
            if lam is None or any(x == 0 for x in lam):
                ok = False
                break
            marks.append(frozenset(k for k, x in enumerate(lam) if x < 0))
        if ok:
            return marks
    raise InputError("no generic interior reference point found")


def parallelepiped_points(rays, open_positions=frozenset()):
    """Lattice points of the half-open fundamental parallelepiped of
    linearly independent integer rays: ray coordinates in [0,1), shifted
    to (0,1] at the open positions."""
    d = len(rays)
    n = len(rays[0])
    Dmat, _U, V = smith_normal_form([list(r) for r in rays])
    diag = [Dmat[i][i] for i in range(d)]
    assert all(s != 0 for s in diag)
    Vinv = invert_unimodular(V)
    sat = [Vinv[i] for i in range(d)]  # basis of the saturation lattice
    index = 1
    for s in diag:
        index *= abs(s)
    reps = [()]
    for s in diag:
        reps = [r + (a,) for r in reps for a in range(abs(s))]
    mat = [[rays[k][j] for k in range(d)] for j in range(n)]
    points = set()
    for rep in reps:
        x = tuple(sum(rep[i] * sat[i][j] for i in range(d)) for j in range(n))
        lam = solve_exact(mat, x)
        assert lam is not None
        shifted = []
        for k, v in enumerate(lam):
            v = QQ(v)
            frac = v - (v.numerator // v.denominator)
            if k in open_positions and frac == 0:
                frac = QQ(1)
            shifted.append(frac)
        p = tuple(as_int(sum(shifted[k] * rays[k][j] for k in range(d)))
                  for j in range(n))
        points.add(p)
    if len(points) != index:
        raise AssertionError("parallelepiped enumeration lost points")
    return sorted(points)


class HilbertSeriesRep:
    """Sum of pieces numerator / prod over rays of (1 - T^{-ray})."""

    __slots__ = ("nvars", "pieces")

    def __init__(self, nvars, pieces):
        self.nvars = nvars
        self.pieces = [(num, tuple(tuple(r) for r in rays))
                       for num, rays in pieces]

    def __repr__(self):
        return f"HilbertSeriesRep({len(self.pieces)} pieces)"

    def counts_below(self, ell, bound):
        """Coefficient of T^{-m} for every m with <ell, m> <= bound.

        Expands each geometric factor directly; requires <ell, ray> > 0.
        """
        totals = {}
        for num, rays in self.pieces:
            for r in rays:
                if dot(ell, r) <= 0:
                    raise InputError("grading must be positive on the rays")
            for mexp, coeff in num.terms.items():
                start = tuple(-x for x in mexp)
                stack = [(start, 0)]
                while stack:
                    base, k = stack.pop()
                    if dot(ell, base) > bound:
                        continue
                    if k == len(rays):
                        totals[base] = totals.get(base, 0) + coeff
                        continue
                    stack.append((base, k + 1))
                    stack.append((tuple(a + b for a, b in zip(base, rays[k])), k))
        return {m: c for m, c in totals.items() if c != 0}


def cone_hilbert(cone):
    """Exact multigraded lattice-point series of a pointed cone, with the
    convention that the point m contributes T^{-m}."""
    n = cone.ambient
    rays = extreme_rays(cone)
    if not rays:
        return HilbertSeriesRep(n, [(LaurentPoly.one(n), ())])
    coords, d = _coords_in_span(rays)
    cells = regular_triangulation(coords, d)
    marks = half_open_marks(coords, cells, d)
    pieces = []
    for sigma, open_set in zip(cells, marks):
        piece_rays = [rays[i] for i in sigma]
        pts = parallelepiped_points(piece_rays, open_set)
        num = LaurentPoly(n, {tuple(-x for x in p): 1 for p in pts})
        pieces.append((num, piece_rays))
    return HilbertSeriesRep(n, pieces)


def brute_cone_points(cone, ell, bound):
    """All lattice points x of the cone with <ell, x> <= bound.

    Oracle-quality enumeration: a bounding box is derived from the
    level-`bound` slice (the slice of a cone is the hull of its scaled
    rays) and every candidate is tested by exact LP.  Small inputs only.
    """
    rays = extreme_rays(cone)
    dimn = cone.ambient
    if not rays:
        return {tuple([0] * dimn)}
    levels = [dot(ell, r) for r in rays]
    if any(v <= 0 for v in levels):
        raise InputError("grading must be positive on the rays")
    lo, hi = [], []
    for j in range(dimn):
        vals = [QQ(bound * r[j], lv) for r, lv in zip(rays, levels)]
        lo.append(min(0, *(v.numerator // v.denominator for v in vals)))
        hi.append(max(0, *(-((-v.numerator) // v.denominator) for v in vals)))
    out = set()

    def rec(prefix, j):
        if j == dimn:
            x = tuple(prefix)
            if dot(ell, x) <= bound and in_cone(x, rays):
                out.add(x)
            return
        for v in range(lo[j], hi[j] + 1):
            rec(prefix + [v], j + 1)

    rec([], 0)
    return out


def hilbert_basis(cone, lattice=None, budget=200000):
    """Minimal generating set of (cone ∩ L) as a monoid.

    lattice: row basis of L, defaulting to the standard lattice.  The
    candidates are the rays plus all parallelepiped points of a
    triangulation; an element is dropped iff it splits as a sum of two
    nonzero monoid elements.
    """
    rays0 = extreme_rays(cone)
    if not rays0:
        return []
    if lattice is not None:
        rays = []
        for r in rays0:
            sol = solve_exact([[lattice[k][j] for k in range(len(lattice))]
                               for j in range(cone.ambient)], r)
            if sol is None or not all(is_integral(QQ(x)) for x in sol):
                raise InputError("cone rays do not lie in the requested lattice")
            rays.append(tuple(as_int(QQ(x)) for x in sol))
        rays = [primitive(r) for r in rays]
    else:
        rays = rays0
    coords, d = _coords_in_span(rays)
    cells = regular_triangulation(coords, d)
    candidates = set(rays)
    for sigma in cells:
        piece_rays = [rays[i] for i in sigma]
        for p in parallelepiped_points(piece_rays):
            if any(x != 0 for x in p):
                candidates.add(p)
        if len(candidates) > budget:
            raise ResourceBudgetExceeded("hilbert basis candidate budget hit")
    ell = positive_functional(rays)
    assert ell is not None
    cand = sorted(candidates, key=lambda p: (dot(ell, p), p))
    basis = []
    for z in cand:
        reducible = False
        for k in cand:
            if dot(ell, k) >= dot(ell, z):
                break  # sorted by level; k = z or beyond cannot reduce
            rem = vec_sub(z, k)
            if any(x != 0 for x in rem) and in_cone(rem, rays):
                reducible = True
                break
        if not reducible:
            basis.append(z)
    if lattice is not None:
        basis = [tuple(sum(b[k] * lattice[k][j] for k in range(len(lattice)))
                       for j in range(cone.ambient)) for b in basis]
    return basis


def span_lattice(vectors):
    """Row basis of the integer span of the given vectors."""
    basis = lattice_basis(vectors)
    if not basis:
        raise InputError("lattice must have positive rank")
    return basis
