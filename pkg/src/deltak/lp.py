"""Exact rational linear programming (phase-1 simplex).

Only feasibility problems are needed in this package: cone membership,
convex-hull membership, polytope edge certification and finding strictly
positive grading functionals.  The solver keeps a dense tableau of exact
rationals and pivots with Bland's rule, so it terminates and never
misclassifies due to rounding.
"""

from math import gcd

from ._rat import QQ, as_int
from .linalg import vec_sub


def solve_eq_nonneg(A, b):
    """Find x >= 0 with A x = b exactly, or None if infeasible.

    A is a list of m rows (length n), b a length-m vector.
    """
    m = len(A)
    if m == 0:
        return ()
    n = len(A[0])
    rows = []
    rhs = []
    for i in range(m):
        r = [QQ(x) for x in A[i]]
        v = QQ(b[i])
        if v < 0:
            r = [-x for x in r]
            v = -v
        rows.append(r)
        rhs.append(v)
    # Tableau columns: n structural + m artificial, objective = sum of artificials.
    T = [rows[i] + [QQ(1) if j == i else QQ(0) for j in range(m)] + [rhs[i]]
         for i in range(m)]
    basis = [n + i for i in range(m)]
    ncols = n + m
    # Objective row: minimize sum of artificials; reduced costs start as
    # c_j - sum over rows of column j (since each artificial has cost 1).
    z = [QQ(0)] * (ncols + 1)
    for j in range(ncols + 1):
        s = sum(T[i][j] for i in range(m))
        z[j] = (QQ(1) if n <= j < ncols else QQ(0)) - s
    while True:
        enter = next((j for j in range(ncols) if j not in basis and z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][ncols] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # Unbounded phase-1 objective cannot happen (bounded below by 0).
            raise AssertionError("phase-1 simplex unbounded")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[leave])]
        if z[enter] != 0:
            f = z[enter]
            z = [a - f * c for a, c in zip(z, T[leave])]
        basis[leave] = enter
    if -z[ncols] != 0:  # optimum of sum of artificials
        return None
    x = [QQ(0)] * n
    for i, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = T[i][ncols]
    return tuple(x)


def in_cone(point, generators):
    """Is point a nonnegative rational combination of the generators?"""
    if not generators:
        return all(x == 0 for x in point)
    A = [[g[j] for g in generators] for j in range(len(point))]
    return solve_eq_nonneg(A, list(point)) is not None


def in_hull(point, points):
    """Is point in the convex hull of the given points?"""
    if not points:
        return False
    dim = len(point)
    A = [[p[j] for p in points] for j in range(dim)]
    A.append([1] * len(points))
    return solve_eq_nonneg(A, list(point) + [1]) is not None


def segment_meets_hull(u, v, points):
    """Does conv(points) intersect the segment [u, v]?

    Solved as: exist lambda >= 0 summing to 1 and t in [0, 1] with
    sum lambda_p p = u + t (v - u).
    """
    if not points:
        return False
    dim = len(u)
    d = vec_sub(v, u)
    # columns: one lambda per point, then t, then a slack for t <= 1
    A = []
    for j in range(dim):
        A.append([p[j] for p in points] + [-d[j], 0])
    A.append([1] * len(points) + [0, 0])
    A.append([0] * len(points) + [1, 1])
    b = list(u) + [1, 1]
    return solve_eq_nonneg(A, b) is not None


def positive_functional(vectors):
    """Integer ell with <ell, v> >= 1 for every v, or None.

    Existence is equivalent to pointedness of the cone spanned by the
    vectors (0 excluded).
    """
    if not vectors:
        return None
    dim = len(vectors[0])
    # ell = p - q with p, q >= 0, one slack per inequality: V (p - q) - s = 1.
    A = []
    for i, v in enumerate(vectors):
        slack = [0] * len(vectors)
        slack[i] = -1
        A.append(list(v) + [-x for x in v] + slack)
    sol = solve_eq_nonneg(A, [1] * len(vectors))
    if sol is None:
        return None
    ell = [sol[j] - sol[dim + j] for j in range(dim)]
    denom = 1
    for x in ell:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    return tuple(as_int(x * denom) for x in ell)


def is_pointed(generators):
    """A cone is pointed iff 0 is not a nontrivial nonnegative combination
    of its (nonzero) generators."""
    gens = [g for g in generators if any(x != 0 for x in g)]
    if not gens:
        return True
    return positive_functional(gens) is not None
