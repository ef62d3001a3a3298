"""Affine semigroups: multigraded numerators via binomial Groebner bases,
and exact membership.

The generating function of the semigroup N{a_1..a_m} is
K / prod_i (1 - T^{-a_i}) where K is the numerator of the Hilbert series
of the semigroup ring, presented as k[x_1..x_m]/I with deg x_i = a_i.
The pipeline is pure lattice arithmetic on exponent vectors:

  kernel lattice of the degree map  ->  basis binomials
  -> saturation by x_1...x_m (auxiliary variable t, graded elimination)
  -> Buchberger specialized to binomials (monic differences stay monic)
  -> initial monomial ideal -> numerator by pivot recursion.

Since the Hilbert function is unchanged by passing to the initial ideal,
K is the multigraded numerator of that monomial ideal.
"""

from itertools import combinations

from .errors import InputError, ResourceBudgetExceeded
from .laurent import LaurentPoly
from .linalg import dot, int_kernel_basis, vec_sub
from .lp import in_cone, positive_functional


class AffineSemigroup:
    """Generators of an affine semigroup inside a pointed cone; a strictly
    positive grading functional is computed at construction and certifies
    pointedness."""

    __slots__ = ("ambient", "gens", "grading")

    def __init__(self, gens, ambient=None):
        gens = tuple(tuple(int(x) for x in g) for g in gens)
        if ambient is None:
            if not gens:
                raise InputError("empty semigroup needs an explicit ambient dimension")
            ambient = len(gens[0])
        for g in gens:
            if len(g) != ambient:
                raise InputError("generator dimension mismatch")
            if all(x == 0 for x in g):
                raise InputError("0 is not allowed as a semigroup generator")
        grading = positive_functional(gens) if gens else tuple([0] * ambient)
        if gens and grading is None:
            raise InputError(
                "no positive grading exists; generators do not span a pointed cone")
        self.ambient = ambient
        self.gens = gens
        self.grading = grading


# ---------------------------------------------------------------------------
# binomials: monic differences x^u - x^v stored as (u, v) with u > v


def _order_key(u):
    """Graded elimination order: the auxiliary variable (slot 0) dominates,
    then total degree of the rest, then lex."""
    return (u[0], sum(u[1:]), u)


def _make_binomial(u, v):
    if u == v:
        return None
    return (u, v) if _order_key(u) > _order_key(v) else (v, u)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce(b, basis):
    """Top-reduction of a binomial to normal form against the basis."""
    u, v = b
    changed = True
    while changed:
        changed = False
        for (a, c) in basis:
            if _divides(a, u):
                u = tuple(x - y + z for x, y, z in zip(u, a, c))
                if u == v:
                    return None
                if _order_key(u) < _order_key(v):
                    u, v = v, u
                changed = True
                break
    return (u, v)


def buchberger_binomial(binomials, max_pairs, context=""):
    """Groebner basis of a binomial ideal under the graded elimination
    order; input and output binomials are monic differences."""
    import heapq

    G = []
    for b in binomials:
        if b is not None:
            r = _reduce(b, G)
            if r is not None:
                G.append(r)
    heap = []
    for i in range(len(G)):
        for j in range(i):
            lcm = tuple(max(x, y) for x, y in zip(G[i][0], G[j][0]))
            heapq.heappush(heap, (_order_key(lcm), i, j))
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        processed += 1
        if processed > max_pairs:
            raise ResourceBudgetExceeded(
                f"Groebner pair budget exceeded{' at ' + context if context else ''}")
        u1, v1 = G[i]
        u2, v2 = G[j]
        lcm = tuple(max(x, y) for x, y in zip(u1, u2))
        if all(x + y == z for x, y, z in zip(u1, u2, lcm)):
            continue  # coprime leading monomials
        s = _make_binomial(tuple(a - b + c for a, b, c in zip(lcm, u1, v1)),
                           tuple(a - b + c for a, b, c in zip(lcm, u2, v2)))
        if s is None:
            continue
        r = _reduce(s, G)
        if r is None:
            continue
        G.append(r)
        new = len(G) - 1
        for k in range(new):
            lcm = tuple(max(x, y) for x, y in zip(G[new][0], G[k][0]))
            heapq.heappush(heap, (_order_key(lcm), new, k))
    minimal = []
    for i, (u, v) in enumerate(G):
        dominated = False
        for k, (u2, _) in enumerate(G):
            if k != i and _divides(u2, u) and (u2 != u or k < i):
                dominated = True
                break
        if not dominated:
            minimal.append((u, v))
    return minimal


def toric_groebner(gens, max_pairs=200000, context=""):
    """Groebner basis (graded lex on the x-block) of the toric ideal of the
    generators, via lattice-basis binomials saturated with an auxiliary
    variable t and graded elimination of t."""
    m = len(gens)
    kernel = int_kernel_basis(list(gens))
    if not kernel:
        return []
    binomials = []
    for z in kernel:
        up = tuple([0] + [max(x, 0) for x in z])
        dn = tuple([0] + [max(-x, 0) for x in z])
        binomials.append(_make_binomial(up, dn))
    # t * x_1...x_m - 1
    binomials.append(_make_binomial(tuple([1] + [1] * m), tuple([0] * (m + 1))))
    G = buchberger_binomial(binomials, max_pairs, context=context)
    out = []
    for u, v in G:
        if u[0] == 0:
            assert v[0] == 0
            out.append((u[1:], v[1:]))
    return out


def _minimalize_monomials(gens):
    out = []
    for g in sorted(gens, key=lambda u: (sum(u), u)):
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def kpoly_of_monomial_ideal(gens, degrees, nvars):
    """Multigraded numerator of k[x]/M for a monomial ideal M, as a Laurent
    polynomial in T with x^u contributing T^{-deg(u)}.

    Pivot recursion: splitting along a variable x_j gives
    K(M) = K(M + (x_j)) + T^{-a_j} K(M : x_j).
    """
    memo = {}

    def tdeg(u):
        e = [0] * nvars
        for i, p in enumerate(u):
            if p:
                for j in range(nvars):
                    e[j] -= p * degrees[i][j]
        return tuple(e)

    def rec(gens):
        key = frozenset(gens)
        got = memo.get(key)
        if got is not None:
            return got
        if not gens:
            out = LaurentPoly.one(nvars)
            memo[key] = out
            return out
        pairwise_coprime = all(
            all(x == 0 or y == 0 for x, y in zip(a, b))
            for a, b in combinations(gens, 2))
        if pairwise_coprime:
            out = LaurentPoly.one(nvars)
            for g in gens:
                out = out * (LaurentPoly.one(nvars) - LaurentPoly.monomial(tdeg(g)))
            memo[key] = out
            return out
        m = len(gens[0])
        counts = [0] * m
        for g in gens:
            for j, x in enumerate(g):
                if x:
                    counts[j] += 1
        j = max(range(m), key=lambda k: counts[k])
        pivot = tuple(1 if k == j else 0 for k in range(m))
        plus = _minimalize_monomials(list(gens) + [pivot])
        colon = _minimalize_monomials(
            [tuple(x - min(x, p) for x, p in zip(g, pivot)) for g in gens])
        shift = LaurentPoly.monomial(tdeg(pivot))
        out = rec(tuple(plus)) + shift * rec(tuple(colon))
        memo[key] = out
        return out

    return rec(tuple(tuple(g) for g in gens))


def semigroup_hilbert(gens, max_generators=16, max_pairs=200000, context=""):
    """Hilbert series of the affine semigroup N{gens}: a single piece
    K / prod(1 - T^{-a}) over the generators as given."""
    from .cones import HilbertSeriesRep

    sg = AffineSemigroup(gens)
    if len(sg.gens) > max_generators:
        raise ResourceBudgetExceeded(
            f"semigroup has {len(sg.gens)} generators, budget {max_generators}")
    nvars = sg.ambient
    if not sg.gens:
        return HilbertSeriesRep(nvars, [(LaurentPoly.one(nvars), ())])
    gb = toric_groebner(sg.gens, max_pairs=max_pairs, context=context)
    leads = _minimalize_monomials([u for u, _ in gb])
    K = kpoly_of_monomial_ideal(leads, sg.gens, nvars)
    return HilbertSeriesRep(nvars, [(K, sg.gens)])


def member(x, gens, state_budget=500000):
    """Exact membership of x in the semigroup generated by gens.

    Depth-first search down the grading with memoization; points outside
    the rational cone of the generators are pruned immediately.
    """
    sg = AffineSemigroup(gens)
    x = tuple(int(v) for v in x)
    ell = sg.grading
    memo = {}

    def rec(y):
        if all(v == 0 for v in y):
            return True
        got = memo.get(y)
        if got is not None:
            return got
        if len(memo) > state_budget:
            raise ResourceBudgetExceeded("membership state budget exceeded")
        memo[y] = False
        level = dot(ell, y)
        if level < 0 or not in_cone(y, sg.gens):
            return False
        for a in sg.gens:
            if dot(ell, a) <= level and rec(vec_sub(y, a)):
                memo[y] = True
                return True
        return False

    return rec(x)


def minimal_generators(vectors):
    """Minimal generating set of the semigroup generated by the vectors:
    drop every generator expressible from the others."""
    vecs = []
    for v in vectors:
        v = tuple(int(x) for x in v)
        if any(x != 0 for x in v) and v not in vecs:
            vecs.append(v)
    if not vecs:
        return []
    ell = positive_functional(vecs)
    if ell is None:
        raise InputError("generators do not span a pointed cone")
    vecs.sort(key=lambda v: (dot(ell, v), v))
    out = []
    for v in vecs:
        others = [w for w in vecs if w != v]
        if not others or not member(v, others):
            out.append(v)
    return out


def semigroup_counts(gens, bound):
    """Brute-force enumeration of semigroup elements with grading <= bound
    (oracle for the Hilbert-series pipeline)."""
    sg = AffineSemigroup(gens)
    ell = sg.grading
    frontier = {tuple([0] * sg.ambient)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for y in frontier:
            for a in sg.gens:
                z = tuple(p + q for p, q in zip(y, a))
                if z not in seen and dot(ell, z) <= bound:
                    nxt.add(z)
                    seen.add(z)
        frontier = nxt
    return seen
