"""Localized classes on the permutohedral side and the Grassmannian side.

A ``LocalizedClass`` assigns to each fixed point a Laurent numerator and a
list of denominator characters, the value being num / prod(1 - T^{-a}).
Classes built from non-saturated vertex semigroups additionally carry
``euler_included=True``: their stored data is the full restriction divided
by the chart Euler factor prod_{v in chart}(1 - T^{-v}), which is the exact
shape the fixed-point sums consume (the chart factors cancel symbolically
and never get expanded).

Sign conventions, pinned by the calibration identities chi(O) = 1 and
chi([P(D)]) = #feasible:

* a nef-polytope class restricts at w to T^{-vertex_w},
* tangent characters are the dual basis m_{w,k}, Euler factor
  prod_k (1 - T^{-m_{w,k}}),
* the anticanonical class restricts to t_{w(1)} in Chow, i.e. minus the
  cross-polytope vertex paired with t.
"""

import warnings

from ._rat import QQ
from .dmat import minimal_feasible, signed_set_of, signed_vertex_of, vertex_of
from .errors import InputError
from .fan import chart_characters, enumerate_W, ogr_points
from .laurent import LaurentPoly, TruncSeries, exact_div_one_minus


class LocalizedClass:
    __slots__ = ("side", "n", "entries", "euler_included")

    def __init__(self, side, n, entries, euler_included=False):
        if side not in ("X", "OGr"):
            raise InputError("side must be 'X' or 'OGr'")
        self.side = side
        self.n = n
        self.entries = {pt: (num, tuple(tuple(d) for d in dens))
                        for pt, (num, dens) in entries.items()
                        if not num.is_zero()}
        self.euler_included = euler_included

    def numerator(self, pt):
        entry = self.entries.get(pt)
        return entry[0] if entry else LaurentPoly.zero(self.n)

    def denominators(self, pt):
        entry = self.entries.get(pt)
        return entry[1] if entry else ()

    def restriction(self, pt):
        """The restriction as a Laurent polynomial; requires an empty
        denominator list (use restriction_poly to clear one exactly)."""
        entry = self.entries.get(pt)
        if entry is None:
            return LaurentPoly.zero(self.n)
        num, dens = entry
        if dens or self.euler_included:
            raise InputError("restriction is not stored in polynomial form")
        return num

    def restriction_poly(self, pt):
        """Materialize the restriction, clearing denominators by exact
        division.  For euler_included classes this multiplies the chart
        Euler factor back in first; failure to divide means the data does
        not define a class on the moment graph."""
        entry = self.entries.get(pt)
        if entry is None:
            return LaurentPoly.zero(self.n)
        num, dens = entry
        if self.euler_included:
            if self.side != "OGr":
                raise InputError("euler_included classes live on the OGr side")
            for v in chart_characters(pt, self.n):
                num = num * (LaurentPoly.one(self.n)
                             - LaurentPoly.monomial(tuple(-x for x in v)))
        for a in dens:
            num = exact_div_one_minus(num, tuple(-x for x in a))
        return num

    def as_polynomial_class(self):
        return LocalizedClass(self.side, self.n,
                              {pt: (self.restriction_poly(pt), ())
                               for pt in self.entries})

    def __mul__(self, other):
        if not isinstance(other, LocalizedClass):
            return self.scale(other)
        if (self.side, self.n) != (other.side, other.n):
            raise InputError("classes live on different spaces")
        if self.euler_included and other.euler_included:
            raise InputError("at most one factor may carry the Euler factor")
        entries = {}
        for pt in self.entries.keys() & other.entries.keys():
            n1, d1 = self.entries[pt]
            n2, d2 = other.entries[pt]
            entries[pt] = (n1 * n2, d1 + d2)
        return LocalizedClass(self.side, self.n, entries,
                              self.euler_included or other.euler_included)

    def scale(self, c):
        return LocalizedClass(
            self.side, self.n,
            {pt: (num.scale(c), dens) for pt, (num, dens) in self.entries.items()},
            self.euler_included)

    def __eq__(self, other):
        if not isinstance(other, LocalizedClass):
            return NotImplemented
        return (self.side, self.n, self.euler_included) == \
            (other.side, other.n, other.euler_included) and self.entries == other.entries

    def __repr__(self):
        return (f"LocalizedClass({self.side}, n={self.n}, "
                f"{len(self.entries)} nonzero points)")


def constant_class(side, n, value=1):
    one = LaurentPoly.constant(n, value)
    points = list(enumerate_W(n)) if side == "X" else ogr_points(n)
    return LocalizedClass(side, n, {pt: (one, ()) for pt in points})


# ---------------------------------------------------------------------------
# permutohedral-side constructors


def _bw_table(D):
    return {w: minimal_feasible(D, w) for w in enumerate_W(D.n)}


def k_polytope(D, doubled=False):
    """Nef line-bundle class of the base polytope (or its doubled
    translate): restriction T^{-vertex} at the w-minimal vertex."""
    n = D.n
    entries = {}
    for w, S in _bw_table(D).items():
        if doubled:
            expo = tuple(-x for x in signed_vertex_of(S, n))
        else:
            expo = tuple(-x for x in vertex_of(S, n))
        entries[w] = (LaurentPoly.monomial(expo), ())
    return LocalizedClass("X", n, entries)


def _wedge_coefficient(signed_elems, p, n):
    """Coefficient of v^p in (1 + v) * prod_{i in B} (1 + T_i v)."""
    elems = [LaurentPoly.monomial(_signed_exponent(i, n)) for i in signed_elems]
    # elementary symmetric polynomials of the T_i
    e = [LaurentPoly.one(n)] + [LaurentPoly.zero(n)] * len(elems)
    for t in elems:
        for k in range(len(elems), 0, -1):
            e[k] = e[k] + t * e[k - 1]
    def pick(k):
        return e[k] if 0 <= k <= len(elems) else LaurentPoly.zero(n)
    return pick(p) + pick(p - 1)


def _signed_exponent(i, n):
    v = [0] * n
    v[abs(i) - 1] = 1 if i > 0 else -1
    return tuple(v)


def k_wedge_qdual(D, p):
    """p-th wedge power of the dual quotient class."""
    n = D.n
    if not 0 <= p <= n + 1:
        warnings.warn(f"wedge exponent {p} outside 0..{n+1}; class is zero")
        return LocalizedClass("X", n, {})
    entries = {}
    for w, S in _bw_table(D).items():
        B = signed_set_of(S, n)
        entries[w] = (_wedge_coefficient(B, p, n), ())
    return LocalizedClass("X", n, entries)


def w_act(cls, w):
    """Group action on a permutohedral-side class: relabel the fixed points
    by w and permute the variables, T_j -> T_{w(j)} with T_{-i} = T_i^{-1}."""
    if cls.side != "X":
        raise InputError("the W-action is implemented on the X side")
    n = cls.n
    winv = w.inverse()
    images = [_signed_exponent(w.images[j], n) for j in range(n)]
    entries = {}
    for wp in enumerate_W(n):
        src = winv.compose(wp)
        entry = cls.entries.get(src)
        if entry is None:
            continue
        num, dens = entry
        new_num = num.substitute_monomials(images)
        new_dens = tuple(
            tuple(sum(d[j] * images[j][i] for j in range(n)) for i in range(n))
            for d in dens)
        entries[wp] = (new_num, new_dens)
    return LocalizedClass("X", n, entries, cls.euler_included)


# ---------------------------------------------------------------------------
# Grassmannian-side constructors


def ogr_o2(n):
    """Square of the spinor bundle: restriction T^{-e_B}."""
    entries = {}
    for S in ogr_points(n):
        expo = tuple(-x for x in signed_vertex_of(S, n))
        entries[S] = (LaurentPoly.monomial(expo), ())
    return LocalizedClass("OGr", n, entries)


def ogr_wedge_qdual(n, p):
    """p-th wedge power of the dual quotient on the Grassmannian side."""
    if not 0 <= p <= n + 1:
        warnings.warn(f"wedge exponent {p} outside 0..{n+1}; class is zero")
        return LocalizedClass("OGr", n, {})
    entries = {}
    for S in ogr_points(n):
        B = signed_set_of(S, n)
        entries[S] = (_wedge_coefficient(B, p, n), ())
    return LocalizedClass("OGr", n, entries)


def ogr_y_class(D):
    """The tangent-cone Hilbert-series class: at a feasible vertex the cone
    series is cleared against the full chart product, leaving a Laurent
    polynomial; zero elsewhere."""
    from .cones import cone_hilbert, tangent_cone

    n = D.n
    entries = {}
    for S in D.sorted_feasible():
        chart = chart_characters(S, n)
        chart_set = set(chart)
        rep = cone_hilbert(tangent_cone(D, S))
        total = LaurentPoly.zero(n)
        for num, rays in rep.pieces:
            extra = [v for v in chart_set if v not in set(rays)]
            if len(extra) + len(rays) != len(chart) or not set(rays) <= chart_set:
                raise InputError(
                    f"cone ray outside the chart at vertex {sorted(S)}; "
                    "input is not a delta-matroid")
            piece = num
            for v in extra:
                piece = piece * (LaurentPoly.one(n)
                                 - LaurentPoly.monomial(tuple(-x for x in v)))
            total = total + piece
        entries[S] = (total, ())
    return LocalizedClass("OGr", n, entries)


def ogr_orbit_class(D, max_pairs=200000):
    """Structure-sheaf style class of the vertex semigroups: at a feasible
    vertex, the multigraded numerator of the semigroup generated by the
    lattice points of P(D) - vertex, over those generators as denominators.

    Stored with euler_included=True: the chart Euler factors are already
    cancelled against the clearing product, so fixed-point sums use the
    data as-is.
    """
    from .toric import minimal_generators, semigroup_hilbert

    n = D.n
    verts = {S: vertex_of(S, n) for S in D.feasible}
    entries = {}
    for S in D.sorted_feasible():
        base = verts[S]
        diffs = [tuple(a - b for a, b in zip(v, base))
                 for S2, v in sorted(verts.items(), key=lambda kv: sorted(kv[0]))
                 if S2 != S]
        gens = minimal_generators(diffs)
        if not gens:
            entries[S] = (LaurentPoly.one(n), ())
            continue
        rep = semigroup_hilbert(gens, max_generators=len(gens),
                                max_pairs=max_pairs, context=f"vertex {sorted(S)}")
        (num, dens), = rep.pieces
        entries[S] = (num, dens)
    return LocalizedClass("OGr", n, entries, euler_included=True)


# ---------------------------------------------------------------------------
# Chow-side evaluators


class ChowExpr:
    """Expression tree over the Chow primitives; evaluation produces an
    exact one-parameter series at a fixed point."""

    def series(self, ctx, w):
        raise NotImplementedError

    def __add__(self, other):
        return ChowSum((self, _as_expr(other)))

    __radd__ = __add__

    def __mul__(self, other):
        return ChowProd((self, _as_expr(other)))

    __rmul__ = __mul__


def _as_expr(x):
    return x if isinstance(x, ChowExpr) else ChowConst(x)


class ChowConst(ChowExpr):
    def __init__(self, value):
        self.value = QQ(value)

    def series(self, ctx, w):
        return TruncSeries.constant(self.value, ctx.order)


class ChowSum(ChowExpr):
    def __init__(self, parts):
        self.parts = tuple(_as_expr(p) for p in parts)

    def series(self, ctx, w):
        total = TruncSeries.zero(ctx.order)
        for p in self.parts:
            total = total + p.series(ctx, w)
        return total


class ChowProd(ChowExpr):
    def __init__(self, parts):
        self.parts = tuple(_as_expr(p) for p in parts)

    def series(self, ctx, w):
        total = TruncSeries.constant(1, ctx.order)
        for p in self.parts:
            total = total * p.series(ctx, w)
        return total


class ChowGamma(ChowExpr):
    """Anticanonical divisor: t_{w(1)} at the fixed point of w."""

    def series(self, ctx, w):
        a = ctx.t_value(w.images[0])
        coeffs = [0] * (ctx.order + 1)
        if ctx.order >= 1:
            coeffs[1] = a
        return TruncSeries(0, ctx.order, coeffs)


class ChowGammaGeom(ChowExpr):
    """1 + gamma + ... + gamma^n, the finite expansion of 1/(1 - gamma)."""

    def __init__(self, n):
        self.n = n

    def series(self, ctx, w):
        a = ctx.t_value(w.images[0])
        coeffs = []
        pw = QQ(1)
        for k in range(ctx.order + 1):
            coeffs.append(pw if k <= self.n else QQ(0))
            pw *= a
        return TruncSeries(0, ctx.order, coeffs)


class ChowChern(ChowExpr):
    """Chern polynomial of a tautological bundle at parameter v0.

    bundle "I": roots {t_i : i in B_w(D)}.  bundle "Q": roots are the
    complementary {t_j} plus one zero root.  dual negates the roots.
    """

    def __init__(self, D, v0, bundle="I", dual=False):
        if bundle not in ("I", "Q"):
            raise InputError("bundle must be 'I' or 'Q'")
        self.D = D
        self.v0 = QQ(v0)
        self.bundle = bundle
        self.dual = dual

    def roots(self, ctx, w):
        S = ctx.bw(self.D, w)
        B = signed_set_of(S, self.D.n)
        if self.bundle == "I":
            elems = B
        else:
            elems = tuple(-i for i in B)
        sign = -1 if self.dual else 1
        return [sign * ctx.t_value(i) for i in elems]

    def series(self, ctx, w):
        total = TruncSeries.constant(1, ctx.order)
        for r in self.roots(ctx, w):
            a = self.v0 * r
            coeffs = [QQ(1)] + [0] * ctx.order
            if ctx.order >= 1:
                coeffs[1] = a
            total = total * TruncSeries(0, ctx.order, coeffs)
        return total


class ChowPsi(ChowExpr):
    """Image of a permutohedral K-class under T_i -> (1+t_i)/(1-t_i)."""

    def __init__(self, kclass):
        if kclass.side != "X":
            raise InputError("psi applies to permutohedral-side classes")
        self.kclass = kclass

    def series(self, ctx, w):
        return psi_eval(self.kclass, w, ctx)


def psi_eval(kclass, w, ctx):
    entry = kclass.entries.get(w)
    if entry is None:
        return TruncSeries.zero(ctx.order)
    num, dens = entry
    if dens or kclass.euler_included:
        raise InputError("psi needs polynomial restrictions")
    total = TruncSeries.zero(ctx.order)
    for m, coeff in num.terms.items():
        term = TruncSeries.constant(coeff, ctx.order)
        for i, e in enumerate(m):
            if e:
                term = term * ctx.psi_power(i + 1, e)
        total = total + term
    return total
