"""Fixed-point localization sums, evaluated exactly along one-parameter
subgroups.

An Euler characteristic is a finite sum over fixed points of
num / prod(1 - T^{-a}); substituting T^m -> exp(<c, m> s) for a generic
integer direction c turns every term into a truncated Laurent series in s
with a finite pole.  Strictly negative orders must cancel across the sum
(this is asserted, not assumed), and the value at T = 1 is the s^0
coefficient.  Chow degrees work the same way with linear denominators:
the degree-n coefficient survives division by prod <m_{w,k}, c> and all
lower orders must cancel.

Directions are drawn from a seeded stream of distinct odd integers and
redrawn (at most 16 times) whenever any relevant character pairs to zero,
so every reported number is reproducible from (input, seed).
"""

import random
from itertools import islice

from ._rat import QQ, as_int, is_integral
from .classes import (ChowChern, ChowGammaGeom, ChowPsi, k_polytope,
                      k_wedge_qdual, ogr_o2, ogr_wedge_qdual, ogr_y_class,
                      ogr_orbit_class)
from .dmat import (interlace, minimal_feasible, signed_set_of,
                   signed_vertex_of, vertex_of, w_weight_vector)
from .errors import ContractViolation, GenericDirectionError, InputError
from .fan import chart_characters, cone_data, enumerate_W
from .laurent import (TruncSeries, UniPoly, exp_series, exp_substitute,
                      interpolate, inv_one_minus_exp)
from .linalg import dot

MAX_DIRECTION_TRIES = 16


def draw_direction(n, rng):
    """Distinct random odd integers in [1, 2^20), one per coordinate."""
    seen = set()
    out = []
    while len(out) < n:
        x = rng.randrange(0, 1 << 19) * 2 + 1
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


class EvalContext:
    """A fixed direction plus memoized series building blocks."""

    def __init__(self, n, c, order=None):
        self.n = n
        self.c = tuple(c)
        self.order = n if order is None else order
        self._exp = {}
        self._todd = {}
        self._psi = {}
        self._fpd = {}
        self._euler_series = {}
        self._bw = {}

    def pair(self, vec):
        return dot(self.c, vec)

    def t_value(self, signed_index):
        """Pairing of t_{signed_index} with the direction."""
        a = self.c[abs(signed_index) - 1]
        return a if signed_index > 0 else -a

    def exp(self, a, order):
        key = (a, order)
        s = self._exp.get(key)
        if s is None:
            s = exp_series(a, order)
            self._exp[key] = s
        return s

    def todd(self, a, order):
        if a == 0:
            raise GenericDirectionError("denominator character pairs to zero")
        key = (a, order)
        s = self._todd.get(key)
        if s is None:
            s = inv_one_minus_exp(a, order)
            self._todd[key] = s
        return s

    def psi_power(self, i, e):
        """Series of ((1 + t_i)/(1 - t_i))^e with t_i -> c_i s."""
        key = (i, e)
        s = self._psi.get(key)
        if s is None:
            a = self.c[i - 1]
            lin = [QQ(1)] + ([a] + [0] * (self.order - 1) if self.order >= 1 else [])
            up = TruncSeries(0, self.order, lin)
            down = TruncSeries(0, self.order, [-x if k == 1 else x
                                               for k, x in enumerate(lin)])
            base = (up * down.inverse()) if e >= 0 else (down * up.inverse())
            s = base.power(abs(e))
            self._psi[key] = s
        return s

    def fixed_point(self, w):
        fpd = self._fpd.get(w)
        if fpd is None:
            fpd = cone_data(w)
            self._fpd[w] = fpd
        return fpd

    def euler_series_X(self, w, order):
        """prod_k 1/(1 - T^{-m_{w,k}}) as a series to the given order."""
        key = (w.images, order)
        s = self._euler_series.get(key)
        if s is None:
            # each factor is 1/(1 - T^{-m}), i.e. the pole series at +<c, m>
            s = TruncSeries.constant(1, order)
            for m in self.fixed_point(w).duals:
                s = s * self.todd(self.pair(m), order)
            self._euler_series[key] = s
        return s

    def euler_number_X(self, w):
        """prod_k <m_{w,k}, c> for Chow-side division."""
        total = 1
        for m in self.fixed_point(w).duals:
            a = self.pair(m)
            if a == 0:
                raise GenericDirectionError("tangent character pairs to zero")
            total *= a
        return total

    def bw(self, D, w):
        key = (D, w)
        S = self._bw.get(key)
        if S is None:
            S = minimal_feasible(D, w, weights=w_weight_vector(w))
            self._bw[key] = S
        return S


def _run_generic(n, seed, fn, directions=1):
    """Evaluate fn(ctx) over `directions` independally drawn generic
    directions, retrying on zero pairings, and insist the results agree."""
    rng = random.Random(f"deltak:{n}:{seed}")
    results = []
    for _ in range(directions):
        for _attempt in range(MAX_DIRECTION_TRIES):
            c = draw_direction(n, rng)
            try:
                results.append(fn(EvalContext(n, c)))
                break
            except GenericDirectionError:
                continue
        else:
            raise GenericDirectionError(
                f"no generic direction found in {MAX_DIRECTION_TRIES} tries")
    first = results[0]
    for other in results[1:]:
        if other != first:
            raise ContractViolation(
                f"direction-dependent localization output: {first} vs {other}")
    return first


def localization_sum(terms, ctx, expected_pole=None):
    """Exact sum of num / prod(1 - T^{-a}) terms at T = 1.

    Each term is (numerator, denominators) where the numerator is a
    LaurentPoly (or an already-built series supplier callable giving a
    series valid to the requested order) and denominators is a list of
    integer characters.  Strictly negative s-orders must cancel.
    """
    total = None
    for num, dens in terms:
        order = len(dens)
        if expected_pole is not None:
            order = max(order, expected_pole)
        if callable(num):
            series = num(order)
        else:
            series = exp_substitute(num, ctx.c, order)
        for a in dens:
            series = series * ctx.todd(ctx.pair(a), order)
        total = series if total is None else total + series
    if total is None:
        return QQ(0)
    for k in range(total.lo, 0):
        if total.coeff(k) != 0:
            raise ContractViolation(
                f"negative series order s^{k} fails to cancel: {total.coeff(k)}")
    return QQ(total.coeff(0))


def _class_terms_X(kclass, ctx):
    for w, (num, dens) in kclass.entries.items():
        yield num, tuple(dens) + ctx.fixed_point(w).duals


def _class_terms_ogr(kclass, ctx):
    for S, (num, dens) in kclass.entries.items():
        if kclass.euler_included:
            yield num, tuple(dens)
        else:
            yield num, tuple(dens) + chart_characters(S, kclass.n)


def euler_char_value(kclass, ctx):
    terms = _class_terms_X(kclass, ctx) if kclass.side == "X" \
        else _class_terms_ogr(kclass, ctx)
    return localization_sum(terms, ctx)


def euler_char_X(kclass, seed=0, directions=1):
    """Sheaf Euler characteristic of a permutohedral-side class."""
    if kclass.side != "X":
        raise InputError("expected a permutohedral-side class")
    val = _run_generic(kclass.n, seed, lambda ctx: euler_char_value(kclass, ctx),
                       directions)
    if not is_integral(val):
        raise ContractViolation(f"Euler characteristic {val} is not an integer")
    return as_int(val)


def euler_char_ogr(kclass, seed=0, directions=1):
    if kclass.side != "OGr":
        raise InputError("expected a Grassmannian-side class")
    val = _run_generic(kclass.n, seed, lambda ctx: euler_char_value(kclass, ctx),
                       directions)
    if not is_integral(val):
        raise ContractViolation(f"Euler characteristic {val} is not an integer")
    return as_int(val)


# ---------------------------------------------------------------------------
# Chow integration


def integrate_chow_value(expr, n, ctx):
    total = TruncSeries.zero(n)
    for w in enumerate_W(n):
        series = expr.series(ctx, w)
        total = total + series.scale(QQ(1, 1) / ctx.euler_number_X(w))
    for k in range(n):
        if total.coeff(k) != 0:
            raise ContractViolation(
                f"Chow localization order s^{k} fails to cancel: {total.coeff(k)}")
    return QQ(total.coeff(n))


def integrate_chow(expr, n, seed=0, directions=1):
    """Degree of the top graded piece of a Chow expression."""
    return _run_generic(n, seed,
                        lambda ctx: integrate_chow_value(expr, n, ctx), directions)


def euler_char_HRR(kclass, seed=0, directions=1, check=True):
    """Euler characteristic through the degree-map formula: one 2^n-th of
    the integral of psi(class) * (1 + gamma + ... + gamma^n).  With
    check=True the fixed-point formula is computed too and a mismatch is a
    hard error."""
    n = kclass.n
    expr = ChowPsi(kclass) * ChowGammaGeom(n)
    val = integrate_chow(expr, n, seed=seed, directions=directions) / (1 << n)
    if not is_integral(val):
        raise ContractViolation(f"HRR value {val} is not an integer")
    val = as_int(val)
    if check:
        direct = euler_char_X(kclass, seed=seed)
        if direct != val:
            raise ContractViolation(
                f"HRR value {val} disagrees with the fixed-point sum {direct}")
    return val


# ---------------------------------------------------------------------------
# generating polynomials


def _wedge_node_series(ctx, signed_elems, v0, order, double=False):
    """Series of (1 + v0) * prod_{i in B} (1 + v0 T_i) along the direction;
    `double` doubles every pairing (square-root variables on the
    Grassmannian side)."""
    scalar = 1 + v0
    total = TruncSeries.constant(scalar, order)
    mult = 2 if double else 1
    for i in signed_elems:
        a = mult * ctx.t_value(i)
        factor = ctx.exp(a, order).scale(v0) + TruncSeries.constant(1, order)
        total = total * factor
    return total


def _rpoly_from_nodes(n, values):
    nodes = [(QQ(v0), val) for v0, val in values]
    return interpolate(nodes, bound=n + 1)


def r_poly_y(D, seed=0, directions=1):
    """Wedge-power generating polynomial of the base-polytope class,
    computed on the permutohedral side: the v^p coefficient is the Euler
    characteristic against the p-th dual quotient wedge."""
    n = D.n

    def at_direction(ctx):
        bw = {w: ctx.bw(D, w) for w in enumerate_W(n)}
        values = []
        for v0 in range(n + 3):
            total = None
            for w, S in bw.items():
                a0 = ctx.pair(tuple(-x for x in vertex_of(S, n)))
                series = ctx.exp(a0, n) * _wedge_node_series(
                    ctx, signed_set_of(S, n), QQ(v0), n)
                series = series * ctx.euler_series_X(w, n)
                total = series if total is None else total + series
            for k in range(total.lo, 0):
                if total.coeff(k) != 0:
                    raise ContractViolation(
                        f"negative series order fails to cancel at node {v0}")
            values.append((v0, QQ(total.coeff(0))))
        return _rpoly_from_nodes(n, values)

    return _run_generic(n, seed, at_direction, directions)


def r_poly_orbit(D, seed=0, directions=1, max_pairs=200000):
    """Same generating polynomial against the vertex-semigroup class on
    the Grassmannian side, twisted by the spinor bundle.

    Everything runs in square-root coordinates: pairings of honest
    characters are doubled while the spinor twist contributes the raw
    signed-vertex pairing.
    """
    n = D.n
    orbit = ogr_orbit_class(D, max_pairs=max_pairs)

    def at_direction(ctx):
        values = []
        for v0 in range(n + 3):
            total = None
            for S, (num, dens) in orbit.entries.items():
                order = len(dens)
                a0 = ctx.pair(tuple(-x for x in signed_vertex_of(S, n)))
                series = ctx.exp(a0, order)
                series = series * _wedge_node_series(
                    ctx, signed_set_of(S, n), QQ(v0), order, double=True)
                series = series * exp_substitute(
                    num, tuple(2 * x for x in ctx.c), order)
                for a in dens:
                    series = series * ctx.todd(2 * ctx.pair(a), order)
                total = series if total is None else total + series
            for k in range(total.lo, 0):
                if total.coeff(k) != 0:
                    raise ContractViolation(
                        f"negative series order fails to cancel at node {v0}")
            values.append((v0, QQ(total.coeff(0))))
        return _rpoly_from_nodes(n, values)

    return _run_generic(n, seed, at_direction, directions)


def interlace_via_integral(D, seed=0, directions=1):
    """Interlace polynomial recovered from Chow integrals of the dual
    tautological Chern polynomial against the anticanonical geometric
    series, via node evaluation and exact interpolation."""
    n = D.n

    def at_direction(ctx):
        values = []
        for v0 in range(n + 2):
            expr = ChowChern(D, QQ(v0), "I", dual=True) * ChowGammaGeom(n)
            values.append((v0, integrate_chow_value(expr, n, ctx)))
        return interpolate([(QQ(a), b) for a, b in values], bound=n)

    return _run_generic(n, seed, at_direction, directions)


def interlace_integral_expected(D):
    """(1+v)^n Int((1-v)/(1+v)) expanded exactly: the distance generating
    sum with (1-v)^d (1+v)^(n-d) per subset."""
    n = D.n
    counts = interlace(D).coeffs
    total = UniPoly.zero()
    for d, cnt in enumerate(counts):
        if cnt:
            term = UniPoly((cnt,))
            for _ in range(d):
                term = term * UniPoly((1, -1))
            for _ in range(n - d):
                term = term * UniPoly((1, 1))
            total = total + term
    return total


def chi_transfer_check(D, seed=0):
    """Projection-formula consistency: for every wedge power p, the
    Grassmannian-side characteristic of y(D) * O(2) * wedge^p equals the
    permutohedral-side characteristic of the doubled polytope class times
    the wedge class."""
    n = D.n
    y = ogr_y_class(D)
    o2 = ogr_o2(n)
    doubled = k_polytope(D, doubled=True)
    for p in range(n + 2):
        lhs = euler_char_ogr(y * o2 * ogr_wedge_qdual(n, p), seed=seed)
        rhs = euler_char_X(doubled * k_wedge_qdual(D, p), seed=seed)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# streaming evaluation for large ground sets


def _polytope_partial(args):
    n, feasible, c, start, stop = args
    from .dmat import DeltaMatroid

    D = DeltaMatroid(n, [frozenset(S) for S in feasible], check=False)
    ctx = EvalContext(n, c)
    total = TruncSeries.zero(n)
    count = 0
    for w in islice(enumerate_W(n), start, stop):
        S = minimal_feasible(D, w, weights=w_weight_vector(w))
        a0 = ctx.pair(tuple(-x for x in vertex_of(S, n)))
        series = ctx.exp(a0, n) * ctx.euler_series_X(w, n)
        total = total + series
        count += 1
    return total.lo, total.hi, list(total.coeffs), count


def euler_char_polytope_streamed(D, seed=0, jobs=1, chunk=4096):
    """chi of the base-polytope class without materializing the class;
    fixed points are streamed in index ranges, optionally across worker
    processes, and exact partial sums are combined associatively."""
    from .fan import w_count

    n = D.n
    total_points = w_count(n)
    rng = random.Random(f"deltak:{n}:{seed}")
    feasible = tuple(tuple(sorted(S)) for S in D.sorted_feasible())
    for _attempt in range(MAX_DIRECTION_TRIES):
        c = draw_direction(n, rng)
        ranges = [(n, feasible, c, lo, min(lo + chunk, total_points))
                  for lo in range(0, total_points, chunk)]
        try:
            if jobs > 1:
                import multiprocessing as mp

                with mp.Pool(jobs) as pool:
                    parts = pool.map(_polytope_partial, ranges)
            else:
                parts = [_polytope_partial(r) for r in ranges]
        except GenericDirectionError:
            continue
        total = None
        seen = 0
        for lo, hi, coeffs, count in parts:
            series = TruncSeries(lo, hi, coeffs)
            total = series if total is None else total + series
            seen += count
        assert seen == total_points
        for k in range(total.lo, 0):
            if total.coeff(k) != 0:
                raise ContractViolation("negative series order fails to cancel")
        return as_int(QQ(total.coeff(0)))
    raise GenericDirectionError("no generic direction found")
