"""Exact sparse Laurent polynomials, univariate polynomials, and truncated
one-parameter series.

Conventions used throughout the package:

* ``LaurentPoly`` is a sparse map from integer exponent vectors to nonzero
  rational coefficients in the character ring Z[T_1^{±1}, ..., T_k^{±1}].
* ``TruncSeries`` is an exact univariate series in a formal parameter s,
  with a finite pole part.  It records the largest order up to which its
  coefficients are valid, so truncation errors surface as exceptions
  instead of wrong numbers.
* ``exp_substitute`` realizes T^m -> exp(<c, m> s) for a one-parameter
  subgroup direction c, and ``inv_one_minus_exp`` is the Euler factor
  1/(1 - e^{-a s}), the Todd-type series with a simple pole.
"""

from math import factorial

from ._rat import QQ, rat_str
from .errors import DegreeBoundError, GenericDirectionError, InputError
from .linalg import dot, unimodular_to_e1


class LaurentPoly:
    """Sparse exact Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exponents, coeff=1):
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff})

    @classmethod
    def variable(cls, nvars, i, power=1):
        """T_i^power with 1-based index i."""
        e = [0] * nvars
        e[i - 1] = power
        return cls(nvars, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.nvars != other.nvars:
            raise InputError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v == 0:
                terms.pop(m, None)
            else:
                terms[m] = v
        out = LaurentPoly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly(self.nvars)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = terms.get(m, 0) + c1 * c2
                if v == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = v
        out = LaurentPoly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def scale(self, c):
        if c == 0:
            return LaurentPoly.zero(self.nvars)
        out = LaurentPoly(self.nvars)
        out.terms = {m: c * v for m, v in self.terms.items()}
        return out

    def substitute_monomials(self, images):
        """Substitute T_i -> T^{images[i]}; images is a list of ``nvars``
        integer exponent vectors (the new variable count is their length)."""
        if len(images) != self.nvars:
            raise InputError("one image vector per variable required")
        new_k = len(images[0]) if images else 0
        terms = {}
        for m, c in self.terms.items():
            e = [0] * new_k
            for i, power in enumerate(m):
                if power:
                    for j, g in enumerate(images[i]):
                        e[j] += power * g
            e = tuple(e)
            v = terms.get(e, 0) + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = v
        out = LaurentPoly(new_k)
        out.terms = terms
        return out

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.sorted_terms())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"T{i+1}^{e}" for i, e in enumerate(m) if e)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def divisible_by(f, v):
    """Is f divisible by (1 - T^v) for a primitive nonzero integer v?

    Restrict to the subtorus T^v = 1: exponents are grouped by cosets of
    Z v and divisibility holds iff every coset's coefficient sum vanishes.
    """
    if all(x == 0 for x in v):
        raise InputError("direction must be nonzero")
    U = unimodular_to_e1(list(v))
    sums = {}
    for m, c in f.terms.items():
        key = tuple(dot(U[i], m) for i in range(1, len(v)))
        sums[key] = sums.get(key, 0) + c
    return all(s == 0 for s in sums.values())


def exact_div_one_minus(f, v):
    """Exact quotient f / (1 - T^v); raises InputError if not divisible.

    Within each coset of Z v the terms form a univariate polynomial in
    x = T^v, and division by (1 - x) is synthetic division there.
    """
    U = unimodular_to_e1(list(v))
    cosets = {}
    for m, c in f.terms.items():
        key = tuple(dot(U[i], m) for i in range(1, len(v)))
        j = dot(U[0], m)
        cosets.setdefault(key, []).append((j, m, c))
    terms = {}
    for entries in cosets.values():
        entries.sort()
        jmin, base, _ = entries[0]
        coeffs = {j: c for j, _, c in entries}
        jmax = entries[-1][0]
        run = 0
        for j in range(jmin, jmax + 1):
            run += coeffs.get(j, 0)
            if j == jmax:
                if run != 0:
                    raise InputError("polynomial not divisible by 1 - T^v")
                break
            if run != 0:
                # f = (1 - x) q forces q_j = f_{jmin} + ... + f_j
                m = tuple(b + (j - jmin) * x for b, x in zip(base, v))
                terms[m] = run
    out = LaurentPoly(f.nvars)
    out.terms = {m: c for m, c in terms.items() if c != 0}
    return out


class UniPoly:
    """Dense exact univariate polynomial, constant coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def variable(cls):
        return cls((0, 1))

    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([other * c for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*v^{i}" if i else f"{c}"
                          for i, c in enumerate(self.coeffs) if c != 0)

    def to_json(self):
        return {str(i): rat_str(c) for i, c in enumerate(self.coeffs) if c != 0}


def interpolate(nodes, bound=None):
    """Unique polynomial of degree <= bound through the first bound+1
    nodes; the remaining nodes are guard nodes and must be matched exactly.

    nodes: list of (x, y) pairs with distinct x.  bound defaults to
    len(nodes) - 2, i.e. one guard node.
    """
    xs = [QQ(x) for x, _ in nodes]
    ys = [QQ(y) for _, y in nodes]
    if len(set(xs)) != len(xs):
        raise InputError("interpolation nodes must be distinct")
    if bound is None:
        bound = len(nodes) - 2
    if bound < 0 or bound + 1 > len(nodes):
        raise InputError("need at least bound+1 nodes")
    k = bound + 1
    poly = UniPoly.zero()
    for i in range(k):
        num = UniPoly((1,))
        denom = QQ(1)
        for j in range(k):
            if j != i:
                num = num * UniPoly((-xs[j], 1))
                denom = denom * (xs[i] - xs[j])
        poly = poly + num * (ys[i] / denom)
    for i in range(k, len(nodes)):
        if poly(xs[i]) != ys[i]:
            raise DegreeBoundError(
                f"guard node {nodes[i]} off the degree-{bound} interpolant")
    return poly


class TruncSeries:
    """Exact truncated series sum_{k=lo}^{hi} coeffs[k-lo] s^k.

    ``hi`` is the validity order: coefficients beyond it are unknown and
    asking for them raises.  Coefficients below ``lo`` are exactly zero.
    """

    __slots__ = ("lo", "hi", "coeffs")

    def __init__(self, lo, hi, coeffs):
        assert len(coeffs) == hi - lo + 1
        self.lo = lo
        self.hi = hi
        self.coeffs = coeffs

    @classmethod
    def constant(cls, value, order):
        return cls(0, order, [value] + [0] * order)

    @classmethod
    def zero(cls, order):
        return cls(0, order, [0] * (order + 1))

    def coeff(self, k):
        if k > self.hi:
            raise DegreeBoundError(
                f"series coefficient s^{k} beyond truncation order {self.hi}")
        if k < self.lo:
            return 0
        return self.coeffs[k - self.lo]

    def pole_order(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return max(0, -(self.lo + i))
        return 0

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.hi)
        lo = min(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for src in (self, other):
            for k in range(max(src.lo, lo), hi + 1):
                if src.lo <= k <= src.hi:
                    out[k - lo] += src.coeffs[k - src.lo]
        return TruncSeries(lo, hi, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.lo, self.hi, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.hi)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        lo = self.lo + other.lo
        hi = min(self.hi + other.lo, other.hi + self.lo)
        if hi < lo:
            raise DegreeBoundError("series product has no valid coefficients")
        out = [0] * (hi - lo + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            ka = self.lo + i
            jmax = min(other.hi, hi - ka)
            for j in range(other.lo, jmax + 1):
                b = other.coeffs[j - other.lo]
                if b != 0:
                    out[ka + j - lo] += a * b
        return TruncSeries(lo, hi, out)

    __rmul__ = __mul__

    def scale(self, c):
        return TruncSeries(self.lo, self.hi, [c * x for x in self.coeffs])

    def inverse(self):
        """Multiplicative inverse about the leading nonzero coefficient."""
        val = None
        for i, c in enumerate(self.coeffs):
            if c != 0:
                val = self.lo + i
                break
        if val is None:
            raise ZeroDivisionError("inverting the zero series")
        u = self.coeffs[val - self.lo:]
        n = len(u)
        inv = [QQ(0)] * n
        inv[0] = QQ(1) / u[0]
        for k in range(1, n):
            acc = QQ(0)
            for j in range(1, k + 1):
                if u[j] != 0:
                    acc += u[j] * inv[k - j]
            inv[k] = -acc / u[0]
        lo = -val
        hi = self.hi - 2 * val
        return TruncSeries(lo, hi, inv[:hi - lo + 1])

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        result = TruncSeries.constant(1, self.hi)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        lo = min(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, hi + 1))

    def __repr__(self):
        bits = [f"{c}*s^{self.lo + i}"
                for i, c in enumerate(self.coeffs) if c != 0]
        return (" + ".join(bits) or "0") + f" + O(s^{self.hi + 1})"


def exp_series(a, order):
    """Series of exp(a s) to the given order."""
    return TruncSeries(0, order, [QQ(a) ** k / factorial(k) for k in range(order + 1)])


def exp_substitute(f, c, order):
    """Evaluate a Laurent polynomial along T^m -> exp(<c, m> s).

    Terms with equal pairing are grouped first so each distinct exponential
    is expanded once.
    """
    if len(c) != f.nvars:
        raise InputError("direction length must match the variable count")
    groups = {}
    for m, coeff in f.terms.items():
        a = dot(c, m)
        groups[a] = groups.get(a, 0) + coeff
    out = [0] * (order + 1)
    for a, coeff in groups.items():
        if coeff == 0:
            continue
        if a == 0:
            out[0] += coeff
            continue
        pw = 1
        for k in range(order + 1):
            out[k] += coeff * QQ(pw, factorial(k))
            pw *= a
    return TruncSeries(0, order, out)


def inv_one_minus_exp(a, order):
    """Series of 1/(1 - e^{-a s}) valid to the given order (simple pole).

    A zero pairing value means the chosen direction is not generic for
    this character; the caller should redraw.
    """
    if a == 0:
        raise GenericDirectionError("character pairs to zero with direction")
    # 1 - e^{-as} = s * u with u a unit; compute u to order+1 and invert.
    u = [0] * (order + 2)
    for k in range(order + 2):
        # coefficient of s^k in (1 - e^{-as})/s = -(-a)^{k+1}/(k+1)!
        u[k] = -QQ((-a) ** (k + 1), factorial(k + 1))
    useries = TruncSeries(0, order + 1, u)
    inv = useries.inverse()  # valid to order+1
    return TruncSeries(-1, order, [inv.coeff(k) for k in range(0, order + 2)])
