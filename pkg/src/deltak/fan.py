"""Signed permutations, the type B permutohedral fan, and moment graphs.

The maximal cone attached to a signed permutation w is spanned by the
nested sums u_k = e_{w(1)} + ... + e_{w(k)} (with e_{-i} = -e_i).  The dual
basis has the closed form

    m_j = e_{w(j)} - e_{w(j+1)}   (j < n),      m_n = e_{w(n)},

read with the same sign convention; these are the tangent characters used
by the localization engine.  Moment-graph edges join w to w*(i, i+1) with
label e_{w(i)} - e_{w(i+1)} and to w*(n, -n) with label e_{w(n)}, each up
to sign.

On the orthogonal Grassmannian side, fixed points are the maximal
admissible sets B; the chart of B has the n(n+1)/2 characters
{-e_i : i in B} and {-e_i - e_j : i != j in B}, and one-dimensional orbits
join B to B' exactly when e_{B'} = e_B + 2v for one of those characters v.
"""

from itertools import combinations, permutations, product

from .dmat import signed_vertex_of
from .errors import InputError
from .laurent import divisible_by
from .linalg import canonical_sign, dot


class SignedPermutation:
    """w as the tuple (w(1), ..., w(n)), barred values negative."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(abs(x) for x in images) != list(range(1, n + 1)) or 0 in images:
            raise InputError(f"not a signed permutation: {images}")
        self.images = images

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        """Image of a signed index, with w(-i) = -w(i)."""
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def compose(self, other):
        """self after other: (self*other)(i) = self(other(i))."""
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            if img > 0:
                inv[img - 1] = i
            else:
                inv[-img - 1] = -i
        return SignedPermutation(tuple(inv))

    def is_identity(self):
        return self.images == tuple(range(1, self.n + 1))

    def __eq__(self, other):
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"w{self.images}"


def identity_w(n):
    return SignedPermutation(range(1, n + 1))


def enumerate_W(n):
    """All 2^n n! signed permutations, in a fixed deterministic order."""
    if n < 1:
        raise InputError("ground size must be positive")
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(tuple(p * s for p, s in zip(perm, signs)))


def w_count(n):
    out = 1
    for k in range(1, n + 1):
        out *= 2 * k
    return out


def _signed_basis_vector(n, img):
    v = [0] * n
    v[abs(img) - 1] = 1 if img > 0 else -1
    return tuple(v)


class FixedPointData:
    """Cone generators and dual-basis tangent characters at a fixed point."""

    __slots__ = ("w", "generators", "duals")

    def __init__(self, w):
        n = w.n
        gens = []
        acc = [0] * n
        for img in w.images:
            acc[abs(img) - 1] += 1 if img > 0 else -1
            gens.append(tuple(acc))
        duals = []
        for j in range(n):
            v = list(_signed_basis_vector(n, w.images[j]))
            if j + 1 < n:
                nxt = _signed_basis_vector(n, w.images[j + 1])
                v = [a - b for a, b in zip(v, nxt)]
            duals.append(tuple(v))
        for j in range(n):
            for k in range(n):
                if dot(duals[j], gens[k]) != (1 if j == k else 0):
                    raise AssertionError(f"dual basis failure at {w}")
        self.w = w
        self.generators = tuple(gens)
        self.duals = tuple(duals)


def cone_data(w):
    return FixedPointData(w)


def apply_tau(w, k):
    """Right multiplication by the k-th simple reflection: swap positions
    k, k+1 for k < n, bar the last image for k = n (1-based)."""
    n = w.n
    imgs = list(w.images)
    if k < n:
        imgs[k - 1], imgs[k] = imgs[k], imgs[k - 1]
    else:
        imgs[n - 1] = -imgs[n - 1]
    return SignedPermutation(imgs)


def edges_at(w):
    """Moment-graph edges incident to w: (neighbor, label) pairs, label a
    primitive character defined up to sign."""
    n = w.n
    out = []
    for k in range(1, n):
        a = _signed_basis_vector(n, w.images[k - 1])
        b = _signed_basis_vector(n, w.images[k])
        out.append((apply_tau(w, k), canonical_sign([x - y for x, y in zip(a, b)])))
    out.append((apply_tau(w, n), canonical_sign(_signed_basis_vector(n, w.images[n - 1]))))
    return out


def x_edges(n):
    """All moment-graph edges of the fan on [n], each once."""
    seen = set()
    for w in enumerate_W(n):
        for w2, label in edges_at(w):
            key = frozenset((w.images, w2.images))
            if key not in seen:
                seen.add(key)
                yield w, w2, label


# ---------------------------------------------------------------------------
# orthogonal Grassmannian fixed-point data


def ogr_points(n):
    """Fixed points as subsets S = B ∩ [n], in mask order."""
    return [frozenset(i + 1 for i in range(n) if mask >> i & 1)
            for mask in range(1 << n)]


def chart_characters(S, n):
    """The chart characters of the fixed point B encoded by S."""
    sign = [1 if i in S else -1 for i in range(1, n + 1)]
    chars = []
    for i in range(n):
        v = [0] * n
        v[i] = -sign[i]
        chars.append(tuple(v))
    for i, j in combinations(range(n), 2):
        v = [0] * n
        v[i] = -sign[i]
        v[j] = -sign[j]
        chars.append(tuple(v))
    return tuple(chars)


def ogr_edges(n):
    """One-dimensional orbit closures: (S, S', label v) with
    e_{B'} = e_B + 2v, each unordered pair once."""
    pts = ogr_points(n)
    seen = set()
    for S in pts:
        eB = signed_vertex_of(S, n)
        for v in chart_characters(S, n):
            target = tuple(a + 2 * b for a, b in zip(eB, v))
            S2 = frozenset(i + 1 for i in range(n) if target[i] == 1)
            key = frozenset((S, S2))
            if key not in seen:
                seen.add(key)
                yield S, S2, v


def gkm_check(cls, return_violation=False):
    """Verify the moment-graph congruences for a localized class with
    polynomial restrictions: numerators differ by a multiple of
    1 - T^label across every edge."""
    if any(entry[1] for entry in cls.entries.values()) or cls.euler_included:
        raise InputError("gkm check requires polynomial restrictions")
    edges = x_edges(cls.n) if cls.side == "X" else ogr_edges(cls.n)
    for p, q, label in edges:
        f = cls.restriction(p) - cls.restriction(q)
        if not f.is_zero() and not divisible_by(f, label):
            if return_violation:
                return False, (p, q, label)
            return False
    if return_violation:
        return True, None
    return True
