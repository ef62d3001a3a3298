"""Delta-matroids on the signed ground set and their basic invariants.

A maximal admissible subset B of {1..n, -1..-n} picks exactly one of i, -i
for every i; we store it as S = B ∩ {1..n}, so B = S ∪ {-i : i not in S}.
The family of feasible sets lives on the 0/1 cube through S -> e_S, and the
defining condition is polyhedral: every edge of conv{e_S} must be a
translate of some e_i or e_i ± e_j.

The edge test is exact: a segment between two 0/1 points u, v of the family
is an edge of the hull iff conv(other points) misses [u, v] entirely (no
three 0/1 points are collinear, so the endpoints never interfere).  The
symmetric exchange axiom is provided as a fast pre-filter for enumeration;
it is cross-validated against the edge test in the test suite rather than
trusted on its own.
"""

import json
import random
from itertools import combinations

from ._rat import QQ
from .errors import InputError, InvalidDeltaMatroid
from .laurent import UniPoly
from .linalg import det_int
from .lp import segment_meets_hull


def _normalize_family(n, family):
    out = set()
    for S in family:
        S = frozenset(S)
        if not all(isinstance(i, int) and 1 <= i <= n for i in S):
            raise InputError(f"feasible set {sorted(S)} is not a subset of [{n}]")
        out.add(S)
    if not out:
        raise InputError("feasible family must be nonempty")
    return frozenset(out)


def subset_key(S):
    return (len(S), tuple(sorted(S)))


def vertex_of(S, n):
    """0/1 indicator vector e_S."""
    return tuple(1 if i in S else 0 for i in range(1, n + 1))


def signed_vertex_of(S, n):
    """±1 vector e_B for the maximal admissible set encoded by S."""
    return tuple(1 if i in S else -1 for i in range(1, n + 1))


def signed_set_of(S, n):
    """B itself, barred elements as negative ints, sorted by absolute value."""
    return tuple(i if i in S else -i for i in range(1, n + 1))


def _allowed_direction(u, v):
    support = sum(1 for a, b in zip(u, v) if a != b)
    return support <= 2


def is_edge(points, i, j):
    """Is [points[i], points[j]] an edge of conv(points)?

    All points are distinct 0/1 vectors, hence vertices of the hull.
    """
    others = [p for k, p in enumerate(points) if k != i and k != j]
    return not segment_meets_hull(points[i], points[j], others)


def validate_family(n, family):
    """Edge criterion for a family of subsets of [n].

    Returns (True, None) or (False, (S, S')) with a violating polytope edge.
    """
    family = _normalize_family(n, family)
    sets = sorted(family, key=subset_key)
    points = [vertex_of(S, n) for S in sets]
    for i, j in combinations(range(len(sets)), 2):
        if _allowed_direction(points[i], points[j]):
            continue
        if is_edge(points, i, j):
            return False, (sets[i], sets[j])
    return True, None


def symmetric_exchange_ok(n, family):
    """Exchange axiom: for feasible S, S' and i in S △ S' there is
    j in S △ S' (possibly j = i) with S △ {i, j} feasible."""
    masks = {sum(1 << (i - 1) for i in S) for S in family}
    for a in masks:
        for b in masks:
            diff = a ^ b
            d = diff
            while d:
                ibit = d & -d
                d ^= ibit
                e = diff
                ok = False
                while e:
                    jbit = e & -e
                    e ^= jbit
                    if (a ^ ibit ^ jbit if jbit != ibit else a ^ ibit) in masks:
                        ok = True
                        break
                if not ok:
                    return False
    return True


class DeltaMatroid:
    """Immutable delta-matroid with feasible sets stored as subsets of [n]."""

    __slots__ = ("n", "feasible")

    def __init__(self, n, feasible, check=True):
        if n < 1:
            raise InputError("ground size must be positive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "feasible", _normalize_family(n, feasible))
        if check:
            ok, edge = validate_family(n, self.feasible)
            if not ok:
                raise InvalidDeltaMatroid(
                    f"family has a forbidden polytope edge {sorted(edge[0])} -- {sorted(edge[1])}",
                    violating_edge=edge)

    def __setattr__(self, *a):
        raise AttributeError("DeltaMatroid is immutable")

    def sorted_feasible(self):
        return sorted(self.feasible, key=subset_key)

    def vertices(self):
        return [vertex_of(S, self.n) for S in self.sorted_feasible()]

    def __eq__(self, other):
        if not isinstance(other, DeltaMatroid):
            return NotImplemented
        return self.n == other.n and self.feasible == other.feasible

    def __hash__(self):
        return hash((self.n, self.feasible))

    def __repr__(self):
        sets = ",".join("{" + ",".join(map(str, sorted(S))) + "}"
                        for S in self.sorted_feasible())
        return f"DeltaMatroid(n={self.n}, feasible=[{sets}])"

    def to_json(self):
        return {"n": self.n,
                "feasible": [sorted(S) for S in self.sorted_feasible()]}

    @classmethod
    def from_json(cls, data, check=True):
        try:
            n = int(data["n"])
            family = [frozenset(map(int, S)) for S in data["feasible"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed delta-matroid JSON: {exc}") from exc
        return cls(n, family, check=check)


def lattice_distance(D, S):
    """min over feasible F of |S △ F|, the lattice distance from e_S."""
    S = frozenset(S)
    if not all(1 <= i <= D.n for i in S):
        raise InputError("S must be a subset of the ground set")
    return min(len(S ^ F) for F in D.feasible)


def interlace(D):
    """Interlace polynomial: sum of v^(distance) over all subsets of [n]."""
    counts = [0] * (D.n + 1)
    masks = [sum(1 << (i - 1) for i in F) for F in D.feasible]
    for s in range(1 << D.n):
        d = min((s ^ f).bit_count() for f in masks)
        counts[d] += 1
    return UniPoly(counts)


def w_weight_vector(w):
    """Integer point interior to the fan cone of w, used to pick the
    w-minimal vertex: weight n+1-k on the k-th signed image."""
    n = len(w.images)
    v = [0] * n
    for k, img in enumerate(w.images):
        v[abs(img) - 1] = (n - k) * (1 if img > 0 else -1)
    return tuple(v)


def minimal_feasible(D, w, weights=None):
    """The feasible S whose vertex minimizes the pairing with an interior
    vector of the cone of w.  A tie certifies the input is not a
    delta-matroid (its normal fan would not coarsen the signed
    permutohedral fan)."""
    v = weights if weights is not None else w_weight_vector(w)
    best = None
    best_val = None
    tie = False
    for S in D.sorted_feasible():
        val = sum(v[i - 1] for i in S)
        if best_val is None or val < best_val:
            best, best_val, tie = S, val, False
        elif val == best_val:
            tie = True
    if tie:
        raise InvalidDeltaMatroid(
            f"w-minimal feasible set is not unique at w={w}; input is not a delta-matroid")
    return best


# ---------------------------------------------------------------------------
# realizations


class GroundMatrix:
    """n x (2n+1) matrix, columns labelled -n..-1, 0, 1..n, whose row space
    must be isotropic for q(x) = sum x_i x_{-i} + x_0^2."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, n, rows):
        if field not in ("Q", "F2"):
            raise InputError("field must be 'Q' or 'F2'")
        rows = [tuple(r) for r in rows]
        if len(rows) != n or any(len(r) != 2 * n + 1 for r in rows):
            raise InputError(f"expected {n} rows of length {2*n+1}")
        if field == "F2":
            rows = [tuple(x % 2 for x in r) for r in rows]
        else:
            rows = [tuple(QQ(x) for x in r) for r in rows]
        self.field = field
        self.n = n
        self.rows = rows

    def column(self, label):
        """Column index of coordinate label in {-n..-1, 0, 1..n}."""
        n = self.n
        if label == 0:
            return n
        if label > 0:
            return n + label
        return n + label  # negative label -i sits at n - i

    def entry(self, i, label):
        return self.rows[i][self.column(label)]

    def to_json(self):
        return {"field": self.field, "n": self.n,
                "rows": [[str(x) if self.field == "Q" else int(x) for x in r]
                         for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        try:
            field = data["field"]
            n = int(data["n"])
            if field == "Q":
                rows = [[QQ(x) for x in r] for r in data["rows"]]
            else:
                rows = [[int(x) for x in r] for r in data["rows"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed matrix JSON: {exc}") from exc
        return cls(field, n, rows)


def _q_value(M, vec):
    n = M.n
    total = vec[M.column(0)] ** 2
    for i in range(1, n + 1):
        total += vec[M.column(i)] * vec[M.column(-i)]
    return total


def _bilinear(M, x, y):
    n = M.n
    total = 2 * x[M.column(0)] * y[M.column(0)]
    for i in range(1, n + 1):
        total += x[M.column(i)] * y[M.column(-i)] + x[M.column(-i)] * y[M.column(i)]
    return total


def check_isotropic(M):
    """Witness vector in the row space with q != 0, or None if isotropic.

    Over Q it suffices to test the rows and their pairwise pairings; over
    F2 the form is quadratic rather than bilinear, so all 2^n row sums are
    tested.
    """
    if M.field == "Q":
        for r in M.rows:
            if _q_value(M, r) != 0:
                return r
        for r1, r2 in combinations(M.rows, 2):
            if _bilinear(M, r1, r2) != 0:
                return tuple(a + b for a, b in zip(r1, r2))
        return None
    width = 2 * M.n + 1
    for mask in range(1, 1 << M.n):
        vec = [0] * width
        for i in range(M.n):
            if mask >> i & 1:
                vec = [(a + b) % 2 for a, b in zip(vec, M.rows[i])]
        if _q_value(M, tuple(vec)) % 2 != 0:
            return tuple(vec)
    return None


def _gf2_rank(rows, width):
    masks = []
    for r in rows:
        m = 0
        for j, x in enumerate(r):
            if x % 2:
                m |= 1 << j
        masks.append(m)
    rank = 0
    for col in range(width):
        bit = 1 << col
        piv = next((i for i in range(rank, len(masks)) if masks[i] & bit), None)
        if piv is None:
            continue
        masks[rank], masks[piv] = masks[piv], masks[rank]
        for i in range(len(masks)):
            if i != rank and masks[i] & bit:
                masks[i] ^= masks[rank]
        rank += 1
    return rank


def _det_nonzero(M, labels):
    cols = [M.column(lb) for lb in labels]
    sub = [[r[c] for c in cols] for r in M.rows]
    if M.field == "F2":
        return _gf2_rank(sub, M.n) == M.n
    int_rows = []
    denom = 1
    for row in sub:
        for x in row:
            denom *= x.denominator
    for row in sub:
        int_rows.append([int(x * denom) for x in row])
    return det_int(int_rows) != 0


def from_matrix(M, check=True):
    """Delta-matroid of the matrix: S is feasible iff the columns labelled
    by the maximal admissible set S ∪ {-i : i not in S} are independent."""
    witness = check_isotropic(M)
    if witness is not None:
        raise InputError(f"row space is not isotropic; witness vector {witness}")
    if M.field == "F2":
        if _gf2_rank([list(r) for r in M.rows], 2 * M.n + 1) < M.n:
            raise InputError("matrix rank is below the ground size")
    else:
        from .linalg import rank as qrank
        if qrank(M.rows) < M.n:
            raise InputError("matrix rank is below the ground size")
    family = []
    for mask in range(1 << M.n):
        S = frozenset(i + 1 for i in range(M.n) if mask >> i & 1)
        labels = [i if i in S else -i for i in range(1, M.n + 1)]
        if _det_nonzero(M, labels):
            family.append(S)
    return DeltaMatroid(M.n, family, check=check)


def from_graph(n, edges, check=True):
    """Delta-matroid of a simple graph: S feasible iff the principal
    adjacency submatrix A[S] is invertible over F2.  Also returns the
    realization [A | I | 0] as a GroundMatrix."""
    adj = [[0] * n for _ in range(n)]
    seen = set()
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise InputError(f"loop at vertex {i} not allowed")
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"edge {e} leaves the vertex set [{n}]")
        key = frozenset((i, j))
        if key in seen:
            raise InputError(f"repeated edge {sorted(key)}")
        seen.add(key)
        adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1
    family = []
    for mask in range(1 << n):
        S = [i for i in range(n) if mask >> i & 1]
        sub = [[adj[i][j] for j in S] for i in S]
        if _gf2_rank(sub, len(S)) == len(S):
            family.append(frozenset(i + 1 for i in S))
    rows = []
    for i in range(n):
        # columns -n..-1, 0, 1..n; row i of [A | I | 0] has x_{-i} = 1
        row = [0] * (2 * n + 1)
        row[n - (i + 1)] = 1
        for j in range(n):
            row[n + 1 + j] = adj[i][j]
        rows.append(row)
    M = GroundMatrix("F2", n, rows)
    return DeltaMatroid(n, family, check=check), M


def graph_from_json(data):
    try:
        n = int(data["n"])
        edges = [(int(a), int(b)) for a, b in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc
    return n, edges


def load_input(path):
    """Dispatch a JSON input file to the right constructor by its keys."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "feasible" in data:
        return DeltaMatroid.from_json(data)
    if "rows" in data:
        return from_matrix(GroundMatrix.from_json(data))
    if "edges" in data:
        return from_graph(*graph_from_json(data))[0]
    raise InputError("unrecognized input JSON (need feasible/rows/edges)")


# ---------------------------------------------------------------------------
# enumeration


def normal_form_key(n, family):
    """Canonical key of a family under the cube symmetries (coordinate
    permutations composed with twists S -> S △ T): the lexicographically
    smallest sorted bitmask tuple over the whole orbit.

    The defining edge condition, the interlace polynomial and both
    generating polynomials are invariant under these symmetries, so
    searches only need one representative per key.
    """
    from itertools import permutations as _perms

    masks = sorted(sum(1 << (i - 1) for i in S) for S in family)
    best = None
    for perm in _perms(range(n)):
        permuted = []
        for m in masks:
            pm = 0
            for i in range(n):
                if m >> i & 1:
                    pm |= 1 << perm[i]
            permuted.append(pm)
        for twist in range(1 << n):
            key = tuple(sorted(m ^ twist for m in permuted))
            if best is None or key < best:
                best = key
    return best


def is_normal_form(D):
    masks = tuple(sorted(sum(1 << (i - 1) for i in S) for S in D.feasible))
    return masks == normal_form_key(D.n, D.feasible)


def enumerate_all(n, allow_large=False):
    """All delta-matroids on [n], each exactly once, in mask order.

    The exchange axiom prunes candidates cheaply; every emitted family has
    passed the authoritative edge test.
    """
    if n > 4 and not allow_large:
        raise InputError("enumeration above n=4 must be requested explicitly")
    subsets = [frozenset(i + 1 for i in range(n) if mask >> i & 1)
               for mask in range(1 << n)]
    for fam_mask in range(1, 1 << len(subsets)):
        family = [subsets[i] for i in range(len(subsets)) if fam_mask >> i & 1]
        if not symmetric_exchange_ok(n, family):
            continue
        ok, _ = validate_family(n, family)
        if ok:
            yield DeltaMatroid(n, family, check=False)


def random_delta_matroids(n, seed, count):
    """Seeded stream of `count` distinct valid delta-matroids on [n]."""
    rng = random.Random(seed)
    subsets = [frozenset(i + 1 for i in range(n) if mask >> i & 1)
               for mask in range(1 << n)]
    seen = set()
    out = []
    while len(out) < count:
        k = rng.randint(1, len(subsets))
        family = frozenset(rng.sample(subsets, k))
        if family in seen:
            continue
        seen.add(family)
        if not symmetric_exchange_ok(n, family):
            continue
        ok, _ = validate_family(n, family)
        if ok:
            out.append(DeltaMatroid(n, family, check=False))
    return out
