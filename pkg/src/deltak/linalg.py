"""Small exact linear algebra kernels over Z and Q.

Everything works on tuples of ints (or rationals) and returns new tuples;
matrices are sequences of row tuples.  Sizes here are tiny (dimension at
most 7, a few dozen rows), so clarity beats asymptotics.
"""

from ._rat import QQ, as_int, is_integral


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a, c):
    return tuple(c * x for x in a)


def vec_neg(a):
    return tuple(-x for x in a)


def is_zero_vec(a):
    return all(x == 0 for x in a)


def primitive(v):
    """Divide an integer vector by the gcd of its entries, keeping its
    direction."""
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def canonical_sign(v):
    """Representative of {v, -v} whose first nonzero entry is positive;
    used for characters defined only up to sign."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else vec_neg(v)
    raise ValueError("zero vector has no sign representative")


def rank(rows):
    """Rank over Q."""
    m = [[QQ(x) for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve_exact(rows, b):
    """One exact solution x of (rows) x = b over Q, or None if inconsistent.

    Free variables are set to zero.
    """
    if not rows:
        return () if all(y == 0 for y in b) else None
    nrows, ncols = len(rows), len(rows[0])
    m = [[QQ(x) for x in r] + [QQ(y)] for r, y in zip(rows, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * z for a, z in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    x = [QQ(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return tuple(x)


def det_int(rows):
    """Determinant of an integer matrix (Bareiss, fraction free)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def row_hermite(rows):
    """Integer row reduction: returns (H, U) with U unimodular, U*A = H and
    H in row echelon form (not fully normalized; zero rows at the bottom)."""
    A = [list(r) for r in rows]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    U = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if A[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            U[r], U[piv] = U[piv], U[r]
            done = True
            for i in range(r + 1, nrows):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if A[i][c] != 0:
                        done = False
            if done:
                break
        if any(A[i][c] != 0 for i in range(r, nrows)):
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
                U[r] = [-x for x in U[r]]
            r += 1
            if r == nrows:
                break
    return [tuple(row) for row in A], [tuple(row) for row in U]


def int_kernel_basis(vectors):
    """Basis of the lattice { z in Z^m : sum_i z_i * vectors[i] = 0 }.

    The kernel of an integer matrix is saturated, so this basis spans it.
    """
    m = len(vectors)
    if m == 0:
        return []
    H, U = row_hermite(vectors)
    return [U[i] for i in range(m) if is_zero_vec(H[i])]


def lattice_basis(vectors):
    """Basis (row form) of the Z-span of the given integer vectors."""
    H, _ = row_hermite(vectors)
    return [h for h in H if not is_zero_vec(h)]


def smith_normal_form(rows):
    """(D, U, V) with U*A*V = D diagonal, U and V unimodular."""
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            reduced = True
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    addmul_row(i, t, -q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        reduced = False
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    addmul_col(j, t, -q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        reduced = False
            if reduced:
                break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    # Divisibility chain is not needed by callers; diagonal suffices.
    D = [tuple(row) for row in A]
    return D, [tuple(r) for r in U], [tuple(r) for r in V]


def invert_unimodular(M):
    """Exact inverse of a unimodular integer matrix, as integer rows."""
    n = len(M)
    aug = [[QQ(x) for x in row] + [QQ(1) if i == j else QQ(0) for j in range(n)]
           for i, row in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        if not all(is_integral(x) for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(as_int(x) for x in row))
    return out


def unimodular_to_e1(v):
    """Unimodular U with U v = e_1, for primitive integer v."""
    k = len(v)
    col = [[x] for x in v]
    H, U = row_hermite(col)
    if H[0][0] != 1 or any(H[i][0] != 0 for i in range(1, k)):
        raise ValueError(f"vector is not primitive: {v}")
    return U
