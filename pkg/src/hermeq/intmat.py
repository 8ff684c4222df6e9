# Exact dense matrix kernels: fraction-free determinants, row-style Hermite
# normal form with transformation matrix, integer kernels, rational inverses.
#
# Matrices are lists of row lists.  Nothing here is optimized for size; every
# matrix in this package is tiny (dimension at most a few dozen) and the only
# thing that matters is exactness.

from fractions import Fraction


class DimensionError(ValueError):
    pass


class RankError(ValueError):
    pass


def mat_dims(m):
    r = len(m)
    c = len(m[0]) if r else 0
    for row in m:
        if len(row) != c:
            raise DimensionError("ragged matrix")
    return r, c


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_copy(m):
    return [list(r) for r in m]


def transpose(m):
    r, c = mat_dims(m)
    return [[m[i][j] for i in range(r)] for j in range(c)]


def mat_mul(a, b):
    ra, ca = mat_dims(a)
    rb, cb = mat_dims(b)
    if ca != rb:
        raise DimensionError("matrix product shape mismatch")
    out = [[0] * cb for _ in range(ra)]
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(cb):
                    orow[j] += x * brow[j]
    return out


def mat_vec(m, v):
    r, c = mat_dims(m)
    if len(v) != c:
        raise DimensionError("matrix-vector shape mismatch")
    return [sum(m[i][j] * v[j] for j in range(c)) for i in range(r)]


def vec_mat(v, m):
    r, c = mat_dims(m)
    if len(v) != r:
        raise DimensionError("vector-matrix shape mismatch")
    return [sum(v[i] * m[i][j] for i in range(r)) for j in range(c)]


def mat_scale(m, s):
    return [[s * x for x in row] for row in m]


def mat_add(a, b):
    ra, ca = mat_dims(a)
    rb, cb = mat_dims(b)
    if (ra, ca) != (rb, cb):
        raise DimensionError("matrix sum shape mismatch")
    return [[a[i][j] + b[i][j] for j in range(ca)] for i in range(ra)]


def mat_eq(a, b):
    return mat_dims(a) == mat_dims(b) and all(
        a[i][j] == b[i][j] for i in range(len(a)) for j in range(len(a[0]) if a else 0)
    )


def det_bareiss(m):
    """Exact determinant by fraction-free Bareiss elimination.

    Works over the integers without introducing fractions; also accepts
    Fraction entries (the pivoting divisions stay exact either way).
    """
    r, c = mat_dims(m)
    if r != c:
        raise DimensionError("determinant needs a square matrix")
    n = r
    if n == 0:
        return 1
    a = mat_copy(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    q, rem = divmod(num, prev)
                    if rem:
                        raise AssertionError("Bareiss division not exact")
                    a[i][j] = q
                else:
                    a[i][j] = num / prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(m):
    """Determinant by Laplace expansion along the first row.

    Entries may live in any commutative ring (only +, *, unary - and
    comparison with 0 are used); exponential in the dimension, so reserved
    for small symbolic matrices where Bareiss division is unavailable.
    """
    r, c = mat_dims(m)
    if r != c:
        raise DimensionError("determinant needs a square matrix")
    if r == 0:
        return 1
    if r == 1:
        return m[0][0]
    total = 0
    for j in range(r):
        x = m[0][j]
        if x == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = x * det_cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_rational(m):
    """Determinant of a matrix with Fraction (or int) entries."""
    r, c = mat_dims(m)
    if r != c:
        raise DimensionError("determinant needs a square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    return Fraction(det_bareiss(a))


def _hnf_echelon(m):
    # Shared worker: returns (H, T, pivots) with H = T m, T unimodular,
    # H in row Hermite normal form (pivot columns strictly increasing,
    # pivots positive, entries above each pivot reduced into [0, pivot),
    # zero rows at the bottom).
    r, c = mat_dims(m)
    h = mat_copy(m)
    t = identity(r)
    row = 0
    pivots = []
    for col in range(c):
        # clear below (row..r-1) in this column by gcd steps
        pivot = None
        for i in range(row, r):
            if h[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != row:
            h[row], h[pivot] = h[pivot], h[row]
            t[row], t[pivot] = t[pivot], t[row]
        for i in range(row + 1, r):
            while h[i][col] != 0:
                q = h[row][col] // h[i][col]
                if q:
                    for j in range(c):
                        h[row][j] -= q * h[i][j]
                    for j in range(r):
                        t[row][j] -= q * t[i][j]
                h[row], h[i] = h[i], h[row]
                t[row], t[i] = t[i], t[row]
        if h[row][col] < 0:
            h[row] = [-x for x in h[row]]
            t[row] = [-x for x in t[row]]
        pivots.append(col)
        row += 1
        if row == r:
            break
    # Reduce entries above each pivot, walking pivots left to right: later
    # pivot rows are zero in earlier pivot columns, so this order never
    # disturbs a column already reduced.
    for k in range(len(pivots)):
        col = pivots[k]
        p = h[k][col]
        for i in range(k):
            q = h[i][col] // p
            if q:
                for j in range(c):
                    h[i][j] -= q * h[k][j]
                for j in range(r):
                    t[i][j] -= q * t[k][j]
    return h, t, pivots


def hnf(m):
    """Row-style Hermite normal form of a full-row-rank integer matrix.

    Returns (H, T) with H = T m, T unimodular.  H is upper triangular with
    positive pivots and entries above each pivot reduced into [0, pivot).
    Raises RankError if the rows are dependent.
    """
    r, _ = mat_dims(m)
    h, t, pivots = _hnf_echelon(m)
    if len(pivots) != r:
        raise RankError("matrix does not have full row rank")
    return h, t


def hnf_lattice(m):
    """HNF basis of the row lattice of m (any shape); zero rows dropped.

    Returns (H, T, rank): H = the first `rank` rows of T m.
    """
    h, t, pivots = _hnf_echelon(m)
    rank = len(pivots)
    return h[:rank], t, rank


def left_kernel(m):
    """Primitive basis of {v : v m = 0} over the integers, HNF-canonical."""
    r, _ = mat_dims(m)
    _, t, pivots = _hnf_echelon(m)
    rank = len(pivots)
    ker = t[rank:]
    if not ker:
        return []
    kh, _, krank = hnf_lattice(ker)
    assert krank == r - rank
    return kh


def inverse_rational(m):
    """Exact inverse with Fraction entries; RankError if singular."""
    r, c = mat_dims(m)
    if r != c:
        raise DimensionError("inverse needs a square matrix")
    n = r
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise RankError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def is_unimodular(m):
    r, c = mat_dims(m)
    if r != c:
        return False
    return det_bareiss(m) in (1, -1)


def mat_int_check(m):
    """Cast a Fraction matrix to int entries; ValueError on non-integers."""
    out = []
    for row in m:
        orow = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError("non-integer entry")
            orow.append(int(f))
        out.append(orow)
    return out
