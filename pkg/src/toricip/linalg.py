"""Dense exact linear algebra over the integers and rationals.

Matrices are tuples of row tuples. All arithmetic uses Python ints and
fractions.Fraction; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntVec = tuple[int, ...]
IntMatrix = tuple[IntVec, ...]

__all__ = [
    "IntVec",
    "IntMatrix",
    "dot",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "mat_vec",
    "vec_mat",
    "mat_mul",
    "transpose",
    "identity",
    "column",
    "columns",
    "submatrix_columns",
    "det_bareiss",
    "hermite_normal_form_columns",
    "smith_normal_form",
    "rank",
    "solve_square",
    "solve_linear_system",
    "invert_rational",
    "gcd_vec",
    "primitive",
]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(k, u):
    return tuple(k * a for a in u)


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def vec_mat(v, M):
    return tuple(sum(v[i] * M[i][j] for i in range(len(M))) for j in range(len(M[0])))


def mat_mul(A, B):
    bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in bt) for row in A)


def transpose(M):
    return tuple(zip(*M)) if M else ()


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def column(M, j):
    return tuple(row[j] for row in M)


def columns(M):
    return list(transpose(M))


def submatrix_columns(M, idx):
    """Columns of M selected by idx, as a matrix with len(M) rows."""
    return tuple(tuple(row[j] for j in idx) for row in M)


def gcd_vec(v) -> int:
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v) -> IntVec:
    """v divided by the gcd of its entries (zero vector stays zero)."""
    g = gcd_vec(v)
    return tuple(a // g for a in v) if g > 1 else tuple(v)


def det_bareiss(M) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(row) for row in M]
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
                # Bareiss identity: the division is exact
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_normal_form_columns(A):
    """Column-style Hermite form: returns (H, V) with A.V = H, V unimodular.

    H is in column echelon form: pivot rows strictly increase column by
    column, pivots are positive, entries left of a pivot in its row are
    reduced into [0, pivot), and zero columns come last. Pivoting picks the
    minimal absolute value to keep intermediate entries small.
    """
    if not A:
        return (), ()
    d, n = len(A), len(A[0])
    H = [list(row) for row in A]
    V = [list(row) for row in identity(n)]

    def col_addmul(j, k, q):
        # column j += q * column k, in both H and V
        for r in range(d):
            H[r][j] += q * H[r][k]
        for r in range(n):
            V[r][j] += q * V[r][k]

    def col_swap(j, k):
        for r in range(d):
            H[r][j], H[r][k] = H[r][k], H[r][j]
        for r in range(n):
            V[r][j], V[r][k] = V[r][k], V[r][j]

    def col_negate(j):
        for r in range(d):
            H[r][j] = -H[r][j]
        for r in range(n):
            V[r][j] = -V[r][j]

    pivcol = 0
    for row in range(d):
        if pivcol >= n:
            break
        # euclidean reduction among columns pivcol..n-1 on this row
        while True:
            nz = [j for j in range(pivcol, n) if H[row][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: (abs(H[row][j]), j))
            if jmin != pivcol:
                col_swap(pivcol, jmin)
            p = H[row][pivcol]
            done = True
            for j in range(pivcol + 1, n):
                if H[row][j] != 0:
                    q = H[row][j] // p  # floor division keeps remainders in [0, |p|)
                    col_addmul(j, pivcol, -q)
                    if H[row][j] != 0:
                        done = False
            if done:
                break
        if H[row][pivcol] != 0:
            if H[row][pivcol] < 0:
                col_negate(pivcol)
            p = H[row][pivcol]
            for j in range(pivcol):
                q = H[row][j] // p
                if q:
                    col_addmul(j, pivcol, -q)
            pivcol += 1
    return tuple(tuple(r) for r in H), tuple(tuple(r) for r in V)


def rank(A) -> int:
    H, _ = hermite_normal_form_columns(A)
    if not H:
        return 0
    n = len(H[0])
    return sum(1 for j in range(n) if any(H[i][j] for i in range(len(H))))


def smith_normal_form(A):
    """Smith form: returns (S, U, V) with U.A.V = S, U and V unimodular,
    and S diagonal with each diagonal entry dividing the next."""
    if not A:
        return (), (), ()
    d, n = len(A), len(A[0])
    S = [list(row) for row in A]
    U = [list(row) for row in identity(d)]
    V = [list(row) for row in identity(n)]

    def row_addmul(i, k, q):
        for c in range(n):
            S[i][c] += q * S[k][c]
        for c in range(d):
            U[i][c] += q * U[k][c]

    def col_addmul(j, k, q):
        for r in range(d):
            S[r][j] += q * S[r][k]
        for r in range(n):
            V[r][j] += q * V[r][k]

    def row_swap(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        for r in range(d):
            S[r][j], S[r][k] = S[r][k], S[r][j]
        for r in range(n):
            V[r][j], V[r][k] = V[r][k], V[r][j]

    def row_negate(i):
        for c in range(n):
            S[i][c] = -S[i][c]
        for c in range(d):
            U[i][c] = -U[i][c]

    m = min(d, n)
    t = 0
    while t < m:
        # find a nonzero pivot in the trailing block, minimal |value|
        best = None
        for i in range(t, d):
            for j in range(t, n):
                if S[i][j] != 0 and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            # clear column t
            changed = False
            for i in range(t + 1, d):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    row_addmul(i, t, -q)
                    if S[i][t] != 0:
                        row_swap(t, i)
                        changed = True
            for j in range(t + 1, n):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    col_addmul(j, t, -q)
                    if S[t][j] != 0:
                        col_swap(t, j)
                        changed = True
            if not changed:
                break
        if S[t][t] < 0:
            row_negate(t)
        t += 1

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for k in range(t - 1):
            a, b = S[k][k], S[k + 1][k + 1]
            if b % a != 0:
                # standard 2x2 trick: fold entry b into position k
                col_addmul(k, k + 1, 1)
                while True:
                    q = S[k + 1][k] // S[k][k]
                    row_addmul(k + 1, k, -q)
                    if S[k + 1][k] == 0:
                        break
                    row_swap(k, k + 1)
                for j in range(k + 1, n):
                    if S[k][j] != 0:
                        q = S[k][j] // S[k][k]
                        col_addmul(j, k, -q)
                        if S[k][j] != 0:
                            col_swap(k, j)
                if S[k][k] < 0:
                    row_negate(k)
                if S[k + 1][k + 1] < 0:
                    row_negate(k + 1)
                changed = True
    return tuple(tuple(r) for r in S), tuple(tuple(r) for r in U), tuple(tuple(r) for r in V)


def solve_square(M, b):
    """Exact solution of M x = b for square nonsingular M.

    Raises ZeroDivisionError through the caller's det check if singular; here
    returns None on singularity instead.
    """
    n = len(M)
    a = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k]
        a[k] = [x / inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(a[i][n] for i in range(n))


def solve_linear_system(M, b):
    """One exact solution of M x = b (M rectangular), or None if inconsistent.

    Free variables are set to zero.
    """
    if not M:
        return ()
    m, n = len(M), len(M[0])
    a = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = a[row][col]
        a[row] = [x / inv for x in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = a[r][n]
    return tuple(x)


def invert_rational(M):
    """Exact inverse of a square nonsingular integer or rational matrix."""
    n = len(M)
    a = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k]
        a[k] = [x / inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(tuple(a[i][n:]) for i in range(n))
