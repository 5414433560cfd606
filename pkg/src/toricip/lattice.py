"""Problem instances and exact lattice algebra.

A problem instance is an integer matrix A (d rows, n columns, rank d) whose
columns span a pointed cone, together with an optional integer cost vector.
Validation enforces the standing assumptions:

  * rank(A) = d, otherwise RankDeficientError;
  * a strictly positive certificate w with w . a_j >= 1 for every column
    exists, otherwise ConeNotPointedError (this simultaneously certifies
    that Ax = 0 has no nonzero nonnegative solution, so all fibers are
    finite);
  * the columns generate the full lattice Z^d. If they generate a proper
    sublattice, the instance is replaced by the Smith-normalized equivalent
    (rows transformed by an invertible rational map that carries the column
    lattice onto Z^d) and the transform is recorded. Kernel data, regular
    subdivisions, initial ideals and standard pairs are invariant under this
    row transform, so downstream results match the original matrix.

Column indices are 0-based throughout the library; the CLI converts to the
1-based convention used in reports.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import ConeNotPointedError, RankDeficientError, SingularBasisError, ValidationError
from .linalg import (
    IntMatrix,
    IntVec,
    column,
    det_bareiss,
    dot,
    hermite_normal_form_columns,
    rank,
    smith_normal_form,
    submatrix_columns,
)
from .simplex import OPTIMAL, solve_lp

__all__ = ["ProblemInstance", "validate_problem", "kernel_lattice_basis", "lattice_index"]


class ProblemInstance:
    """Validated data for a family of integer programs min{c.x : Ax=b, x>=0}.

    Attributes:
      A: the (possibly Smith-normalized) integer matrix, rows as tuples.
      original_A: the matrix as supplied.
      c: optional integer cost vector of length n.
      pointedness_certificate: integer w with w . a_j >= 1 for all columns.
      row_transform: None when the input already spanned Z^d, else the
        rational d x d map T with A = T . original_A; right hand sides must
        be mapped through T as well.
    """

    def __init__(self, A, original_A, c, w, row_transform):
        self.A = A
        self.original_A = original_A
        self.c = c
        self.pointedness_certificate = w
        self.row_transform = row_transform
        self.d = len(A)
        self.n = len(A[0])
        self._cache = {}

    def __repr__(self):
        return f"ProblemInstance(d={self.d}, n={self.n}, c={self.c})"

    def __eq__(self, other):
        return isinstance(other, ProblemInstance) and self.A == other.A and self.c == other.c

    def __hash__(self):
        return hash((self.A, self.c))

    @cached_property
    def columns(self) -> tuple[IntVec, ...]:
        return tuple(column(self.A, j) for j in range(self.n))

    @cached_property
    def grading(self) -> IntVec:
        """Strictly positive weights w . a_j; every binomial of the toric
        ideal is homogeneous for this grading."""
        w = self.pointedness_certificate
        return tuple(dot(w, a) for a in self.columns)

    @cached_property
    def kernel_basis(self) -> IntMatrix:
        """Basis of the saturated integer kernel of A, one column per basis
        vector, returned as n rows of length n - d."""
        return kernel_lattice_basis(self)

    @cached_property
    def minor_gcd(self) -> int:
        """gcd of the maximal minors of A (product of the Smith divisors)."""
        S, _, _ = smith_normal_form(self.A)
        g = 1
        for i in range(self.d):
            g *= S[i][i]
        return g

    def normalized_rhs(self, b):
        """Map a right hand side given for original_A into the coordinates of
        the normalized matrix. Returns a tuple of Fractions."""
        if len(b) != self.d:
            raise ValidationError(f"rhs length {len(b)} != d = {self.d}")
        if self.row_transform is None:
            return tuple(Fraction(v) for v in b)
        return tuple(sum(Fraction(t) * Fraction(v) for t, v in zip(row, b)) for row in self.row_transform)

    def integer_rhs(self, b):
        """Like normalized_rhs but returns an int tuple, or None when b does
        not lie in the lattice spanned by the columns (empty fiber)."""
        nb = self.normalized_rhs(b)
        if any(v.denominator != 1 for v in nb):
            return None
        return tuple(int(v) for v in nb)


def _as_int_matrix(A) -> IntMatrix:
    try:
        rows = tuple(tuple(v for v in row) for row in A)
    except TypeError as exc:
        raise ValidationError(f"matrix is not a sequence of rows: {exc}") from None
    if not rows or not rows[0]:
        raise ValidationError("matrix must be nonzero with at least one row and column")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValidationError(f"row {i} has length {len(row)}, expected {width}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"entry ({i},{j}) is not an integer: {v!r}")
    return rows


def validate_problem(A, c=None) -> ProblemInstance:
    """Check the standing assumptions and return a normalized instance."""
    original = _as_int_matrix(A)
    d, n = len(original), len(original[0])
    if d > n:
        raise RankDeficientError(f"more rows than columns ({d} > {n}); rank {d} is impossible")
    if rank(original) < d:
        raise RankDeficientError(f"rank {rank(original)} < d = {d}")

    S, U, _ = smith_normal_form(original)
    divisors = [S[i][i] for i in range(d)]
    if all(v == 1 for v in divisors):
        norm = original
        transform = None
    else:
        transform = tuple(tuple(Fraction(U[i][j], divisors[i]) for j in range(d)) for i in range(d))
        norm_rows = []
        for i in range(d):
            row = tuple(sum(transform[i][k] * original[k][j] for k in range(d)) for j in range(n))
            if any(v.denominator != 1 for v in row):
                raise ValidationError("Smith normalization produced a non-integer matrix; this is a bug")
            norm_rows.append(tuple(int(v) for v in row))
        norm = tuple(norm_rows)

    cols = [column(norm, j) for j in range(n)]
    res = solve_lp(None, A_ub=[[-v for v in a] for a in cols], b_ub=[-1] * n)
    if res.status != OPTIMAL:
        raise ConeNotPointedError(
            "no strict certificate w with w . a_j >= 1 exists; cone(A) contains a line or a zero column"
        )
    scale = lcm(*(f.denominator for f in res.x)) if res.x else 1
    w = tuple(int(f * scale) for f in res.x)

    if c is not None:
        c = tuple(c)
        if len(c) != n:
            raise ValidationError(f"cost length {len(c)} != n = {n}")
        for j, v in enumerate(c):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"cost entry {j} is not an integer: {v!r}")

    return ProblemInstance(norm, original, c, w, transform)


def kernel_lattice_basis(P: ProblemInstance) -> IntMatrix:
    """Saturated lattice basis of ker(A) as an n x (n-d) integer matrix B.

    Columns of B span {x in Z^n : Ax = 0} exactly (not a finite-index
    sublattice). The reformulation x = u - Bz of a fiber uses B row-wise.
    """
    H, V = hermite_normal_form_columns(P.A)
    d, n = P.d, P.n
    zero_cols = [j for j in range(n) if all(H[i][j] == 0 for i in range(d))]
    assert len(zero_cols) == n - d
    cols = []
    for j in zero_cols:
        col = column(V, j)
        lead = next((v for v in col if v != 0), 0)
        cols.append(tuple(-v for v in col) if lead < 0 else col)
    return tuple(tuple(col[i] for col in cols) for i in range(n))


def lattice_index(P: ProblemInstance, sigma) -> int:
    """Index of the sublattice spanned by the columns in sigma inside the
    full column lattice: |det A_sigma| divided by the gcd of the maximal
    minors of A. sigma must be a d-subset of column indices (0-based)."""
    idx = tuple(sorted(sigma))
    if len(idx) != P.d or len(set(idx)) != P.d:
        raise SingularBasisError(f"need exactly d = {P.d} distinct column indices, got {sigma}")
    if idx[0] < 0 or idx[-1] >= P.n:
        raise SingularBasisError(f"column index out of range in {sigma}")
    det = det_bareiss(submatrix_columns(P.A, idx))
    if det == 0:
        raise SingularBasisError(f"columns {sigma} are linearly dependent")
    q, r = divmod(abs(det), P.minor_gcd)
    assert r == 0
    return q
