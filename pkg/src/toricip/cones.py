"""Cone geometry: regular subdivisions, Hilbert bases, normality.

The regular subdivision of cone(A) induced by a cost c is computed from
exact dual certificates: a column set E is a maximal cell exactly when some
y satisfies y . a_j = c_j on E and y . a_j < c_j off E. Every maximal cell
contains d linearly independent columns, so enumerating full-rank d-subsets
and solving the d x d equality system finds all cells.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import (
    ConsistencyError,
    NonGenericCostError,
    NotDeltaNormalError,
    NotPointedError,
    OutsideConeError,
    SingularBasisError,
    ValidationError,
)
from .lattice import ProblemInstance, lattice_index
from .linalg import (
    IntVec,
    det_bareiss,
    dot,
    invert_rational,
    mat_vec,
    rank,
    smith_normal_form,
    solve_square,
    submatrix_columns,
    transpose,
)
from .simplex import OPTIMAL, cone_member, solve_lp

__all__ = [
    "Face",
    "Triangulation",
    "HilbertBasis",
    "regular_subdivision",
    "smallest_containing_face",
    "is_unimodular",
    "parallelepiped_points",
    "hilbert_basis",
    "is_normal",
    "is_delta_normal",
    "is_supernormal",
    "construct_gomory_cost",
]


@dataclass(frozen=True)
class Face:
    """A face of a regular subdivision: sorted 0-based column indices plus,
    when available, the exact dual certificate y."""

    indices: tuple[int, ...]
    certificate: tuple[Fraction, ...] | None = None

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class Triangulation:
    """A regular subdivision of cone(A); is_triangulation is True when every
    maximal cell is simplicial (exactly d columns)."""

    maximal_faces: tuple[Face, ...]
    n: int
    d: int
    is_triangulation: bool

    def face_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.indices for f in self.maximal_faces)

    def key(self):
        return self.face_sets()

    def rays(self) -> tuple[int, ...]:
        seen = set()
        for f in self.maximal_faces:
            seen.update(f.indices)
        return tuple(sorted(seen))

    def has_face(self, tau) -> bool:
        """Face membership. For a triangulation the faces are exactly the
        subsets of maximal cells."""
        if not self.is_triangulation:
            raise ValidationError("face membership is only defined for triangulations")
        t = set(tau)
        return any(t.issubset(f.indices) for f in self.maximal_faces)

    def all_faces(self):
        """Downward closure, sorted by (size, lex). Triangulations only."""
        if not self.is_triangulation:
            raise ValidationError("face enumeration is only defined for triangulations")
        seen = set()
        for f in self.maximal_faces:
            idx = f.indices
            for r in range(len(idx) + 1):
                for sub in combinations(idx, r):
                    seen.add(sub)
        return sorted(seen, key=lambda t: (len(t), t))


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal Hilbert basis of a pointed rational cone."""

    elements: tuple[IntVec, ...]
    generators: tuple[IntVec, ...]


def _subdivision_cells(cols, c):
    """Maximal cells (index set, certificate) of the regular subdivision of
    cone(cols) induced by lifting heights c. cols must span R^d."""
    d = len(cols[0])
    n = len(cols)
    cells = {}
    for subset in combinations(range(n), d):
        M = tuple(tuple(cols[j][i] for j in subset) for i in range(d))
        # solve y . a_j = c_j on the subset; transpose so y is the unknown
        y = solve_square(transpose(M), tuple(c[j] for j in subset))
        if y is None:
            continue
        vals = [dot(y, a) for a in cols]
        if any(vals[j] > c[j] for j in range(n)):
            continue
        cell = tuple(j for j in range(n) if vals[j] == c[j])
        cells.setdefault(cell, tuple(y))
    # nested equality sets cannot both be maximal cells
    keys = sorted(cells, key=len, reverse=True)
    out = {}
    for k in keys:
        ks = set(k)
        if not any(ks < set(other) for other in out):
            out[k] = cells[k]
    return sorted(out.items())


def regular_subdivision(P: ProblemInstance, c) -> Triangulation:
    """Regular subdivision of cone(A) induced by c, with exact certificates.

    The result is a triangulation exactly when c is generic enough for every
    maximal cell to be simplicial; non-generic costs are reported through
    is_triangulation=False, not an error.
    """
    c = tuple(c)
    if len(c) != P.n:
        raise ValidationError(f"cost length {len(c)} != n = {P.n}")
    cells = _subdivision_cells(P.columns, c)
    faces = tuple(Face(cell, cert) for cell, cert in cells)
    is_tri = all(len(f.indices) == P.d for f in faces)
    return Triangulation(faces, P.n, P.d, is_tri)


def smallest_containing_face(P: ProblemInstance, delta: Triangulation, b) -> Face:
    """The unique smallest face of the triangulation whose cone contains b.

    b is given in the coordinates of the original matrix; b = 0 yields the
    empty face, points outside cone(A) raise OutsideConeError.
    """
    if not delta.is_triangulation:
        raise ValidationError("smallest containing face requires a triangulation")
    nb = P.normalized_rhs(b)
    for f in delta.maximal_faces:
        M = submatrix_columns(P.A, f.indices)
        lam = solve_square(M, nb)
        if lam is None:
            raise SingularBasisError(f"maximal face {f.indices} is not a column basis")
        if all(v >= 0 for v in lam):
            tau = tuple(j for j, v in zip(f.indices, lam) if v > 0)
            return Face(tau, None)
    raise OutsideConeError(f"rhs {tuple(b)} lies outside cone(A)")


def is_unimodular(P: ProblemInstance, delta: Triangulation) -> bool:
    """True when every maximal simplex spans the full column lattice."""
    if not delta.is_triangulation:
        raise ValidationError("unimodularity requires a triangulation")
    return all(lattice_index(P, f.indices) == 1 for f in delta.maximal_faces)


def parallelepiped_points(M) -> list[IntVec]:
    """All lattice points of the half-open parallelepiped spanned by the
    columns of the nonsingular integer matrix M: {M t : 0 <= t_i < 1}.

    Enumerated exactly through Smith coset representatives, so the output
    size is |det M| with no box search.
    """
    d = len(M)
    det = det_bareiss(M)
    if det == 0:
        raise SingularBasisError("parallelepiped requires a nonsingular matrix")
    S, U, _ = smith_normal_form(M)
    Uinv = invert_rational(U)
    Minv = invert_rational(M)
    reps = [()]
    for i in range(d):
        s = abs(S[i][i])
        reps = [r + (k,) for r in reps for k in range(s)]
    out = []
    for y in reps:
        x = mat_vec(Uinv, y)
        lam = mat_vec(Minv, x)
        frac = tuple(v - (v.numerator // v.denominator) for v in lam)
        pt = tuple(sum(Fraction(M[i][j]) * frac[j] for j in range(d)) for i in range(d))
        assert all(v.denominator == 1 for v in pt)
        out.append(tuple(int(v) for v in pt))
    assert len(set(out)) == abs(det)
    return sorted(set(out))


def _pointedness_certificate(gens):
    res = solve_lp(None, A_ub=[[-v for v in g] for g in gens], b_ub=[-1] * len(gens))
    if res.status != OPTIMAL:
        raise NotPointedError("generators span a cone containing a line (or include zero)")
    scale = lcm(*(f.denominator for f in res.x)) if res.x else 1
    return tuple(int(f * scale) for f in res.x)


def _saturated_span_basis(gens, k):
    """Integer basis of span(gens) intersected with Z^k, as columns."""
    G = tuple(tuple(g[i] for g in gens) for i in range(k))
    S, U, _ = smith_normal_form(G)
    r = sum(1 for i in range(min(k, len(gens))) if S[i][i] != 0)
    Uinv = invert_rational(U)
    basis_cols = [tuple(int(Uinv[i][j]) for i in range(k)) for j in range(r)]
    return basis_cols, U, r


def _probe_triangulation(cols):
    """A regular triangulation of cone(cols), found by deterministic probing
    of lifting heights. cols must span the ambient space."""
    rng = random.Random(0x5EED)
    bound = 8
    for attempt in range(200):
        c = tuple(rng.randint(0, bound) for _ in cols)
        cells = _subdivision_cells(cols, c)
        d = len(cols[0])
        if all(len(cell) == d for cell, _ in cells):
            return [cell for cell, _ in cells]
        if attempt % 20 == 19:
            bound *= 2
    raise ConsistencyError("failed to find a simplicial lifting; generators may be degenerate")


def _minimal_hilbert(candidates, gens, w):
    """Greedy reduction to the minimal Hilbert basis. candidates must contain
    every irreducible element; w is a positive functional on the cone."""
    cand = sorted(set(candidates) - {tuple([0] * len(w))}, key=lambda x: (dot(w, x), x))
    minimal = []
    for h in cand:
        reducible = False
        for m in minimal:
            diff = tuple(a - b for a, b in zip(h, m))
            if dot(w, diff) < 0:
                continue
            if cone_member(gens, diff) is not None:
                reducible = True
                break
        if not reducible:
            minimal.append(h)
    return minimal


def hilbert_basis(generators, method="triangulation") -> HilbertBasis:
    """Minimal Hilbert basis of the cone spanned by integer generators.

    method="triangulation" (default) triangulates the cone and collects the
    lattice points of each simplex's fundamental parallelepiped; every
    irreducible element lies in such a parallelepiped or is a generator.
    method="subsets" collects parallelepiped points of all full-rank
    d-subsets instead; both must return the same basis (tested invariant).
    Raises NotPointedError when the cone contains a line.
    """
    gens = [tuple(g) for g in generators]
    gens = sorted(set(g for g in gens if any(g)))
    if not gens:
        return HilbertBasis((), ())
    k = len(gens[0])
    _pointedness_certificate(gens)

    basis_cols, U, r = _saturated_span_basis(gens, k)
    if r < k:
        # work in coordinates of the saturated span lattice
        proj = [tuple(int(v) for v in mat_vec(U, g)[:r]) for g in gens]
        assert all(all(v == 0 for v in mat_vec(U, g)[r:]) for g in gens)
        inner = hilbert_basis(proj, method=method)
        lift = []
        for e in inner.elements:
            v = tuple(sum(basis_cols[j][i] * e[j] for j in range(r)) for i in range(k))
            lift.append(v)
        return HilbertBasis(tuple(sorted(lift)), tuple(gens))

    w = _pointedness_certificate(gens)
    candidates = set(gens)
    if method == "triangulation":
        for cell in _probe_triangulation(gens):
            M = tuple(tuple(gens[j][i] for j in cell) for i in range(k))
            candidates.update(parallelepiped_points(M))
    elif method == "subsets":
        for subset in combinations(range(len(gens)), k):
            M = tuple(tuple(gens[j][i] for j in subset) for i in range(k))
            if det_bareiss(M) != 0:
                candidates.update(parallelepiped_points(M))
    else:
        raise ValueError(f"unknown method {method!r}")
    minimal = _minimal_hilbert(candidates, gens, w)
    return HilbertBasis(tuple(sorted(minimal)), tuple(gens))


def _columns_in_cone(P, gens):
    out = []
    for j, a in enumerate(P.columns):
        if cone_member(gens, a) is not None:
            out.append(j)
    return out


def is_normal(P: ProblemInstance) -> bool:
    """True when the columns of A generate every lattice point of cone(A),
    i.e. the minimal Hilbert basis consists of columns."""
    hb = hilbert_basis(P.columns)
    have = set(P.columns)
    return all(h in have for h in hb.elements)


def is_delta_normal(P: ProblemInstance, delta: Triangulation) -> bool:
    """True when, for every maximal simplex, the columns lying in its cone
    form a Hilbert basis of that cone."""
    if not delta.is_triangulation:
        raise ValidationError("delta-normality requires a triangulation")
    have = set(P.columns)
    for f in delta.maximal_faces:
        gens = [P.columns[j] for j in f.indices]
        hb = hilbert_basis(gens)
        for h in hb.elements:
            if h not in have:
                return False
    return True


def is_supernormal(P: ProblemInstance) -> bool:
    """True when for every subset of columns spanning a full-dimensional
    cone, the columns inside that cone form its Hilbert basis. Exponential
    in n by design; intended for desk-scale matrices."""
    cols = P.columns
    seen = set()
    for r in range(P.d, P.n + 1):
        for subset in combinations(range(P.n), r):
            gens = [cols[j] for j in subset]
            G = tuple(tuple(g[i] for g in gens) for i in range(P.d))
            if rank(G) < P.d:
                continue
            inside = frozenset(_columns_in_cone(P, gens))
            if inside in seen:
                continue
            seen.add(inside)
            hb = hilbert_basis(gens)
            have = {cols[j] for j in inside}
            if any(h not in have for h in hb.elements):
                return False
    return True


def construct_gomory_cost(P: ProblemInstance, delta: Triangulation, c_prime) -> IntVec:
    """Build an integer cost inducing the given triangulation whose programs
    form a Gomory family, assuming the matrix is delta-normal.

    The seed c_prime must already induce delta. Columns interior to a
    maximal simplex get the height that places them on that simplex's
    lifted facet plane; ray columns then get pushed strictly down by an
    exact perturbation, which is verified a posteriori by recomputing the
    subdivision (the scale doubles until the recomputation returns delta).
    """
    c_prime = tuple(c_prime)
    base = regular_subdivision(P, c_prime)
    if base.face_sets() != delta.face_sets():
        raise ValidationError("seed cost does not induce the requested triangulation")
    if not delta.is_triangulation:
        raise ValidationError("the requested subdivision is not a triangulation")
    if not is_delta_normal(P, delta):
        raise NotDeltaNormalError("matrix is not normal with respect to the triangulation")

    rays = set(delta.rays())
    interior = [j for j in range(P.n) if j not in rays]
    heights = [Fraction(v) for v in c_prime]
    for j in interior:
        placed = False
        for f in delta.maximal_faces:
            M = submatrix_columns(P.A, f.indices)
            lam = solve_square(M, P.columns[j])
            if lam is not None and all(v >= 0 for v in lam):
                heights[j] = sum(l * Fraction(c_prime[i]) for l, i in zip(lam, f.indices))
                placed = True
                break
        if not placed:
            raise ConsistencyError(f"column {j} lies in no maximal cone of the triangulation")
    den = lcm(*(h.denominator for h in heights))
    flat = [int(h * den) for h in heights]

    from . import groebner as _groebner

    if not interior:
        # nothing to push below the facet planes; the scaled seed may
        # already verify, otherwise fall through to the perturbation loop
        try:
            if _groebner.is_gomory_family(P, tuple(flat)):
                return tuple(flat)
        except NonGenericCostError:
            pass

    omega = [-1 if j in rays else 0 for j in range(P.n)]
    cert_den = 1
    for f in base.maximal_faces:
        if f.certificate is not None:
            cert_den = lcm(cert_den, *(y.denominator for y in f.certificate))
    K = 2 * P.n * max(1, max(abs(v) for v in flat)) * cert_den
    rng = random.Random(0xD1CE)
    for _ in range(24):
        jitters = [(0,) * P.n] + [tuple(rng.randint(-1, 1) for _ in range(P.n)) for _ in range(3)]
        for jit in jitters:
            cand = tuple(K * v + o + e for v, o, e in zip(flat, omega, jit))
            check = regular_subdivision(P, cand)
            if not (check.is_triangulation and check.face_sets() == delta.face_sets()):
                continue
            try:
                if _groebner.is_gomory_family(P, cand):
                    return cand
            except NonGenericCostError:
                continue  # tie left by this jitter; try another
            break  # wrong pair structure at this scale: shrink the push
        K *= 2
    raise ConsistencyError("perturbation failed to produce a verified cost")
