"""Group relaxations of the programs min{c.x : Ax = b, x in N^n}.

Fix a feasible point u (Au = b, u >= 0).  Substituting x = u - Bz, with B
a basis of the saturated kernel lattice of A, turns the program into a
lattice program over z in Z^(n-d):

    min{(-cB).z : Bz <= u}

and dropping the inequality rows indexed by a face tau of the regular
triangulation of c gives the group relaxation.  Dropping a non-face makes
the objective unbounded, certified here by an integer ray.  Feasible sets
may be unbounded either way, but the level set {(-cB).z <= 0} of a
relaxation by a face is a polytope (z = 0 is feasible, so the optimum is
never positive), and all searches below run over such level sets.

Everything is exact: a rational LP supplies a bounding box, then a depth
first branch and bound enumerates integer points with interval
propagation.  Coordinates are fixed in ascending index order and values
tried by distance from zero, and among tied optima the one whose
x = u - Bz is lexicographically smallest wins, so results match
ip_solve_bruteforce bit for bit.

This module never consults the Groebner engine; it is the independent
route against which that engine is tested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cones import Face, Triangulation, regular_subdivision
from .errors import (
    ConsistencyError,
    InfeasibleError,
    InfeasibleUError,
    NonGenericCostError,
    OutsideConeError,
    SingularBasisError,
    UnboundedRelaxationError,
    ValidationError,
)
from .lattice import ProblemInstance
from .linalg import dot, solve_square
from .simplex import INFEASIBLE, UNBOUNDED, solve_lp

__all__ = [
    "RelaxationResult",
    "IPSolution",
    "reduced_cost",
    "ip_solve_bruteforce",
    "fiber_point",
    "group_relax_solve",
    "relaxation_is_bounded",
    "gomory_relaxation_face",
    "in_order_ideal",
    "is_standard_polytope",
]


@dataclass(frozen=True)
class RelaxationResult:
    """Outcome of one group relaxation."""

    z_star: tuple[int, ...]
    x_star: tuple[int, ...]
    solves_ip: bool
    objective_value: Fraction


@dataclass(frozen=True)
class IPSolution:
    """Optimal solution of one integer program."""

    x: tuple[int, ...]
    objective_value: Fraction


def _face_indices(tau) -> tuple[int, ...]:
    if isinstance(tau, Face):
        return tau.indices
    return tuple(sorted(int(j) for j in tau))


def _int_vec(vals, what: str, length=None) -> tuple[int, ...]:
    vals = tuple(vals)
    out = tuple(int(v) for v in vals)
    if any(o != v for o, v in zip(out, vals)):
        raise ValidationError(f"{what} must have integer entries")
    if length is not None and len(out) != length:
        raise ValidationError(f"{what} must have length {length}, got {len(out)}")
    return out


def _triangulation(P: ProblemInstance, c) -> Triangulation:
    key = ("triangulation", tuple(c))
    hit = P._cache.get(key)
    if hit is None:
        hit = regular_subdivision(P, c)
        P._cache[key] = hit
    return hit


def _lattice_objective(P: ProblemInstance, c) -> tuple[int, ...]:
    """-cB: the lattice program objective, one integer per kernel column."""
    B = P.kernel_basis
    return tuple(-sum(c[j] * B[j][l] for j in range(P.n)) for l in range(P.n - P.d))


# ---------------------------------------------------------------------------
# exact lattice point search


class _UnboundedBox(Exception):
    """The rational polyhedron has an unbounded coordinate; carries an
    integer recession ray."""

    def __init__(self, ray):
        super().__init__("unbounded search region")
        self.ray = ray


def _ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for b > 0."""
    return -((-a) // b)


def _integer_ray(ray) -> tuple[int, ...]:
    scale = 1
    for v in ray:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    r = [int(v * scale) for v in ray]
    g = 0
    for v in r:
        g = math.gcd(g, v)
    return tuple(v // (g or 1) for v in r)


def _root_box(rows, rhs, k):
    """Integer bounding box of {z : rows.z <= rhs} from 2k exact LPs.

    Returns None when the rational region is empty; raises _UnboundedBox
    when some coordinate direction recedes.
    """
    lo = [0] * k
    hi = [0] * k
    for i in range(k):
        for sign in (1, -1):
            obj = [0] * k
            obj[i] = sign
            res = solve_lp(obj, A_ub=rows, b_ub=rhs)
            if res.status == INFEASIBLE:
                return None
            if res.status == UNBOUNDED:
                raise _UnboundedBox(_integer_ray(res.ray))
            if sign == 1:
                lo[i] = math.ceil(res.value)
            else:
                hi[i] = math.floor(-res.value)
    return lo, hi


def _propagate(rows, res, lo, hi, t, k) -> bool:
    """Shrink the candidate ranges of the unfixed coordinates t..k-1 by
    one-row interval arithmetic; False when some range empties."""
    for _ in range(3):
        changed = False
        for row, room in zip(rows, res):
            if not any(row[t:k]):
                if room < 0:
                    return False
                continue
            for i in range(t, k):
                ri = row[i]
                if ri == 0:
                    continue
                rest = 0
                for l in range(t, k):
                    if l == i:
                        continue
                    rl = row[l]
                    if rl > 0:
                        rest += rl * lo[l]
                    elif rl < 0:
                        rest += rl * hi[l]
                slack = room - rest
                if ri > 0:
                    bound = slack // ri
                    if bound < hi[i]:
                        hi[i] = bound
                        changed = True
                        if lo[i] > bound:
                            return False
                else:
                    bound = _ceil_div(-slack, -ri)
                    if bound > lo[i]:
                        lo[i] = bound
                        changed = True
                        if bound > hi[i]:
                            return False
        if not changed:
            break
    return True


def _ordered(a: int, b: int, start: int):
    yield start
    step = 1
    while True:
        up = start + step
        down = start - step
        if up > b and down < a:
            return
        if up <= b:
            yield up
        if down >= a:
            yield down
        step += 1


def _search(rows, rhs, k, objective=None, skip_zero=False, tiekey=None):
    """Branch and bound over the integer points of {z : rows.z <= rhs}.

    With an objective, returns (z, value) minimizing objective.z, ties
    broken by the smallest tiekey(z) (default z itself); without one,
    returns the first feasible point found.  skip_zero excludes the
    origin.  Returns None when no qualifying point exists; raises
    _UnboundedBox when the region is unbounded.
    """
    rows = [tuple(r) for r in rows]
    rhs = list(rhs)
    if k == 0:
        if skip_zero or any(r < 0 for r in rhs):
            return None
        return ((), 0) if objective is not None else ()
    box = _root_box(rows, rhs, k)
    if box is None:
        return None
    lo0, hi0 = box

    best = None  # (value, key, z) in min mode, z in any mode
    path = []

    def descend(t, res, lo, hi, objfix) -> bool:
        nonlocal best
        if t == k:
            if any(r < 0 for r in res):
                return False
            z = tuple(path)
            if skip_zero and not any(z):
                return False
            if objective is None:
                best = z
                return True
            key = tiekey(z) if tiekey is not None else z
            if best is None or (objfix, key) < (best[0], best[1]):
                best = (objfix, key, z)
            return False
        lo = lo[:]
        hi = hi[:]
        if not _propagate(rows, res, lo, hi, t, k):
            return False
        a, b = lo[t], hi[t]
        if a > b:
            return False
        for v in _ordered(a, b, min(max(0, a), b)):
            of2 = objfix
            if objective is not None:
                of2 += objective[t] * v
                if best is not None:
                    bound = of2
                    for i in range(t + 1, k):
                        oi = objective[i]
                        if oi > 0:
                            bound += oi * lo[i]
                        elif oi < 0:
                            bound += oi * hi[i]
                    if bound > best[0]:
                        continue
            res2 = [r - row[t] * v for row, r in zip(rows, res)]
            path.append(v)
            stop = descend(t + 1, res2, lo, hi, of2)
            path.pop()
            if stop:
                return True
        return False

    descend(0, rhs, lo0, hi0, 0)
    if best is None:
        return None
    if objective is None:
        return best
    return best[2], best[0]


# ---------------------------------------------------------------------------
# operations


def reduced_cost(P: ProblemInstance, c, sigma, tau):
    """Cost of each column relative to the basis sigma, as exact rationals.

    Solves y.A_sigma = c_sigma and returns c - yA, which vanishes on sigma
    and hence on any tau contained in it; entries off tau are the reduced
    costs of the relaxation dropping tau.
    """
    c = _int_vec(c, "cost", P.n)
    sig = _face_indices(sigma)
    tau_t = _face_indices(tau)
    if len(sig) != P.d:
        raise ValidationError(f"sigma must have {P.d} elements, got {len(sig)}")
    if not set(tau_t) <= set(sig):
        raise ValidationError("tau must be contained in sigma")
    if not all(0 <= j < P.n for j in sig):
        raise ValidationError("sigma indices out of range")
    # rows of the transposed basis matrix: one equation y.a_j = c_j per j
    M = [[P.A[i][j] for i in range(P.d)] for j in sig]
    y = solve_square(M, [c[j] for j in sig])
    if y is None:
        raise SingularBasisError(f"columns {sig} are linearly dependent")
    return tuple(Fraction(c[j]) - dot(y, a) for j, a in enumerate(P.columns))


def ip_solve_bruteforce(P: ProblemInstance, c, b) -> IPSolution:
    """Exhaustive enumeration of the fiber {x in N^n : Ax = b}.

    The slow, obviously correct oracle the rest of the package is tested
    against.  Ties in cost go to the lexicographically smallest x.
    """
    c = _int_vec(c, "cost", P.n)
    nb = P.integer_rhs(_int_vec(b, "rhs", P.d))
    if nb is None:
        raise InfeasibleError("right hand side is outside the column lattice")
    total = dot(P.pointedness_certificate, nb)
    if total < 0:
        raise InfeasibleError("right hand side is outside cone(A)")
    g = P.grading
    cols = P.columns
    n = P.n
    best = None
    x = [0] * n

    def fiber(j, residual, degree, cost):
        nonlocal best
        if degree == 0:
            if not any(residual):
                cand = (cost, tuple(x))
                if best is None or cand < best:
                    best = cand
            return
        if j == n:
            return
        a = cols[j]
        for v in range(degree // g[j] + 1):
            x[j] = v
            fiber(j + 1, tuple(r - v * ai for r, ai in zip(residual, a)),
                  degree - v * g[j], cost + v * c[j])
        x[j] = 0

    fiber(0, nb, total, 0)
    if best is None:
        raise InfeasibleError("empty fiber")
    return IPSolution(x=best[1], objective_value=Fraction(best[0]))


def fiber_point(P: ProblemInstance, b) -> IntVec:
    """First point of the fiber {x in N^n : Ax = b} in the search order.

    Same grading-bounded depth-first scan as ip_solve_bruteforce, but
    stopped at the first hit, so repeated calls agree.  Raises
    InfeasibleError when the fiber is empty.
    """
    nb = P.integer_rhs(_int_vec(b, "rhs", P.d))
    if nb is None:
        raise InfeasibleError("right hand side is outside the column lattice")
    total = dot(P.pointedness_certificate, nb)
    if total < 0:
        raise InfeasibleError("right hand side is outside cone(A)")
    g = P.grading
    cols = P.columns
    n = P.n

    def fiber(j, residual, degree):
        if degree == 0:
            return (0,) * (n - j) if not any(residual) else None
        if j == n:
            return None
        a = cols[j]
        for v in range(degree // g[j] + 1):
            tail = fiber(j + 1, tuple(r - v * ai for r, ai in zip(residual, a)),
                         degree - v * g[j])
            if tail is not None:
                return (v,) + tail
        return None

    found = fiber(0, nb, total)
    if found is None:
        raise InfeasibleError("empty fiber")
    return found


def group_relax_solve(P: ProblemInstance, c, tau, b, u) -> RelaxationResult:
    """Solve the group relaxation dropping nonnegativity on the face tau.

    u must be a feasible solution of the unrelaxed program for b.  The
    relaxation drops the rows of Bz <= u indexed by tau; its optimum is
    finite exactly when tau is a face of the triangulation of c, and it
    solves the integer program exactly when the optimal x = u - Bz is
    nonnegative everywhere.
    """
    c = _int_vec(c, "cost", P.n)
    u = _int_vec(u, "u", P.n)
    tau_t = _face_indices(tau)
    nb = P.integer_rhs(_int_vec(b, "rhs", P.d))
    if nb is None or tuple(dot(row, u) for row in P.A) != nb:
        raise ValidationError("u does not satisfy Au = b")
    if any(v < 0 for v in u):
        raise InfeasibleUError("u has a negative entry, so z = 0 is infeasible")
    delta = _triangulation(P, c)
    if not delta.is_triangulation:
        raise NonGenericCostError("cost is not generic: regular subdivision is not a triangulation")

    B = P.kernel_basis
    n, k = P.n, P.n - P.d
    obj = _lattice_objective(P, c)
    if not delta.has_face(tau_t):
        raise UnboundedRelaxationError(
            f"face {tau_t} is not in the regular triangulation",
            ray=_unbounded_certificate(B, obj, tau_t, n, k),
        )

    keep = [j for j in range(n) if j not in set(tau_t)]
    rows = [B[j] for j in keep] + [obj]
    rhs = [u[j] for j in keep] + [0]

    def tiekey(z):
        return tuple(u[j] - dot(B[j], z) for j in range(n))

    try:
        found = _search(rows, rhs, k, objective=obj, tiekey=tiekey)
    except _UnboundedBox:
        # strict face certificates make cB a positive combination of the
        # kept rows, so a recession ray of the level set cannot exist
        raise ConsistencyError("level set of a face relaxation is unbounded") from None
    if found is None:
        raise ConsistencyError("z = 0 should always be feasible")
    z_star, value = found
    x_star = tuple(u[j] - dot(B[j], z_star) for j in range(n))
    return RelaxationResult(
        z_star=tuple(z_star),
        x_star=x_star,
        solves_ip=all(v >= 0 for v in x_star),
        objective_value=Fraction(dot(c, u) + value),
    )


def _unbounded_certificate(B, obj, tau_t, n, k):
    """Integer ray z with B^taubar z <= 0 and (-cB).z < 0, certifying that
    dropping a non-face leaves the objective unbounded below."""
    rows = [B[j] for j in range(n) if j not in set(tau_t)]
    res = solve_lp(obj, A_ub=rows, b_ub=[0] * len(rows))
    if res.status != UNBOUNDED:
        raise ConsistencyError("non-face relaxation was not unbounded")
    ray = _integer_ray(res.ray)
    if dot(obj, ray) >= 0 or any(dot(r, ray) > 0 for r in rows):
        raise ConsistencyError("simplex returned an invalid recession ray")
    return ray


def relaxation_is_bounded(delta: Triangulation, tau) -> bool:
    """True exactly when tau is a face of the triangulation; dropping the
    nonnegativity rows of a face leaves every level set bounded, dropping
    a non-face admits an improving recession ray."""
    return delta.has_face(_face_indices(tau))


def gomory_relaxation_face(P: ProblemInstance, delta: Triangulation, b) -> Face:
    """Maximal face whose cone contains b: the basis of Gomory's top-level
    relaxation.  On a wall the lexicographically smallest face wins."""
    nb = P.normalized_rhs(b)
    for f in sorted(delta.maximal_faces, key=lambda f: f.indices):
        M = [[P.A[i][j] for j in f.indices] for i in range(P.d)]
        lam = solve_square(M, nb)
        if lam is not None and all(v >= 0 for v in lam):
            return f
    raise OutsideConeError("right hand side is outside cone(A)")


def in_order_ideal(P: ProblemInstance, c, u) -> bool:
    """Is u the optimum of its own right hand side, i.e. a point of the
    order ideal O_c?  Exact: u is optimal iff {z : Bz <= u, (-cB).z <= 0}
    meets the lattice only in 0."""
    c = _int_vec(c, "cost", P.n)
    u = _int_vec(u, "u", P.n)
    if any(v < 0 for v in u):
        raise ValidationError("u must be nonnegative")
    B = P.kernel_basis
    k = P.n - P.d
    obj = _lattice_objective(P, c)
    rows = [B[j] for j in range(P.n)]
    neg = tuple(-v for v in obj)
    try:
        # a nonzero tie (cost difference exactly zero) breaks unique optima
        tie = _search(rows + [obj, neg], list(u) + [0, 0], k, skip_zero=True)
        if tie is not None:
            raise NonGenericCostError(f"nonzero lattice point {tie} ties with u")
        better = _search(rows + [obj], list(u) + [-1], k)
    except _UnboundedBox:
        raise ConsistencyError("Q_u is unbounded; pointedness violated") from None
    return better is None


def is_standard_polytope(P: ProblemInstance, c, u, tau) -> bool:
    """Does (u, tau) describe a standard pair, tested geometrically?

    True iff the relaxed polytope {B^taubar z <= u restricted, (-cB)z <= 0}
    meets the lattice only in 0, while removing any single one of its
    restriction rows lets a nonzero lattice point in.
    """
    c = _int_vec(c, "cost", P.n)
    u = _int_vec(u, "u", P.n)
    tau_t = _face_indices(tau)
    if any(v < 0 for v in u):
        raise ValidationError("u must be nonnegative")
    if any(u[j] for j in tau_t):
        raise ValidationError("support of u must avoid tau")
    delta = _triangulation(P, c)
    if not delta.is_triangulation:
        raise NonGenericCostError("cost is not generic: regular subdivision is not a triangulation")
    if not delta.has_face(tau_t):
        raise ValidationError(f"{tau_t} is not a face of the triangulation")

    B = P.kernel_basis
    k = P.n - P.d
    obj = _lattice_objective(P, c)
    taubar = [j for j in range(P.n) if j not in set(tau_t)]
    rows = [B[j] for j in taubar]
    rhs = [u[j] for j in taubar]
    neg = tuple(-v for v in obj)
    # ties are only a genericity violation when both tied points are
    # nonnegative, i.e. in the unrelaxed polytope; a zero-cost nonzero point
    # of the relaxed polytope just disqualifies the pair
    full = [B[j] for j in range(P.n)]
    try:
        tie = _search(full + [obj, neg], list(u) + [0, 0], k, skip_zero=True)
        if tie is not None:
            raise NonGenericCostError(f"nonzero lattice point {tie} ties with u")
        nonzero = _search(rows + [obj], rhs + [0], k, skip_zero=True)
    except _UnboundedBox:
        raise ConsistencyError("level set of a face relaxation is unbounded") from None
    if nonzero is not None:
        return False

    for pos in range(len(taubar)):
        sub_rows = [rows[q] for q in range(len(taubar)) if q != pos] + [obj]
        sub_rhs = [rhs[q] for q in range(len(taubar)) if q != pos] + [0]
        try:
            point = _search(sub_rows, sub_rhs, k, skip_zero=True)
        except _UnboundedBox:
            # the recession ray is itself a nonzero lattice point in the
            # relaxation (every right hand side here is nonnegative)
            continue
        if point is None:
            return False
    return True
