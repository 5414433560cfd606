"""Exact linear programming over the rationals.

A small dense two-phase simplex with Bland's rule: deterministic, immune to
cycling, and exact since every entry is a fractions.Fraction. Problem sizes
in this package are tiny (tens of variables and constraints), so the dense
tableau is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["LPResult", "solve_lp", "cone_member", "OPTIMAL", "INFEASIBLE", "UNBOUNDED"]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    ray: tuple[Fraction, ...] | None = None
    """For UNBOUNDED: a feasible point is in x and ray is an improving
    recession direction (objective strictly decreases along it)."""


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i in range(len(T)):
        if i != row and T[i][col] != 0:
            f = T[i][col]
            Ti, Tr = T[i], T[row]
            T[i] = [a - f * b for a, b in zip(Ti, Tr)]
    basis[row] = col


def _run_simplex(T, basis, cost, ncols):
    """Bland-rule simplex on tableau T (rhs in last column).

    Returns ("optimal", value) or ("unbounded", entering_col).
    """
    m = len(T)
    while True:
        # reduced costs r_j = c_j - y . col_j with y from the current basis
        r = list(cost)
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0:
                Ti = T[i]
                for j in range(ncols):
                    if Ti[j] != 0:
                        r[j] -= cb * Ti[j]
        enter = next((j for j in range(ncols) if r[j] < 0), None)
        if enter is None:
            value = sum(cost[basis[i]] * T[i][ncols] for i in range(m))
            return OPTIMAL, value
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED, enter
        _pivot(T, basis, leave, enter)


def solve_lp(objective=None, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=False):
    """min objective . x subject to A_ub x <= b_ub and A_eq x = b_eq.

    Variables are free by default; nonneg=True constrains x >= 0 instead.
    objective=None solves a pure feasibility problem. All inputs may be ints,
    Fractions, or mixes; the result is exact.
    """
    A_ub = [list(map(Fraction, row)) for row in A_ub]
    A_eq = [list(map(Fraction, row)) for row in A_eq]
    b_ub = [Fraction(v) for v in b_ub]
    b_eq = [Fraction(v) for v in b_eq]
    if A_ub:
        n = len(A_ub[0])
    elif A_eq:
        n = len(A_eq[0])
    elif objective is not None:
        n = len(objective)
    else:
        return LPResult(OPTIMAL, (), Fraction(0))
    obj = [Fraction(v) for v in objective] if objective is not None else [Fraction(0)] * n

    # structural columns: x (nonneg) or the split x = xp - xm (free)
    nstruct = n if nonneg else 2 * n

    def expand(row):
        return list(row) + ([] if nonneg else [-v for v in row])

    nslack = len(A_ub)
    rows = []
    for i, row in enumerate(A_ub):
        coeffs = expand(row)
        slack = [Fraction(0)] * nslack
        slack[i] = Fraction(1)
        rows.append((coeffs + slack, b_ub[i], i))
    for i, row in enumerate(A_eq):
        coeffs = expand(row)
        rows.append((coeffs + [Fraction(0)] * nslack, b_eq[i], None))

    width = nstruct + nslack
    T = []
    basis = []
    art_cols = []
    for coeffs, rhs, slack_idx in rows:
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
            slack_idx = None  # slack coefficient became -1, cannot start basic
        T.append(coeffs + [rhs])
        if slack_idx is not None:
            basis.append(nstruct + slack_idx)
        else:
            basis.append(-1)  # placeholder, artificial assigned below
    nart = sum(1 for b in basis if b == -1)
    k = 0
    for i in range(len(T)):
        rhs = T[i].pop()
        T[i].extend([Fraction(0)] * nart)
        if basis[i] == -1:
            T[i][width + k] = Fraction(1)
            basis[i] = width + k
            art_cols.append(width + k)
            k += 1
        T[i].append(rhs)

    total = width + nart
    if nart:
        phase1 = [Fraction(0)] * total
        for j in art_cols:
            phase1[j] = Fraction(1)
        status, value = _run_simplex(T, basis, phase1, total)
        if value != 0:
            return LPResult(INFEASIBLE)
        # pivot artificials out of the basis or drop redundant rows
        drop = []
        for i in range(len(T)):
            if basis[i] >= width:
                col = next((j for j in range(width) if T[i][j] != 0), None)
                if col is None:
                    drop.append(i)
                else:
                    _pivot(T, basis, i, col)
        for i in reversed(drop):
            del T[i]
            del basis[i]
        # freeze artificial columns at zero
        for i in range(len(T)):
            row = T[i]
            T[i] = row[:width] + [row[total]]
    else:
        for i in range(len(T)):
            row = T[i]
            T[i] = row[:width] + [row[-1]]

    cost = (obj + [-v for v in obj] if not nonneg else list(obj)) + [Fraction(0)] * nslack

    def recover(col_weights):
        vals = [Fraction(0)] * width
        for i, b in enumerate(basis):
            vals[b] = col_weights[i]
        if nonneg:
            x = vals[:n]
        else:
            x = [vals[j] - vals[n + j] for j in range(n)]
        return tuple(x)

    status, value = _run_simplex(T, basis, cost, width)
    if status == OPTIMAL:
        x = recover([T[i][width] for i in range(len(T))])
        return LPResult(OPTIMAL, x, value)

    # unbounded: build the recession ray from the entering column
    enter = value
    ray_cols = [Fraction(0)] * width
    ray_cols[enter] = Fraction(1)
    for i, b in enumerate(basis):
        ray_cols[b] = -T[i][enter]
    if nonneg:
        ray = tuple(ray_cols[:n])
    else:
        ray = tuple(ray_cols[j] - ray_cols[n + j] for j in range(n))
    x = recover([T[i][width] for i in range(len(T))])
    return LPResult(UNBOUNDED, x, None, ray)


def cone_member(generators, target):
    """Exact test: is target a nonnegative rational combination of the
    generator vectors? Returns the coefficient tuple or None."""
    if not generators:
        return None if any(target) else ()
    dim = len(generators[0])
    A_eq = [[g[r] for g in generators] for r in range(dim)]
    res = solve_lp(None, A_eq=A_eq, b_eq=list(target), nonneg=True)
    return res.x if res.status == OPTIMAL else None
