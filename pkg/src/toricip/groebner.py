"""Binomial Groebner machinery for lattice ideals of pointed problems.

Every object here is a pure-difference binomial x^p - x^m with p - m in
ker(A). Pointedness makes every fiber {v >= 0 : Av = Au} finite, which is
what guarantees termination of reduction even for cost rows with negative
entries: each rewrite stays inside one finite fiber and strictly decreases
the order key.

Orders are encoded as integer weight rows followed by a reverse
lexicographic tie-break over a coordinate permutation, so the comparison
key of u is (w_1.u, ..., w_k.u, -u[t_1], ..., -u[t_n]). The tie-break
covers all coordinates, making every order total.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from typing import NamedTuple

from .cones import Face, Triangulation, is_unimodular, regular_subdivision
from .errors import ConsistencyError, NonGenericCostError, NotPureError, ValidationError
from .lattice import ProblemInstance, kernel_lattice_basis
from .linalg import IntVec, dot

if os.environ.get("TORICIP_PURE") == "1":
    from . import _fastreduce_py as _kernel
else:
    try:
        from . import _fastreduce as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _fastreduce_py as _kernel

from array import array

__all__ = [
    "Binomial",
    "InitialIdeal",
    "StandardPair",
    "kernel_implementation",
    "toric_ideal",
    "groebner_basis",
    "groebner_basis_weighted",
    "initial_ideal",
    "normal_form",
    "standard_pairs",
    "standard_pair_decomposition",
    "is_gomory_family",
    "radical",
    "triangulation_from_radical",
    "tdi_check",
]

_CAP = 1 << 31


class Binomial(NamedTuple):
    """x^plus - x^minus, oriented so plus is larger in the run's order."""

    plus: IntVec
    minus: IntVec


class StandardPair(NamedTuple):
    """Root exponent vector plus the face of coordinates left free."""

    root: IntVec
    face: tuple[int, ...]


@dataclass(frozen=True)
class InitialIdeal:
    """Leading terms of a reduced Groebner basis for a cost vector.

    generic is True when the cost alone oriented every basis element; only
    then do the generators describe a monomial initial ideal.
    """

    generators: tuple[IntVec, ...]
    generic: bool
    basis: tuple[Binomial, ...]


def kernel_implementation() -> str:
    return _kernel.IMPLEMENTATION


def _grevlex_tail(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _cheapest_tail(n: int, i: int) -> tuple[int, ...]:
    return (i,) + tuple(j for j in range(n - 1, -1, -1) if j != i)


def _reduce_big(u, basis):
    """Arbitrary-precision twin of the kernel, same scan discipline."""
    out = list(u)
    k = 0
    m = len(basis)
    while k < m:
        p, t = basis[k]
        fits = True
        for i, pi in enumerate(p):
            if pi > out[i]:
                fits = False
                break
        if fits:
            for i in range(len(out)):
                out[i] += t[i] - p[i]
            k = 0
        else:
            k += 1
    return tuple(out)


class _GBRun:
    """One Buchberger completion for a fixed order.

    The reducer table is kept as flat int64 arrays for the compiled kernel;
    a run degrades to big-integer reduction permanently once any exponent
    leaves the safe range (the grading bound below caps every coordinate of
    every fiber mate, so staying under it makes int64 arithmetic exact).
    """

    def __init__(self, n, rows, tail, grading):
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.tail = tuple(tail)
        self.grading = tuple(grading)
        self.gmin = min(self.grading)
        self.G: list[tuple[tuple, tuple]] = []
        self.leads = array("q")
        self.tails = array("q")
        self.big = False
        self.heap: list = []
        self._tick = 0

    def key(self, u):
        parts = [dot(r, u) for r in self.rows]
        parts.extend(-u[j] for j in self.tail)
        return tuple(parts)

    def nf(self, u):
        if self.G and not self.big and dot(self.grading, u) // self.gmin < _CAP:
            return _kernel.reduce_monomial(u, self.leads, self.tails, len(self.G), self.n)
        return _reduce_big(u, self.G)

    def _push_pairs(self, j):
        pj, _ = self.G[j]
        for i in range(j):
            pi, _ = self.G[i]
            if all(a == 0 or b == 0 for a, b in zip(pi, pj)):
                continue  # coprime leads: S-pair reduces to zero
            lcm = tuple(max(a, b) for a, b in zip(pi, pj))
            self._tick += 1
            heapq.heappush(self.heap, (self.key(lcm), self._tick, i, j))

    def add(self, p, m) -> bool:
        if p == m:
            return False
        if self.key(p) < self.key(m):
            p, m = m, p
        self.G.append((p, m))
        if not self.big and (max(p) >= _CAP or max(m) >= _CAP):
            self.big = True
        if not self.big:
            self.leads.extend(p)
            self.tails.extend(m)
        self._push_pairs(len(self.G) - 1)
        return True

    def run(self, gens):
        for p, m in gens:
            self.add(self.nf(p), self.nf(m))
        while self.heap:
            _, _, i, j = heapq.heappop(self.heap)
            p1, m1 = self.G[i]
            p2, m2 = self.G[j]
            lcm = tuple(max(a, b) for a, b in zip(p1, p2))
            a = self.nf(tuple(l - x + y for l, x, y in zip(lcm, p1, m1)))
            b = self.nf(tuple(l - x + y for l, x, y in zip(lcm, p2, m2)))
            if a != b:
                self.add(a, b)
        return self._reduce_basis()

    def _reduce_basis(self):
        # one representative per lead, then drop proper multiples
        by_lead: dict[tuple, tuple] = {}
        for p, m in self.G:
            if p not in by_lead or (p, m) < (p, by_lead[p]):
                by_lead[p] = m
        leads = list(by_lead)
        kept = []
        for p in leads:
            if any(q != p and all(a <= b for a, b in zip(q, p)) for q in leads):
                continue
            kept.append((p, by_lead[p]))
        table = _GBRun(self.n, self.rows, self.tail, self.grading)
        for p, m in kept:
            table.G.append((p, m))
            if not table.big and (max(p) >= _CAP or max(m) >= _CAP):
                table.big = True
            if not table.big:
                table.leads.extend(p)
                table.tails.extend(m)
        out = [(p, table.nf(m)) for p, m in kept]
        return tuple(Binomial(p, m) for p, m in sorted(out))


def _reduced_gb(P: ProblemInstance, rows, tail, gens) -> tuple[Binomial, ...]:
    run = _GBRun(P.n, rows, tail, P.grading)
    return run.run([(b[0], b[1]) for b in gens])


def toric_ideal(P: ProblemInstance) -> tuple[Binomial, ...]:
    """Generators of the saturated lattice ideal of ker(A).

    Starts from a lattice basis and saturates one variable at a time: with
    a grading-compatible reverse lexicographic order that makes x_i
    cheapest, dividing every reduced basis element by its x_i content
    computes the x_i-saturation. Saturations commute, so one sweep over the
    variables saturates completely.
    """
    cached = P._cache.get("toric_ideal")
    if cached is not None:
        return cached
    n = P.n
    basis = kernel_lattice_basis(P)
    gens: list[tuple[tuple, tuple]] = []
    for col in range(len(basis[0]) if basis else 0):
        v = tuple(row[col] for row in basis)
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        gens.append((plus, minus))
    out = tuple(Binomial(p, m) for p, m in gens)
    for i in range(n):
        gb = _reduced_gb(P, (P.grading,), _cheapest_tail(n, i), out)
        stripped = []
        for p, m in gb:
            k = min(p[i], m[i])
            if k:
                p = p[:i] + (p[i] - k,) + p[i + 1 :]
                m = m[:i] + (m[i] - k,) + m[i + 1 :]
            stripped.append(Binomial(p, m))
        out = tuple(stripped)
    out = tuple(sorted(out))
    P._cache["toric_ideal"] = out
    return out


def groebner_basis(P: ProblemInstance, c, seed=None) -> tuple[Binomial, ...]:
    """Reduced Groebner basis of the toric ideal for the cost order.

    The order compares c-weight, then total degree, then reverse
    lexicographic, so it is total for every integer cost; whether c alone
    decided all orientations is reported by initial_ideal().generic.
    """
    c = tuple(c)
    if len(c) != P.n:
        raise ValidationError(f"cost length {len(c)} != n = {P.n}")
    key = ("rgb", c)
    if seed is None:
        cached = P._cache.get(key)
        if cached is not None:
            return cached
    gens = seed if seed is not None else toric_ideal(P)
    ones = (1,) * P.n
    gb = _reduced_gb(P, (c, ones), _grevlex_tail(P.n), gens)
    if seed is None:
        P._cache[key] = gb
    return gb


def groebner_basis_weighted(P: ProblemInstance, rows, seed=None) -> tuple[Binomial, ...]:
    """Reduced basis for a stack of weight rows (refined to a total order).

    Used for fan traversal, where a facet flip needs the order
    [target weight, negated facet normal, tie-break]."""
    rows = tuple(tuple(r) for r in rows)
    key = ("rgbw", rows)
    if seed is None:
        cached = P._cache.get(key)
        if cached is not None:
            return cached
    gens = seed if seed is not None else toric_ideal(P)
    ones = (1,) * P.n
    gb = _reduced_gb(P, rows + (ones,), _grevlex_tail(P.n), gens)
    if seed is None:
        P._cache[key] = gb
    return gb


def initial_ideal(P: ProblemInstance, c) -> InitialIdeal:
    """Leading-term ideal data for the cost order.

    generic is True exactly when every basis element satisfies
    c.plus > c.minus strictly; the generators are then the minimal
    generators of the monomial initial ideal."""
    c = tuple(c)
    gb = groebner_basis(P, c)
    generic = all(dot(c, g.plus) > dot(c, g.minus) for g in gb)
    return InitialIdeal(tuple(g.plus for g in gb), generic, gb)


def normal_form(P: ProblemInstance, c, u) -> IntVec:
    """Fully reduce the exponent vector u by the cost-order basis.

    For generic c this is the optimal point of u's fiber; for tied costs
    it is still a well-defined representative under the refined order."""
    u = tuple(int(x) for x in u)
    if len(u) != P.n or any(x < 0 for x in u):
        raise ValidationError("normal form expects a nonnegative integer vector of length n")
    gb = groebner_basis(P, c)
    return _reduce_big(u, [(g.plus, g.minus) for g in gb])


def _admissible_roots(gens, free, maxexp):
    """All root vectors over the free coordinates such that every generator
    keeps a coordinate strictly above the root outside the face. Prunes a
    branch as soon as some generator can no longer get a witness."""
    results = []
    nfree = len(free)
    gvals = [tuple(g[k] for k in free) for g in gens]

    def rec(t, partial, pending):
        if t == nfree:
            if not pending:
                results.append(tuple(partial))
            return
        # generators with no possible witness at or after t are fatal
        for gi in pending:
            if all(gvals[gi][s] == 0 for s in range(t, nfree)):
                return
        for v in range(maxexp[free[t]]):
            nxt = [gi for gi in pending if gvals[gi][t] <= v]
            partial.append(v)
            rec(t + 1, partial, nxt)
            partial.pop()

    rec(0, [], list(range(len(gens))))
    return results


def standard_pairs(generators, n: int) -> tuple[StandardPair, ...]:
    """Standard-pair decomposition of the monomial ideal with the given
    minimal generators.

    A pair (u, tau) is admissible when every generator exceeds u in some
    coordinate outside tau; the standard pairs are the admissible pairs
    maximal under coordinate-subspace containment. Roots are bounded by
    the generator exponents, so the search is a finite box per face.
    """
    gens = [tuple(g) for g in generators]
    if any(len(g) != n for g in gens):
        raise ValidationError("generator length mismatch")
    if any(all(e == 0 for e in g) for g in gens):
        return ()
    sup_masks = []
    for g in gens:
        mask = 0
        for j, e in enumerate(g):
            if e > 0:
                mask |= 1 << j
        sup_masks.append(mask)
    maxexp = [max((g[j] for g in gens), default=0) for j in range(n)]

    # (u, tau) is dominated exactly when moving one free coordinate into the
    # face (zeroing the root there) stays admissible, so maximality is a
    # local test instead of a pairwise filter.
    keep = []
    for face_mask in range(1 << n):
        if any(sm & ~face_mask == 0 for sm in sup_masks):
            continue  # a generator lives on this face: not in the complex
        free = [j for j in range(n) if not face_mask >> j & 1]
        if any(maxexp[j] == 0 for j in free):
            continue  # an untouched coordinate must belong to the face
        face = tuple(j for j in range(n) if face_mask >> j & 1)
        for root_vals in _admissible_roots(gens, free, maxexp):
            root = [0] * n
            for j, v in zip(free, root_vals):
                root[j] = v
            standard = True
            for j in free:
                if all(any(g[k] > root[k] for k in free if k != j) for g in gens):
                    standard = False
                    break
            if standard:
                keep.append(StandardPair(tuple(root), face))
    return tuple(sorted(keep))


def standard_pair_decomposition(P: ProblemInstance, c) -> tuple[StandardPair, ...]:
    """Standard pairs of the initial ideal for a generic cost.

    Raises NonGenericCostError when c leaves a tie, since the monomial
    initial ideal is not defined there."""
    ini = initial_ideal(P, c)
    if not ini.generic:
        raise NonGenericCostError("cost vector does not orient every basis element")
    return standard_pairs(ini.generators, P.n)


def is_gomory_family(P: ProblemInstance, c) -> bool:
    """True when every standard pair of the initial ideal uses a face of
    full size d, i.e. every group relaxation chosen by the decomposition
    solves its programs."""
    return all(len(sp.face) == P.d for sp in standard_pair_decomposition(P, c))


def radical(generators) -> tuple[tuple[int, ...], ...]:
    """Minimal generating supports of the radical of a monomial ideal."""
    sups = {tuple(sorted(j for j, e in enumerate(g) if e > 0)) for g in generators}
    sups.discard(())
    keep = []
    for s in sups:
        ss = set(s)
        if not any(set(t) < ss for t in sups):
            keep.append(s)
    return tuple(sorted(keep))


def triangulation_from_radical(P: ProblemInstance, supports, c=None) -> Triangulation:
    """Rebuild the triangulation whose non-faces are the given radical
    supports.

    The maximal faces are the maximal index sets containing no support.
    Raises NotPureError when those sets do not all have size d. When c is
    given, each face gets its dual certificate re-derived and checked."""
    n = P.n
    sup_masks = []
    for s in supports:
        mask = 0
        for j in s:
            mask |= 1 << j
        sup_masks.append(mask)
    faces = set()
    for face_mask in range(1 << n):
        if any(sm & ~face_mask == 0 for sm in sup_masks):
            continue
        faces.add(face_mask)
    # faces are downward closed, so maximality reduces to one-step extensions
    maximal = [
        f for f in faces if all(f >> j & 1 or f | 1 << j not in faces for j in range(n))
    ]
    idx_sets = sorted(tuple(j for j in range(n) if m >> j & 1) for m in maximal)
    if any(len(t) != P.d for t in idx_sets):
        raise NotPureError(f"maximal faces {idx_sets} are not all of size d = {P.d}")
    if c is None:
        faces_out = tuple(Face(t, None) for t in idx_sets)
        return Triangulation(faces_out, n, P.d, True)
    delta = regular_subdivision(P, c)
    if delta.face_sets() != tuple(idx_sets):
        raise ConsistencyError("radical faces disagree with the subdivision of c")
    return delta


def tdi_check(P: ProblemInstance, c) -> bool:
    """Whether the dual system of the cost is totally dual integral.

    Two independent routes must agree: the initial ideal being squarefree,
    and the triangulation of c being unimodular (all simplex indices 1).
    Raises NonGenericCostError for tied costs and ConsistencyError when
    the routes disagree."""
    ini = initial_ideal(P, c)
    if not ini.generic:
        raise NonGenericCostError("cost vector does not orient every basis element")
    squarefree = all(all(e <= 1 for e in g) for g in ini.generators)
    delta = regular_subdivision(P, c)
    if not delta.is_triangulation:
        raise ConsistencyError("generic initial ideal but non-simplicial subdivision")
    unimod = is_unimodular(P, delta)
    if squarefree != unimod:
        raise ConsistencyError(
            f"squarefree initial ideal = {squarefree} but unimodular triangulation = {unimod}"
        )
    return squarefree
