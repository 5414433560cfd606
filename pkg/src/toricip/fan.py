"""Traversal of the fan of generic costs, and the census built on it.

Every generic cost vector selects a monomial initial ideal of the lattice
ideal, and the costs selecting a fixed ideal form an open full-dimensional
cone; the closures of these cones tile all of cost space.  This module
walks that tiling.  The cone of a reduced basis is cut out by the
primitive difference vectors of its elements, a facet flip recomputes the
basis under the composite order [wall weight, negated facet normal] with
the current basis as warm start, and a breadth-first search over facet
flips visits every cell.  census() then groups the cells by the radical
of their initial ideal, rebuilds the triangulation attached to each
radical, and scores every ideal's standard-pair decomposition.

Determinism: seed probing draws from a fixed-seed generator, cells are
keyed by their reduced basis (which is unique per cone), and all reported
tuples are sorted by that key, so repeated runs give identical output.
"""

from __future__ import annotations

import json
import math
import os
import random
from collections import deque
from dataclasses import dataclass
from multiprocessing import get_context

from .errors import (
    ConsistencyError,
    NonGenericCostError,
    NotAFacetError,
    SeedNotFoundError,
    ValidationError,
)
from .groebner import (
    Binomial,
    groebner_basis,
    groebner_basis_weighted,
    initial_ideal,
    radical,
    standard_pairs,
    toric_ideal,
    triangulation_from_radical,
)
from .cones import is_unimodular
from .lattice import ProblemInstance
from .linalg import IntVec, dot, primitive
from .simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp

__all__ = [
    "GroebnerCone",
    "FanCell",
    "IdealRecord",
    "TriangulationRecord",
    "CensusReport",
    "groebner_cone",
    "flip",
    "representative_cost",
    "enumerate_initial_ideals",
    "census",
]

_PROBE_SEED = 0x5EED_FA9


@dataclass(frozen=True)
class GroebnerCone:
    """Closed cone of cost vectors sharing one reduced basis.

    inequalities are the primitive difference vectors plus - minus of the
    basis elements; the cone is every w with w . v >= 0 for all of them.
    facets is the irredundant subset of the inequalities.
    """

    basis: tuple[Binomial, ...]
    inequalities: tuple[IntVec, ...]
    facets: tuple[IntVec, ...]


@dataclass(frozen=True)
class FanCell:
    """One full-dimensional cone of the fan with a verified interior cost."""

    cone: GroebnerCone
    cost: IntVec

    @property
    def basis(self) -> tuple[Binomial, ...]:
        return self.cone.basis

    @property
    def generators(self) -> tuple[IntVec, ...]:
        return tuple(g.plus for g in self.cone.basis)


@dataclass(frozen=True)
class IdealRecord:
    """Census verdicts for a single initial ideal."""

    cost: IntVec
    generators: tuple[IntVec, ...]
    standard_pair_count: int
    gomory: bool
    squarefree: bool
    min_face_size: int


@dataclass(frozen=True)
class TriangulationRecord:
    """All initial ideals sharing one radical, hence one triangulation."""

    faces: tuple[tuple[int, ...], ...]
    unimodular: bool
    ideals: tuple[IdealRecord, ...]

    @property
    def gomory(self) -> bool:
        return any(rec.gomory for rec in self.ideals)


@dataclass(frozen=True)
class CensusReport:
    initial_ideal_count: int
    triangulation_count: int
    gomory_supporting_triangulation_count: int
    triangulations: tuple[TriangulationRecord, ...]


def _cone_data(basis, n):
    """Inequalities and facets of the cone of costs selecting this basis."""
    seen = set()
    ineqs = []
    for g in basis:
        v = primitive(tuple(p - m for p, m in zip(g.plus, g.minus)))
        if all(x == 0 for x in v):
            raise ConsistencyError("reduced basis contains a trivial element")
        if v not in seen:
            seen.add(v)
            ineqs.append(v)
    for v in ineqs:
        if tuple(-x for x in v) in seen:
            raise ConsistencyError(f"opposite difference vectors {v} collapse the cone")
    ineqs.sort()
    facets = []
    for i, v in enumerate(ineqs):
        others = [[-x for x in u] for j, u in enumerate(ineqs) if j != i]
        # v is irredundant exactly when w . v can be pushed below zero
        # while the remaining inequalities hold, i.e. the LP is unbounded
        res = solve_lp(list(v), A_ub=others, b_ub=[0] * len(others))
        if res.status == UNBOUNDED:
            facets.append(v)
        elif not (res.status == OPTIMAL and res.value == 0):
            raise ConsistencyError(f"facet test for {v} returned {res.status}")
    return tuple(ineqs), tuple(facets)


def _cone_from_basis(basis, n) -> GroebnerCone:
    ineqs, facets = _cone_data(basis, n)
    return GroebnerCone(basis, ineqs, facets)


def groebner_cone(P: ProblemInstance, c) -> GroebnerCone:
    """The cone of cost vectors selecting the same initial ideal as c.

    Raises NonGenericCostError when c lies on a wall, since the cell is
    then not full-dimensional and has no monomial initial ideal."""
    ini = initial_ideal(P, c)
    if not ini.generic:
        raise NonGenericCostError("cost vector does not orient every basis element")
    return _cone_from_basis(ini.basis, P.n)


def _as_cone(P: ProblemInstance, cone) -> GroebnerCone:
    if isinstance(cone, GroebnerCone):
        return cone
    return _cone_from_basis(tuple(cone), P.n)


def _integer_point(x) -> IntVec:
    """Clear denominators of a rational vector and reduce by the gcd."""
    lcm = 1
    for v in x:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return primitive(tuple(int(v * lcm) for v in x))


def _wall_point(cone: GroebnerCone, facet) -> IntVec:
    """Integer point in the relative interior of the wall behind a facet."""
    others = [v for v in cone.facets if v != facet]
    res = solve_lp(
        A_ub=[[-x for x in v] for v in others],
        b_ub=[-1] * len(others),
        A_eq=[list(facet)],
        b_eq=[0],
    )
    if res.status != OPTIMAL:
        raise ConsistencyError(f"wall interior point search returned {res.status}")
    return _integer_point(res.x) if res.x else (0,) * len(facet)


def _flip_basis(P: ProblemInstance, cone: GroebnerCone, facet) -> tuple[Binomial, ...]:
    w0 = _wall_point(cone, facet)
    neg = tuple(-x for x in facet)
    rows = (w0, neg) if any(w0) else (neg,)
    new = groebner_basis_weighted(P, rows, seed=cone.basis)
    if new == cone.basis:
        raise ConsistencyError("flip across a facet returned the same basis")
    return new


def flip(P: ProblemInstance, cone, facet) -> GroebnerCone:
    """Cross one facet of a cone to the neighboring cone of the fan.

    The neighbor's basis is recomputed under the order that weighs by a
    relative-interior point of the shared wall and breaks ties against
    the facet normal, warm-started from the current basis.  Raises
    NotAFacetError when the vector is not among the cone's facets."""
    cone = _as_cone(P, cone)
    f = primitive(tuple(int(x) for x in facet))
    if len(f) != P.n:
        raise ValidationError(f"facet vector has length {len(f)}, expected n = {P.n}")
    if f not in cone.facets:
        raise NotAFacetError(f"{tuple(facet)} is not a facet of this cone")
    return _cone_from_basis(_flip_basis(P, cone, f), P.n)


def representative_cost(P: ProblemInstance, cone: GroebnerCone, verify: bool = True) -> IntVec:
    """Deterministic integer cost in the interior of the cone.

    Tries the sum of the facet normals first, falls back to an exact
    feasibility LP, and (unless verify=False) re-derives the reduced
    basis from the result to confirm it reproduces the cell."""
    cand = tuple(sum(col) for col in zip(*cone.facets))
    if not all(dot(cand, v) > 0 for v in cone.inequalities):
        res = solve_lp(
            A_ub=[[-x for x in v] for v in cone.facets],
            b_ub=[-1] * len(cone.facets),
        )
        if res.status != OPTIMAL:
            raise ConsistencyError(f"interior cost search returned {res.status}")
        cand = _integer_point(res.x)
        if not all(dot(cand, v) > 0 for v in cone.inequalities):
            raise ConsistencyError("interior cost candidate lies on a wall")
    if verify and groebner_basis(P, cand, seed=cone.basis) != cone.basis:
        raise ConsistencyError("interior cost does not reproduce the cell's basis")
    return cand


def _probe_seed(P: ProblemInstance, max_probes: int):
    """Random generic cost, or None when every probe landed on a wall."""
    rng = random.Random(_PROBE_SEED)
    bound = 4
    for attempt in range(max_probes):
        if attempt and attempt % 50 == 0:
            bound *= 2
        c = tuple(rng.randint(-bound, bound) for _ in range(P.n))
        if initial_ideal(P, c).generic:
            return c
    return None


def _seed_cell(P: ProblemInstance, max_probes: int, seed_cost=None) -> FanCell:
    c = seed_cost if seed_cost is not None else _probe_seed(P, max_probes)
    if c is not None:
        cone = groebner_cone(P, c)
    else:
        # every probe was tied; fall back to the refined all-ones order,
        # whose basis still belongs to a full-dimensional cell
        cone = _cone_from_basis(groebner_basis(P, (1,) * P.n), P.n)
    try:
        cost = representative_cost(P, cone)
    except ConsistencyError as exc:
        raise SeedNotFoundError(f"could not certify a starting cell: {exc}") from exc
    return FanCell(cone, cost)


def _checkpoint_state(cells, frontier, done_walls):
    order = list(cells)
    index = {key: i for i, key in enumerate(order)}
    return {
        "cells": [
            {
                "basis": [[list(g.plus), list(g.minus)] for g in cell.cone.basis],
                "inequalities": [list(v) for v in cell.cone.inequalities],
                "facets": [list(v) for v in cell.cone.facets],
                "cost": list(cell.cost),
            }
            for cell in cells.values()
        ],
        "frontier": [index[key] for key in frontier],
        "walls": sorted([index[key], list(f)] for key, f in done_walls if key in index),
    }


def _save_checkpoint(path, P, cells, frontier, done_walls):
    state = _checkpoint_state(cells, frontier, done_walls)
    state["matrix"] = [list(row) for row in P.A]
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh, sort_keys=True)
    os.replace(tmp, path)


def _load_checkpoint(path, P):
    with open(path, encoding="utf-8") as fh:
        state = json.load(fh)
    if state.get("matrix") != [list(row) for row in P.A]:
        raise ValidationError("checkpoint was written for a different matrix")
    cells = {}
    order = []
    for rec in state["cells"]:
        basis = tuple(Binomial(tuple(p), tuple(m)) for p, m in rec["basis"])
        cone = GroebnerCone(
            basis,
            tuple(tuple(v) for v in rec["inequalities"]),
            tuple(tuple(v) for v in rec["facets"]),
        )
        cells[basis] = FanCell(cone, tuple(rec["cost"]))
        order.append(basis)
    frontier = deque(order[i] for i in state["frontier"])
    done_walls = {(order[i], tuple(f)) for i, f in state["walls"]}
    return cells, frontier, done_walls


def enumerate_initial_ideals(
    P: ProblemInstance,
    checkpoint: str | None = None,
    max_probes: int = 1000,
    progress=None,
    seed_cost=None,
) -> tuple[FanCell, ...]:
    """All monomial initial ideals of the lattice ideal, one cell each.

    Breadth-first flip traversal: every facet of every discovered cell is
    crossed once (the reverse crossing is skipped), and cells are keyed
    by their reduced basis.  With checkpoint set, the visited set and
    frontier are written to that path as the walk proceeds and a partial
    walk resumes from it.  seed_cost overrides the random probe for the
    starting cell; the traversal visits the same set of cells from any
    seed.  Returns the cells sorted by basis."""
    toric_ideal(P)  # fail fast on degenerate input before any probing
    cells = frontier = done_walls = None
    if checkpoint and os.path.exists(checkpoint):
        cells, frontier, done_walls = _load_checkpoint(checkpoint, P)
    if cells is None:
        start = _seed_cell(P, max_probes, seed_cost)
        cells = {start.basis: start}
        frontier = deque([start.basis])
        done_walls = set()
    expanded = 0
    while frontier:
        key = frontier.popleft()
        cell = cells[key]
        for f in cell.cone.facets:
            if (key, f) in done_walls:
                continue
            done_walls.add((key, f))
            nb = _flip_basis(P, cell.cone, f)
            done_walls.add((nb, tuple(-x for x in f)))
            if nb in cells:
                continue
            cone = _cone_from_basis(nb, P.n)
            cells[nb] = FanCell(cone, representative_cost(P, cone))
            frontier.append(nb)
        expanded += 1
        if progress and expanded % 10 == 0:
            progress(f"fan walk: {len(cells)} cells, {len(frontier)} in frontier")
        if checkpoint and expanded % 25 == 0:
            _save_checkpoint(checkpoint, P, cells, frontier, done_walls)
    if checkpoint:
        _save_checkpoint(checkpoint, P, cells, frontier, done_walls)
    return tuple(sorted(cells.values(), key=lambda cell: cell.basis))


def _ideal_stats(args):
    gens, n, d = args
    pairs = standard_pairs(gens, n)
    return (
        len(pairs),
        all(len(p.face) == d for p in pairs),
        all(all(e <= 1 for e in g) for g in gens),
        min(len(p.face) for p in pairs),
    )


def census(
    P: ProblemInstance,
    workers: int | None = None,
    checkpoint: str | None = None,
    progress=None,
) -> CensusReport:
    """Exhaustive survey of every generic cost class of the instance.

    Walks the whole fan, scores each initial ideal (standard-pair count,
    whether all pair faces are full-dimensional, squarefreeness), and
    groups the ideals by radical; each radical determines one regular
    triangulation, which is rebuilt and cross-checked against the
    geometric subdivision of a representative cost.  Squarefreeness must
    match the triangulation's unimodularity on every ideal, a violation
    raises ConsistencyError.  workers > 1 scores ideals in a process
    pool; results are merged in a fixed order either way."""
    cells = enumerate_initial_ideals(P, checkpoint=checkpoint, progress=progress)
    if progress:
        progress(f"fan walk done: {len(cells)} cells; scoring ideals")
    jobs = [(cell.generators, P.n, P.d) for cell in cells]
    if workers and workers > 1:
        with get_context("fork").Pool(workers) as pool:
            stats = pool.map(_ideal_stats, jobs, chunksize=1)
    else:
        stats = [_ideal_stats(job) for job in jobs]
    groups: dict[tuple, list[IdealRecord]] = {}
    for cell, (npairs, gomory, squarefree, minface) in zip(cells, stats):
        rec = IdealRecord(cell.cost, cell.generators, npairs, gomory, squarefree, minface)
        groups.setdefault(radical(cell.generators), []).append(rec)
    out = []
    for supports in sorted(groups):
        ideals = groups[supports]
        delta = triangulation_from_radical(P, supports, c=ideals[0].cost)
        unimodular = is_unimodular(P, delta)
        for rec in ideals:
            if rec.squarefree != unimodular:
                raise ConsistencyError(
                    "squarefree initial ideal disagrees with triangulation "
                    f"unimodularity at cost {rec.cost}"
                )
        out.append(TriangulationRecord(delta.face_sets(), unimodular, tuple(ideals)))
    out.sort(key=lambda rec: rec.faces)
    report = CensusReport(
        initial_ideal_count=len(cells),
        triangulation_count=len(out),
        gomory_supporting_triangulation_count=sum(1 for rec in out if rec.gomory),
        triangulations=tuple(out),
    )
    if progress:
        progress(
            f"census done: {report.initial_ideal_count} ideals over "
            f"{report.triangulation_count} triangulations"
        )
    return report
