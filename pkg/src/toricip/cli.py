"""Deterministic command line front end.

One command per report: validate, triangulate, solve, relax,
standard-pairs, gomory-check, tdi-check, hilbert, normality, census.
Each run prints a single report to standard output carrying the echoed
inputs, the package version, the arithmetic kernel in use, and the
command result; error paths print a structured diagnostic in the same
shape.  Exit codes: 0 success, 2 invalid input (with a pointer to the
offending field where one is known), 3 cost vector not generic, 1
internal inconsistency.

All indices are 1-based on the way in (--face) and on the way out
(faces in reports); exact rationals are rendered as "p/q" strings.
--format csv renders the command's natural table instead of JSON;
errors are always JSON.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .cones import (
    hilbert_basis,
    is_delta_normal,
    is_normal,
    is_supernormal,
    is_unimodular,
    regular_subdivision,
)
from .errors import (
    ConeNotPointedError,
    InfeasibleError,
    NonGenericCostError,
    NotAFacetError,
    NotDeltaNormalError,
    NotPureError,
    OutsideConeError,
    RankDeficientError,
    ToricIPError,
    UnboundedRelaxationError,
    ValidationError,
)
from .fan import census
from .groebner import (
    kernel_implementation,
    normal_form,
    standard_pair_decomposition,
    tdi_check,
)
from .jsonio import (
    InputError,
    fraction_str,
    load_matrix,
    one_based,
    parse_int_list,
    render_csv,
    render_json,
    zero_based,
)
from .lattice import validate_problem
from .linalg import dot
from .relaxations import fiber_point, gomory_relaxation_face, group_relax_solve

__all__ = ["build_parser", "run", "main"]


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as structured JSON."""

    def error(self, message):
        sys.stdout.write(
            render_json({"error": {"type": "UsageError", "message": message}})
        )
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_, cost=None, rhs=False, face=False, extra=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--matrix", required=True, help="matrix file (JSON rows or CSV)")
        if cost is not None:
            p.add_argument("--cost", required=cost, help="integer cost vector")
        if rhs:
            p.add_argument("--rhs", required=True, help="integer right hand side")
        if face:
            p.add_argument("--face", help="1-based face indices (omit for the empty face)")
        if extra:
            p.add_argument("--workers", type=int, help="process count for ideal scoring")
            p.add_argument("--checkpoint", help="traversal checkpoint file (resumable)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        return p

    cmd("validate", "check the matrix assumptions and normalize the lattice", cost=False)
    cmd("triangulate", "regular subdivision of the cost vector", cost=True)
    cmd("solve", "solve the integer program for one right hand side", cost=True, rhs=True)
    cmd("relax", "solve one group relaxation", cost=True, rhs=True, face=True)
    cmd("standard-pairs", "standard-pair decomposition of the initial ideal", cost=True)
    cmd("gomory-check", "is every program solved by a top-level relaxation", cost=True)
    cmd("tdi-check", "total dual integrality of the cost's dual system", cost=True)
    cmd("hilbert", "minimal Hilbert basis of the column cone")
    cmd("normality", "normality ladder of the matrix", cost=False)
    cmd("census", "every initial ideal over all generic costs", extra=True)
    return parser


def _load_problem(args, inputs, with_cost):
    rows = load_matrix(args.matrix)
    inputs["matrix_file"] = args.matrix
    inputs["matrix"] = rows
    c = None
    if with_cost and getattr(args, "cost", None) is not None:
        c = parse_int_list(args.cost, "cost")
        inputs["cost"] = list(c)
    P = validate_problem(rows, c)
    return P, c


def _rhs(args, inputs, P):
    b = parse_int_list(args.rhs, "rhs")
    if len(b) != P.d:
        raise InputError("rhs", f"rhs length {len(b)} != d = {P.d}")
    inputs["rhs"] = list(b)
    return b


def _triangulation(P, c):
    delta = regular_subdivision(P, c)
    if not delta.is_triangulation:
        raise NonGenericCostError("cost vector induces a non-simplicial subdivision")
    return delta


def _flat_rows(result):
    import json as _json

    rows = [["key", "value"]]
    for k in sorted(result):
        rows.append([k, _json.dumps(result[k], sort_keys=True)])
    return rows


def _join(indices):
    return " ".join(str(i) for i in indices)


def _cmd_validate(args, inputs):
    P, _ = _load_problem(args, inputs, with_cost=True)
    result = {
        "valid": True,
        "d": P.d,
        "n": P.n,
        "pointed": True,
        "normalized": [list(r) for r in P.A] != inputs["matrix"],
        "normalized_matrix": [list(r) for r in P.A],
        "pointedness_certificate": list(P.pointedness_certificate),
        "column_degrees": list(P.grading),
    }
    return result, None


def _cmd_triangulate(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    delta = regular_subdivision(P, c)
    faces = [one_based(f) for f in delta.face_sets()]
    result = {"triangulation": delta.is_triangulation, "maximal_faces": faces}
    table = [["maximal_face"]] + [[_join(f)] for f in faces]
    return result, table


def _cmd_solve(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    b = _rhs(args, inputs, P)
    delta = _triangulation(P, c)
    xstar = normal_form(P, c, fiber_point(P, b))
    gface = gomory_relaxation_face(P, delta, b)
    solved = group_relax_solve(P, c, gface.indices, b, xstar).solves_ip
    smallest = None
    for tau in sorted(delta.all_faces(), key=lambda f: (-len(f), f)):
        if group_relax_solve(P, c, tau, b, xstar).solves_ip:
            smallest = tau
            break
    result = {
        "optimal": list(xstar),
        "value": fraction_str(dot(c, xstar)),
        "gomory_face": one_based(gface.indices),
        "solved_by_gomory": solved,
        "smallest_solving_face": one_based(smallest),
    }
    return result, None


def _cmd_relax(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    b = _rhs(args, inputs, P)
    tau = ()
    if getattr(args, "face", None):
        raw = parse_int_list(args.face, "face")
        inputs["face"] = list(raw)
        tau = zero_based(raw, "face", P.n)
    res = group_relax_solve(P, c, tau, b, fiber_point(P, b))
    result = {
        "z_star": list(res.z_star),
        "x_star": list(res.x_star),
        "solves_ip": res.solves_ip,
        "value": fraction_str(res.objective_value),
    }
    return result, None


def _cmd_standard_pairs(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    pairs = standard_pair_decomposition(P, c)
    ordered = sorted(pairs, key=lambda p: (len(p.face), p.face, p.root))
    faces = sorted({p.face for p in pairs}, key=lambda f: (len(f), f))
    counts = [
        {"face": one_based(f), "count": sum(1 for p in pairs if p.face == f)}
        for f in faces
    ]
    result = {
        "arithmetic_degree": len(pairs),
        "pairs": [{"root": list(p.root), "face": one_based(p.face)} for p in ordered],
        "associated_faces": [one_based(f) for f in faces],
        "multiplicities": counts,
    }
    table = [["root", "face"]] + [[_join(p.root), _join(one_based(p.face))] for p in ordered]
    return result, table


def _cmd_gomory_check(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    pairs = standard_pair_decomposition(P, c)
    result = {
        "gomory_family": all(len(p.face) == P.d for p in pairs),
        "standard_pairs": len(pairs),
    }
    return result, None


def _cmd_tdi_check(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    return {"tdi": tdi_check(P, c)}, None


def _cmd_hilbert(args, inputs):
    P, _ = _load_problem(args, inputs, with_cost=False)
    hb = hilbert_basis(P.columns)
    elements = sorted(list(e) for e in hb.elements)
    result = {"hilbert_basis": elements, "count": len(elements)}
    table = [["element"]] + [[_join(e)] for e in elements]
    return result, table


def _cmd_normality(args, inputs):
    P, c = _load_problem(args, inputs, with_cost=True)
    result = {"normal": is_normal(P), "supernormal": is_supernormal(P)}
    if c is not None:
        delta = _triangulation(P, c)
        result["delta_normal"] = is_delta_normal(P, delta)
        result["unimodular"] = is_unimodular(P, delta)
    return result, None


def _cmd_census(args, inputs):
    P, _ = _load_problem(args, inputs, with_cost=False)
    if args.workers is not None:
        if args.workers < 1:
            raise InputError("workers", "worker count must be at least 1")
        inputs["workers"] = args.workers
    if args.checkpoint:
        inputs["checkpoint"] = args.checkpoint
    rep = census(P, workers=args.workers, checkpoint=args.checkpoint)
    groups = [
        {
            "faces": [one_based(f) for f in tri.faces],
            "unimodular": tri.unimodular,
            "gomory": tri.gomory,
            "ideals": [
                {
                    "cost": list(rec.cost),
                    "standard_pairs": rec.standard_pair_count,
                    "gomory": rec.gomory,
                    "squarefree": rec.squarefree,
                    "min_face_size": rec.min_face_size,
                }
                for rec in tri.ideals
            ],
        }
        for tri in rep.triangulations
    ]
    result = {
        "initial_ideals": rep.initial_ideal_count,
        "triangulations": rep.triangulation_count,
        "gomory_triangulations": rep.gomory_supporting_triangulation_count,
        "groups": groups,
    }
    table = [["triangulation", "unimodular", "cost", "standard_pairs", "gomory", "squarefree"]]
    for tri in rep.triangulations:
        faces = "|".join(_join(one_based(f)) for f in tri.faces)
        for rec in tri.ideals:
            table.append([
                faces,
                tri.unimodular,
                _join(rec.cost),
                rec.standard_pair_count,
                rec.gomory,
                rec.squarefree,
            ])
    return result, table


_HANDLERS = {
    "validate": _cmd_validate,
    "triangulate": _cmd_triangulate,
    "solve": _cmd_solve,
    "relax": _cmd_relax,
    "standard-pairs": _cmd_standard_pairs,
    "gomory-check": _cmd_gomory_check,
    "tdi-check": _cmd_tdi_check,
    "hilbert": _cmd_hilbert,
    "normality": _cmd_normality,
    "census": _cmd_census,
}

_FIELD_HINTS = {
    InfeasibleError: "rhs",
    OutsideConeError: "rhs",
    UnboundedRelaxationError: "face",
}


def _report(command, inputs, body):
    return {
        "command": command,
        "inputs": inputs,
        "versions": {"toricip": __version__, "kernel": kernel_implementation()},
        **body,
    }


def _fail(command, inputs, exc, code):
    error = {"type": type(exc).__name__, "message": str(exc)}
    field = getattr(exc, "field", None) or _FIELD_HINTS.get(type(exc))
    if field:
        error["field"] = field
    ray = getattr(exc, "ray", None)
    if ray is not None:
        error["certificate_ray"] = list(ray)
    sys.stdout.write(render_json(_report(command, inputs, {"error": error})))
    return code


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    inputs = {}
    try:
        result, table = _HANDLERS[args.command](args, inputs)
    except InputError as exc:
        return _fail(args.command, inputs, exc, 2)
    except NonGenericCostError as exc:
        return _fail(args.command, inputs, exc, 3)
    except (
        ValidationError,
        InfeasibleError,
        OutsideConeError,
        RankDeficientError,
        ConeNotPointedError,
        NotAFacetError,
        NotPureError,
        NotDeltaNormalError,
        UnboundedRelaxationError,
    ) as exc:
        return _fail(args.command, inputs, exc, 2)
    except ToricIPError as exc:
        return _fail(args.command, inputs, exc, 1)
    except Exception as exc:  # contract: never a bare crash
        return _fail(args.command, inputs, exc, 1)
    if args.format == "csv":
        sys.stdout.write(render_csv(table if table is not None else _flat_rows(result)))
    else:
        sys.stdout.write(render_json(_report(args.command, inputs, {"result": result})))
    return 0


def main() -> None:
    raise SystemExit(run())
