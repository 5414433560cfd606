"""Input parsing and report rendering for the command line.

Indices cross the I/O boundary 1-based.  Rationals are rendered as exact
"p/q" strings, with the denominator omitted when it is 1.  JSON reports
are serialized with sorted keys and a fixed layout, and CSV rows with a
fixed field order, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import os
from fractions import Fraction

from .errors import ValidationError

__all__ = [
    "InputError",
    "fraction_str",
    "one_based",
    "zero_based",
    "parse_int_list",
    "load_matrix",
    "render_json",
    "render_csv",
]


class InputError(ValidationError):
    """Malformed command line input, carrying the offending field name."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


def fraction_str(v) -> str:
    """Exact decimal-free rendering: '28', '-3', or '45/4'."""
    return str(Fraction(v))


def one_based(indices) -> list[int]:
    return [i + 1 for i in indices]


def zero_based(indices, field: str, n: int) -> tuple[int, ...]:
    """1-based face indices from the command line, checked against n."""
    out = []
    for i in indices:
        if not 1 <= i <= n:
            raise InputError(field, f"index {i} is out of range 1..{n}")
        out.append(i - 1)
    return tuple(sorted(out))


def parse_int_list(text: str, field: str) -> tuple[int, ...]:
    """Integer list in any of '1,2,3', '1 2 3', or '[1, 2, 3]' form."""
    toks = text.strip().strip("[]()").replace(",", " ").split()
    if not toks:
        raise InputError(field, "expected a non-empty list of integers")
    out = []
    for tok in toks:
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(field, f"could not parse integer {tok!r}") from None
    return tuple(out)


def _int_cell(tok: str, field: str):
    try:
        return int(tok)
    except ValueError:
        raise InputError(field, f"matrix entry {tok!r} is not an integer") from None


def load_matrix(path: str) -> list[list[int]]:
    """Integer matrix from a file of JSON rows or CSV rows."""
    if not os.path.exists(path):
        raise InputError("matrix", f"matrix file {path!r} does not exist")
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("matrix", f"matrix file is not valid JSON: {exc}") from None
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise InputError("matrix", "JSON matrix must be a non-empty list of rows")
        out = []
        for r in rows:
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in r):
                raise InputError("matrix", f"row {r!r} contains a non-integer entry")
            out.append(list(r))
    else:
        out = []
        for rec in csv.reader(io.StringIO(text)):
            if not rec or all(not cell.strip() for cell in rec):
                continue
            out.append([_int_cell(cell.strip(), "matrix") for cell in rec])
        if not out:
            raise InputError("matrix", "CSV matrix file contains no rows")
    widths = {len(r) for r in out}
    if len(widths) != 1:
        raise InputError("matrix", f"rows have unequal lengths {sorted(widths)}")
    return out


def render_json(report) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
