"""Bit-exact JSON serialization of matrices.

A matrix document carries a field tag ("Q" or {"GF": p}), the shape, and
a grid of entries, each a pair of ascending coefficient lists written as
decimal strings "a" or "a/b" -- never binary floats, so output is
reproducible across platforms.  Emission always writes canonical forms
(coprime, monic denominator, no trailing zero coefficients); parsing
accepts any exact input and normalizes.  Reports embed a sha256 of each
input's canonical serialization so fixtures can assert provenance.
"""

from __future__ import annotations

import hashlib
import json

from .errors import ParseError
from .field_matrix import FieldMatrix
from .fields import Field, field_from_tag
from .matrices import PolyMatrix, RatMatrix
from .poly import Poly
from .ratfun import RatFun


def _coeff_strings(field: Field, p: Poly) -> list[str]:
    return [field.format(c) for c in p.coeffs]


def matrix_to_doc(M: RatMatrix) -> dict:
    return {
        "field": M.field.tag(),
        "rows": M.rows,
        "cols": M.cols,
        "entries": [
            [
                {"num": _coeff_strings(M.field, e.num), "den": _coeff_strings(M.field, e.den)}
                for e in row
            ]
            for row in M.entries
        ],
    }


def poly_matrix_to_doc(M: PolyMatrix) -> dict:
    return matrix_to_doc(M.to_rat())


def field_matrix_to_doc(M: FieldMatrix) -> dict:
    return {
        "field": M.field.tag(),
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[M.field.format(e) for e in row] for row in M.entries],
    }


def _parse_coeffs(field: Field, raw, path: str) -> Poly:
    if not isinstance(raw, list):
        raise ParseError(f"{path}: expected a coefficient list")
    coeffs = []
    for k, c in enumerate(raw):
        if isinstance(c, str):
            coeffs.append(field.parse(c))
        elif isinstance(c, int):
            coeffs.append(field.from_int(c))
        else:
            raise ParseError(f"{path}[{k}]: coefficient must be a decimal string or int")
    return Poly(field, coeffs)


def doc_to_matrix(doc, path: str = "$") -> RatMatrix:
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected an object")
    for key in ("field", "rows", "cols", "entries"):
        if key not in doc:
            raise ParseError(f"{path}: missing key {key!r}")
    field = field_from_tag(doc["field"])
    rows, cols = doc["rows"], doc["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1 and cols >= 1):
        raise ParseError(f"{path}: rows/cols must be positive integers")
    grid = doc["entries"]
    if not isinstance(grid, list) or len(grid) != rows:
        raise ParseError(f"{path}.entries: expected {rows} rows")
    out = []
    for i, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{path}.entries[{i}]: expected {cols} entries")
        out_row = []
        for j, cell in enumerate(row):
            where = f"{path}.entries[{i}][{j}]"
            if not isinstance(cell, dict) or set(cell) != {"num", "den"}:
                raise ParseError(f"{where}: expected an object with num and den")
            num = _parse_coeffs(field, cell["num"], f"{where}.num")
            den = _parse_coeffs(field, cell["den"], f"{where}.den")
            if den.is_zero:
                raise ParseError(f"{where}: zero denominator")
            out_row.append(RatFun(num, den))
        out.append(out_row)
    return RatMatrix(field, out, cols=cols)


def dumps_doc(doc) -> str:
    """Canonical rendering: fixed key order, two-space indent, trailing
    newline; identical inputs yield byte-identical output."""
    return json.dumps(doc, indent=2) + "\n"


def emit_matrix(M: RatMatrix) -> str:
    return dumps_doc(matrix_to_doc(M))


def parse_matrix(text) -> RatMatrix:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return doc_to_matrix(doc)


def canonical_hash(M: RatMatrix) -> str:
    return hashlib.sha256(emit_matrix(M).encode("utf-8")).hexdigest()
