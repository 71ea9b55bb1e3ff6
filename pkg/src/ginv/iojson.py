"""Strict JSON ingestion and canonical serialization of matrix documents.

A document looks like

    {"field": "Q", "matrices": {"a": [["1", "1/2"], ["0", "0"]]}}
    {"field": {"GF": 7}, "matrices": {"a": [[1, 2], [3, 4]]}}

Rationals are always strings ("n" or "n/d"); GF(p) entries are integers,
reduced mod p on ingest.  Unknown keys are rejected and serialization is
canonical (sorted keys, fixed separators) so reports are byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict

from .errors import InputError
from .fields import PrimeField, Rationals, parse_scalar, scalar_to_json
from .matrix import Matrix

MAX_DIM = 16


@dataclass(frozen=True)
class InputDocument:
    field: object
    matrices: Dict[str, Matrix]


def parse_field(obj):
    if obj == "Q":
        return Rationals()
    if isinstance(obj, dict) and set(obj) == {"GF"}:
        p = obj["GF"]
        if isinstance(p, bool) or not isinstance(p, int):
            raise InputError("GF modulus must be an integer")
        return PrimeField(p)
    raise InputError(f"bad field descriptor {obj!r}")


def parse_matrix(field, grid, name: str) -> Matrix:
    if not isinstance(grid, list) or not grid:
        raise InputError(f"matrix {name!r} must be a nonempty list of rows")
    ncols = None
    rows = []
    for i, row in enumerate(grid):
        if not isinstance(row, list) or not row:
            raise InputError(f"row {name}[{i}] must be a nonempty list")
        if ncols is None:
            ncols = len(row)
        elif len(row) != ncols:
            raise InputError(f"ragged rows in matrix {name!r}")
        rows.append([parse_scalar(field, v, f"{name}[{i}][{j}]")
                     for j, v in enumerate(row)])
    if len(rows) > MAX_DIM or ncols > MAX_DIM:
        raise InputError(f"matrix {name!r} exceeds the {MAX_DIM}x{MAX_DIM} cap")
    return Matrix(field, rows, cols=ncols)


def parse_input(text) -> InputDocument:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("document must be a JSON object")
    unknown = set(obj) - {"field", "matrices"}
    if unknown:
        raise InputError(f"unknown keys {sorted(unknown)}")
    if "field" not in obj or "matrices" not in obj:
        raise InputError("document requires 'field' and 'matrices'")
    field = parse_field(obj["field"])
    if not isinstance(obj["matrices"], dict):
        raise InputError("'matrices' must be an object")
    matrices = {name: parse_matrix(field, grid, name)
                for name, grid in obj["matrices"].items()}
    return InputDocument(field, matrices)


def field_to_json(field):
    if isinstance(field, Rationals):
        return "Q"
    return {"GF": field.p}


def matrix_to_json(m: Matrix):
    return [[scalar_to_json(m.field, v) for v in row] for row in m.data]


def document_to_json(doc: InputDocument):
    return {"field": field_to_json(doc.field),
            "matrices": {name: matrix_to_json(m)
                         for name, m in doc.matrices.items()}}


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def serialize_document(doc: InputDocument) -> str:
    return dumps_canonical(document_to_json(doc))
