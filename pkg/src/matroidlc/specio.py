"""Matroid spec documents (JSON, or YAML with the same fields).

Schema, by ``kind``::

    {"kind": "uniform",  "r": 2, "n": 4}
    {"kind": "graphic",  "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
    {"kind": "linear",   "p": 2, "matrix": [[1, 0, 1], [0, 1, 1]]}
    {"kind": "explicit", "n": 2, "independents": [[], [0], [1]], "validate": true}

An optional ``"name"`` overrides the generated display name.  Linear
matrices are given by rows; the ground set is the set of columns.
Explicit independent sets are lists of elements.
"""

from __future__ import annotations

import json
from pathlib import Path

import yaml

from .matroid import InvalidParameterError, Matroid, make_explicit, make_graphic, make_linear, make_uniform, mask_of

KINDS = ("uniform", "graphic", "linear", "explicit")


class SpecError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def load_document(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SpecError("$", f"not valid JSON or YAML ({exc})") from exc


def _int(doc: dict, key: str, path: str, minimum: int = 0) -> int:
    if key not in doc:
        raise SpecError(f"{path}.{key}", "missing field")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{path}.{key}", f"expected an integer, got {v!r}")
    if v < minimum:
        raise SpecError(f"{path}.{key}", f"must be >= {minimum}, got {v}")
    return v


def _int_rows(doc: dict, key: str, path: str, width: int | None = None) -> list[list[int]]:
    if key not in doc:
        raise SpecError(f"{path}.{key}", "missing field")
    rows = doc[key]
    if not isinstance(rows, list):
        raise SpecError(f"{path}.{key}", "expected a list")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise SpecError(f"{path}.{key}[{i}]", "expected a list")
        if width is not None and len(row) != width:
            raise SpecError(f"{path}.{key}[{i}]", f"expected {width} entries, got {len(row)}")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise SpecError(f"{path}.{key}[{i}][{j}]", f"expected an integer, got {x!r}")
        out.append(list(row))
    return out


def parse_matroid_spec(document, path: str = "$") -> Matroid:
    """Build a matroid from a spec document (text or an already-parsed dict)."""
    doc = load_document(document) if isinstance(document, str) else document
    if not isinstance(doc, dict):
        raise SpecError(path, "expected a mapping")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SpecError(f"{path}.kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    try:
        if kind == "uniform":
            M = make_uniform(_int(doc, "r", path), _int(doc, "n", path))
        elif kind == "graphic":
            vertices = _int(doc, "vertices", path)
            M = make_graphic(vertices, _int_rows(doc, "edges", path, width=2))
        elif kind == "linear":
            p = _int(doc, "p", path, minimum=2)
            matrix = _int_rows(doc, "matrix", path)
            M = make_linear(p, matrix)
        else:
            n = _int(doc, "n", path)
            sets = _int_rows(doc, "independents", path)
            for i, s in enumerate(sets):
                for j, e in enumerate(s):
                    if not 0 <= e < n:
                        raise SpecError(f"{path}.independents[{i}][{j}]", f"element {e} outside 0..{n - 1}")
            validate = doc.get("validate", True)
            if not isinstance(validate, bool):
                raise SpecError(f"{path}.validate", "expected a boolean")
            M = make_explicit(n, [mask_of(s) for s in sets], validate=validate)
    except InvalidParameterError as exc:
        raise SpecError(path, str(exc)) from exc
    if "name" in doc:
        M.name = str(doc["name"])
    return M


def read_matroid_spec(filename: str | Path) -> Matroid:
    return parse_matroid_spec(Path(filename).read_text())
