"""JSON serialization of curve systems.

Document layout::

    {"genus": 2, "boundary": 0, "k": 1,
     "curves": [{"id": "v01", "class": "1100", "provenance": "..."}, ...],
     "intersections": [["v01", "v02", 1], ...]}

``class`` is present iff ``boundary == 0``.  Zero counts are omitted on
output.  The canonical writer sorts curves by id and pairs lexicographically
and puts one record per line, so output is byte-stable.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import IO, Union

import jsonschema

from .errors import FormatError
from .gf2 import Gf2Vector
from .model import Curve, CurveSystem

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["genus", "boundary", "k", "curves", "intersections"],
    "additionalProperties": False,
    "properties": {
        "genus": {"type": "integer", "minimum": 1},
        "boundary": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 0},
        "curves": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "class": {"type": "string", "pattern": "^[01]+$"},
                    "provenance": {"type": "string"},
                },
            },
        },
        "intersections": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [
                    {"type": "string"},
                    {"type": "string"},
                    {"type": "integer", "minimum": 0},
                ],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

PathOrStream = Union[str, os.PathLike, IO[str]]


def to_document(sys: CurveSystem) -> dict:
    curves = []
    for c in sys.curves:
        rec = {"id": c.id}
        if c.homology is not None:
            rec["class"] = str(c.homology)
        rec["provenance"] = c.provenance
        curves.append(rec)
    return {
        "genus": sys.genus,
        "boundary": sys.boundary,
        "k": sys.k,
        "curves": curves,
        "intersections": [[a, b, n] for (a, b), n in sorted(sys.intersections.items())],
    }


def from_document(doc) -> CurveSystem:
    """Validate a parsed JSON document and build the system; raises FormatError."""
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise FormatError(err.message, err.json_path)

    genus, boundary = doc["genus"], doc["boundary"]
    curves, seen = [], set()
    for i, rec in enumerate(doc["curves"]):
        cid = rec["id"]
        if cid in seen:
            raise FormatError(f"duplicate curve id {cid!r}", f"$.curves[{i}].id")
        seen.add(cid)
        cls = rec.get("class")
        if boundary == 0 and cls is None:
            raise FormatError("closed systems need a homology class on every curve", f"$.curves[{i}]")
        if boundary > 0 and cls is not None:
            raise FormatError("classes are not allowed when boundary > 0", f"$.curves[{i}].class")
        homology = None
        if cls is not None:
            if len(cls) != 2 * genus:
                raise FormatError(f"class has length {len(cls)}, expected {2 * genus}", f"$.curves[{i}].class")
            homology = Gf2Vector.from_string(cls)
        curves.append(Curve(cid, homology, rec.get("provenance", "")))

    counts: dict[tuple[str, str], int] = {}
    for i, (a, b, n) in enumerate(doc["intersections"]):
        for j, x in enumerate((a, b)):
            if x not in seen:
                raise FormatError(f"unknown curve id {x!r}", f"$.intersections[{i}][{j}]")
        if a == b:
            raise FormatError("a curve cannot be paired with itself", f"$.intersections[{i}]")
        key = (a, b) if a < b else (b, a)
        if key in counts and counts[key] != n:
            raise FormatError(f"conflicting counts {counts[key]} and {n} for {key}", f"$.intersections[{i}]")
        counts[key] = n
    return CurveSystem(genus, boundary, doc["k"], tuple(curves), counts)


def dumps(sys: CurveSystem) -> str:
    doc = to_document(sys)
    head = ",\n".join(f"  {json.dumps(key)}: {json.dumps(doc[key])}" for key in ("genus", "boundary", "k"))

    def block(key):
        rows = doc[key]
        if not rows:
            return f"  {json.dumps(key)}: []"
        body = ",\n".join(f"    {json.dumps(r)}" for r in rows)
        return f"  {json.dumps(key)}: [\n{body}\n  ]"

    return "{\n" + head + ",\n" + block("curves") + ",\n" + block("intersections") + "\n}\n"


def loads(text: str) -> CurveSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
    return from_document(doc)


def atomic_write_text(path: Union[str, os.PathLike], text: str) -> None:
    """Write via a temporary file in the same directory and rename over ``path``."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_system(sys: CurveSystem, dest: PathOrStream) -> None:
    text = dumps(sys)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        atomic_write_text(dest, text)


def read_system(src: PathOrStream) -> CurveSystem:
    if hasattr(src, "read"):
        return loads(src.read())
    return loads(Path(src).read_text(encoding="utf-8"))
