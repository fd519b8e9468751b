"""Configuration files.

A file is a JSON object::

    {"field": "rational" | {"prime": p},
     "points": [["x", "y", "z"], ...],
     "metadata": {...}}

Each coordinate is an exact string ``"num"`` or ``"num/den"``; points are
homogeneous triples. Serialization writes canonical integer triples with
sorted keys, so equal configurations give identical bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence, Union

from ..kernel import QQ, Field, FieldError, GeometryError, PrimeField, ProjPoint, field_from_tag

_SCALAR = re.compile(r"^-?\d+(/\d+)?$")


class FileFormatError(ValueError):
    """Schema violation; the message names the offending position."""


@dataclass(frozen=True)
class ConfigFile:
    field: Field
    points: tuple[ProjPoint, ...]
    metadata: dict = dc_field(default_factory=dict)


def parse_scalar(text: Any, where: str) -> Fraction:
    if not isinstance(text, str) or not _SCALAR.match(text.strip()):
        raise FileFormatError(f"{where}: expected an exact 'num' or 'num/den' string, got {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise FileFormatError(f"{where}: zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _parse_field(raw: Any) -> Field:
    if raw == "rational":
        return QQ
    if isinstance(raw, dict) and set(raw) == {"prime"} and isinstance(raw["prime"], int):
        return field_from_tag(raw)
    raise FileFormatError(f"field: expected \"rational\" or {{\"prime\": p}}, got {raw!r}")


def parse_config(text: str) -> ConfigFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FileFormatError("top level: expected an object")
    unknown = set(doc) - {"field", "points", "metadata"}
    if unknown:
        raise FileFormatError(f"top level: unknown keys {sorted(unknown)}")
    if "field" not in doc or "points" not in doc:
        raise FileFormatError("top level: 'field' and 'points' are required")
    fld = _parse_field(doc["field"])
    raw_pts = doc["points"]
    if not isinstance(raw_pts, list):
        raise FileFormatError("points: expected a list")
    pts = []
    for k, raw in enumerate(raw_pts):
        where = f"points[{k}]"
        if not isinstance(raw, list) or len(raw) != 3:
            raise FileFormatError(f"{where}: expected a triple of strings")
        vals = [parse_scalar(v, f"{where}[{j}]") for j, v in enumerate(raw)]
        try:
            pts.append(ProjPoint(fld.integral([fld(v) for v in vals]), fld))
        except (GeometryError, FieldError, ZeroDivisionError) as exc:
            raise FileFormatError(f"{where}: {exc}") from None
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        raise FileFormatError("metadata: expected an object")
    return ConfigFile(fld, tuple(pts), meta)


def field_json(fld: Field) -> Union[str, dict]:
    return {"prime": fld.p} if isinstance(fld, PrimeField) else "rational"


def serialize_config(points: Sequence[ProjPoint], fld: Field, metadata: dict | None = None) -> str:
    doc = {
        "field": field_json(fld),
        "points": [[str(c) for c in p.coords] for p in points],
        "metadata": metadata or {},
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_config(path: Union[str, Path]) -> ConfigFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror}") from None
    return parse_config(text)
