"""Exact scalars and the projective plane over QQ and GF(p)."""

from .fields import (
    GF,
    QQ,
    Field,
    FieldError,
    PrimeField,
    RationalField,
    Residue,
    Scalar,
    det,
    field_from_tag,
    is_prime,
    rank,
    solve,
)
from .plane import (
    GeometryError,
    LineChart,
    Matrix3,
    PencilKind,
    PencilResult,
    ProjLine,
    ProjPoint,
    collinear,
    fit_projectivity,
    incident,
    is_parallel,
    join,
    line,
    line_at_infinity,
    meet,
    nonconcurrent_triple,
    parallel_through,
    pencil_of,
    point,
)

__all__ = [
    "GF",
    "QQ",
    "Field",
    "FieldError",
    "GeometryError",
    "LineChart",
    "Matrix3",
    "PencilKind",
    "PencilResult",
    "PrimeField",
    "ProjLine",
    "ProjPoint",
    "RationalField",
    "Residue",
    "Scalar",
    "collinear",
    "det",
    "field_from_tag",
    "fit_projectivity",
    "incident",
    "is_parallel",
    "is_prime",
    "join",
    "line",
    "line_at_infinity",
    "meet",
    "nonconcurrent_triple",
    "parallel_through",
    "pencil_of",
    "point",
    "rank",
    "solve",
]
