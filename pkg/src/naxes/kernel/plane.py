"""The projective plane P^2(k) over an exact field.

Points and lines are canonical integer triples, so they hash and compare
exactly. The affine plane is z != 0; ``(0:0:1)`` in line coordinates is
the line at infinity.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .fields import QQ, Field, FieldError, Scalar, det, rank


class GeometryError(ValueError):
    """A construction is undefined for the given input."""


def cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(a, b, c) -> int:
    return dot(a, cross(b, c))


class _Triple:
    __slots__ = ("coords", "field")

    def __init__(self, coords: Sequence[int], field: Field = QQ):
        c = field.normalize(tuple(int(v) for v in coords))
        if len(c) != 3:
            raise GeometryError("homogeneous coordinates need three entries")
        if not any(c):
            raise GeometryError("all homogeneous coordinates are zero")
        self.coords = c
        self.field = field

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords and self.field == other.field

    def __hash__(self):
        return hash((type(self).__name__, self.coords, self.field))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "({}:{}:{})".format(*self.coords)

    def __repr__(self):
        return f"{type(self).__name__}({self.coords}, {self.field})"


class ProjPoint(_Triple):
    __slots__ = ()

    @property
    def is_finite(self) -> bool:
        return self.coords[2] != 0

    def affine(self) -> tuple[Scalar, Scalar]:
        if not self.is_finite:
            raise GeometryError(f"point {self} lies at infinity")
        f = self.field
        z = f.from_int(self.coords[2])
        return f.from_int(self.coords[0]) / z, f.from_int(self.coords[1]) / z

    def on(self, line: ProjLine) -> bool:
        return incident(self, line)


class ProjLine(_Triple):
    __slots__ = ()

    @property
    def is_infinity(self) -> bool:
        return self.coords[0] == 0 and self.coords[1] == 0

    def direction(self) -> ProjPoint:
        """The point at infinity of this line."""
        if self.is_infinity:
            raise GeometryError("the line at infinity has no direction point")
        u, v, _ = self.coords
        return ProjPoint((-v, u, 0), self.field)

    def contains(self, point: ProjPoint) -> bool:
        return incident(point, self)


def point(x, y, z=1, field: Field = QQ) -> ProjPoint:
    """Point from scalar coordinates (ints, Fractions, residues)."""
    return ProjPoint(field.integral((field(x), field(y), field(z))), field)


def line(u, v, w, field: Field = QQ) -> ProjLine:
    """Line ux + vy + wz = 0 from scalar coefficients."""
    return ProjLine(field.integral((field(u), field(v), field(w))), field)


def line_at_infinity(field: Field = QQ) -> ProjLine:
    return ProjLine((0, 0, 1), field)


def _same_field(*objs) -> Field:
    f = objs[0].field
    for o in objs[1:]:
        if o.field != f:
            raise FieldError(f"mixed fields {f} and {o.field}")
    return f


def _is_zero(field: Field, v: int) -> bool:
    p = field.characteristic
    return v % p == 0 if p else v == 0


def incident(p: ProjPoint, l: ProjLine) -> bool:
    f = _same_field(p, l)
    return _is_zero(f, dot(p.coords, l.coords))


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    f = _same_field(a, b, c)
    return _is_zero(f, det3(a.coords, b.coords, c.coords))


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    f = _same_field(p, q)
    c = cross(p.coords, q.coords)
    if all(_is_zero(f, v) for v in c):
        raise GeometryError("coincident points")
    return ProjLine(c, f)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines (possibly at infinity)."""
    f = _same_field(l, m)
    c = cross(l.coords, m.coords)
    if all(_is_zero(f, v) for v in c):
        raise GeometryError("coincident lines")
    return ProjPoint(c, f)


def is_parallel(l: ProjLine, m: ProjLine) -> bool:
    """True when l and m meet at infinity. Equal lines count as parallel."""
    f = _same_field(l, m)
    if l.is_infinity or m.is_infinity:
        raise GeometryError("the line at infinity has no parallels")
    return _is_zero(f, l[0] * m[1] - l[1] * m[0])


def parallel_through(p: ProjPoint, l: ProjLine) -> ProjLine:
    """The line through the finite point p parallel to l."""
    f = _same_field(p, l)
    if l.is_infinity:
        raise GeometryError("the line at infinity has no parallels")
    if not p.is_finite:
        raise GeometryError("parallel through a point at infinity is undefined")
    u, v, _ = l.coords
    x, y, z = p.coords
    return ProjLine((u * z, v * z, -(u * x + v * y)), f)


# -- pencils ----------------------------------------------------------------


class PencilKind(enum.Enum):
    FINITE = "finite-center"
    INFINITE = "infinite-center"
    NONE = "not-a-pencil"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PencilResult:
    kind: PencilKind
    center: Optional[ProjPoint] = None

    @property
    def is_pencil(self) -> bool:
        return self.kind in (PencilKind.FINITE, PencilKind.INFINITE)


def pencil_of(lines: Iterable[ProjLine]) -> PencilResult:
    """Classify a family of lines by the rank of its coefficient matrix."""
    lines = list(lines)
    if not lines:
        raise GeometryError("empty line family")
    f = _same_field(*lines)
    if any(l.is_infinity for l in lines):
        raise GeometryError("the line at infinity is not allowed in a pencil")
    rk = rank(f, [l.coords for l in lines])
    if rk == 1:
        return PencilResult(PencilKind.DEGENERATE)
    if rk == 3:
        return PencilResult(PencilKind.NONE)
    first = lines[0]
    other = next(l for l in lines[1:] if l != first)
    center = meet(first, other)
    kind = PencilKind.FINITE if center.is_finite else PencilKind.INFINITE
    return PencilResult(kind, center)


def nonconcurrent_triple(lines: Sequence[ProjLine]) -> Optional[tuple[int, int, int]]:
    """First index triple (0-based) of lines not in a pencil, or None."""
    f = _same_field(*lines)
    for i, j, k in itertools.combinations(range(len(lines)), 3):
        if not _is_zero(f, det3(lines[i].coords, lines[j].coords, lines[k].coords)):
            return i, j, k
    return None


# -- projectivities ---------------------------------------------------------


class Matrix3:
    """A 3x3 integer matrix up to scale, acting on homogeneous points."""

    __slots__ = ("rows", "field")

    def __init__(self, rows: Sequence[Sequence[int]], field: Field = QQ):
        flat = field.normalize([int(v) for row in rows for v in row])
        if len(flat) != 9:
            raise GeometryError("Matrix3 needs 3x3 entries")
        self.rows = (flat[0:3], flat[3:6], flat[6:9])
        self.field = field

    def __eq__(self, other):
        if not isinstance(other, Matrix3):
            return NotImplemented
        return self.rows == other.rows and self.field == other.field

    def __hash__(self):
        return hash((self.rows, self.field))

    def __repr__(self):
        return f"Matrix3({self.rows}, {self.field})"

    def __call__(self, p: ProjPoint) -> ProjPoint:
        _same_field(self, p)
        return ProjPoint(tuple(dot(row, p.coords) for row in self.rows), self.field)

    def __matmul__(self, other: Matrix3) -> Matrix3:
        cols = list(zip(*other.rows))
        return Matrix3([[dot(r, c) for c in cols] for r in self.rows], self.field)

    @property
    def determinant(self) -> Scalar:
        return det(self.field, self.rows)

    def is_scalar_identity(self) -> bool:
        r = self.rows
        diag = {r[0][0], r[1][1], r[2][2]}
        off = [r[i][j] for i in range(3) for j in range(3) if i != j]
        return len(diag) == 1 and not any(off) and r[0][0] != 0


def _adjugate(m) -> list[list[int]]:
    cols = list(zip(*m))
    # rows of adj(m) are the cross products of column pairs of m
    return [list(cross(cols[1], cols[2])), list(cross(cols[2], cols[0])), list(cross(cols[0], cols[1]))]


def _frame_matrix(pts: Sequence[ProjPoint]) -> list[list[int]]:
    """Columns scaled so that they sum to the fourth point."""
    a, b, c, d = (p.coords for p in pts)
    f = pts[0].field
    for trio in itertools.combinations((a, b, c, d), 3):
        if _is_zero(f, det3(*trio)):
            raise GeometryError("not in general position")
    lam = (det3(d, b, c), det3(a, d, c), det3(a, b, d))
    return [[lam[j] * (a, b, c)[j][i] for j in range(3)] for i in range(3)]


def fit_projectivity(src: Sequence[ProjPoint], dst: Sequence[ProjPoint]) -> Matrix3:
    """The projectivity sending src[i] to dst[i] for four points in general position."""
    if len(src) != 4 or len(dst) != 4:
        raise GeometryError("need exactly four source and four target points")
    f = _same_field(*src, *dst)
    s = _frame_matrix(src)
    t = _frame_matrix(dst)
    adj = _adjugate(s)
    cols = list(zip(*adj))
    return Matrix3([[dot(row, c) for c in cols] for row in t], f)


# -- affine charts on a line ------------------------------------------------


class LineChart:
    """Affine parameter on a line: t -> origin + t * direction.

    Points map to homogeneous parameters (t0 : t1); the point at infinity
    of the line is (1 : 0).
    """

    def __init__(self, l: ProjLine):
        if l.is_infinity:
            raise GeometryError("the line at infinity has no affine chart")
        f = l.field
        u, v, w = (f.from_int(c) for c in l.coords)
        self.line = l
        self.field = f
        if u:
            self.origin = (-w / u, f.zero)
        else:
            self.origin = (f.zero, -w / v)
        self.dir = (-v, u)
        self._k = 0 if self.dir[0] else 1

    def param(self, p: ProjPoint) -> tuple[Scalar, Scalar]:
        if not self.line.contains(p):
            raise GeometryError(f"{p} is not on {self.line}")
        f = self.field
        if not p.is_finite:
            return f.one, f.zero
        xy = p.affine()
        k = self._k
        return (xy[k] - self.origin[k]) / self.dir[k], f.one

    def affine_param(self, p: ProjPoint) -> Scalar:
        t0, t1 = self.param(p)
        if not t1:
            raise GeometryError("point at infinity has no affine parameter")
        return t0 / t1

    def point(self, t0, t1=None) -> ProjPoint:
        f = self.field
        t0 = f(t0)
        t1 = f.one if t1 is None else f(t1)
        ox, oy = self.origin
        dx, dy = self.dir
        return point(t1 * ox + t0 * dx, t1 * oy + t0 * dy, t1, field=f)
