"""Circles x^2 + y^2 + Dxz + Eyz + Fz^2 = 0 over a field of odd characteristic.

Circles are purely algebraic here, so everything works over GF(p) too.
The radical axis of two circles is the difference of their equations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import (
    Field,
    GeometryError,
    LineChart,
    ProjLine,
    ProjPoint,
    Scalar,
    incident,
    line,
    solve,
)


@dataclass(frozen=True)
class Circle:
    D: Scalar
    E: Scalar
    F: Scalar
    field: Field

    def __post_init__(self):
        if self.field.characteristic == 2:
            raise GeometryError("circles need characteristic != 2")

    def contains(self, X: ProjPoint) -> bool:
        return not power_of(X, self)

    def center(self) -> tuple[Scalar, Scalar]:
        return -self.D / 2, -self.E / 2

    def radius_squared(self) -> Scalar:
        cx, cy = self.center()
        return cx * cx + cy * cy - self.F


def circle_through(P1: ProjPoint, P2: ProjPoint, P3: ProjPoint) -> Circle:
    """The circle through three finite, non-collinear points."""
    f = P1.field
    rows, rhs = [], []
    for X in (P1, P2, P3):
        x, y = X.affine()
        rows.append([x, y, f.one])
        rhs.append(-(x * x + y * y))
    try:
        D, E, F = solve(f, rows, rhs)
    except ZeroDivisionError:
        raise GeometryError("degenerate circle") from None
    return Circle(D, E, F, f)


def circle_tangent(P: ProjPoint, A: ProjPoint, l: ProjLine) -> Circle:
    """The circle through P that touches the line l at the point A."""
    if not incident(A, l):
        raise GeometryError("tangency point is not on the line")
    if incident(P, l):
        raise GeometryError("point lies on the tangent line")
    f = P.field
    u, v = f.from_int(l[0]), f.from_int(l[1])
    ax, ay = A.affine()
    px, py = P.affine()
    # gradient at A is mu * (u, v); the incidence with P fixes mu
    dx, dy = px - ax, py - ay
    mu = -(dx * dx + dy * dy) / (u * dx + v * dy)
    D = mu * u - 2 * ax
    E = mu * v - 2 * ay
    F = ax * ax + ay * ay - mu * (u * ax + v * ay)
    return Circle(D, E, F, f)


def power_of(X: ProjPoint, c: Circle) -> Scalar:
    x, y = X.affine()
    return x * x + y * y + c.D * x + c.E * y + c.F


def radical_axis(c1: Circle, c2: Circle) -> ProjLine:
    dD, dE, dF = c1.D - c2.D, c1.E - c2.E, c1.F - c2.F
    if not dD and not dE:
        if not dF:
            raise GeometryError("identical circles")
        raise GeometryError("no finite radical axis")
    return line(dD, dE, dF, field=c1.field)


def restriction(c: Circle, l: ProjLine) -> tuple[LineChart, tuple[Scalar, Scalar, Scalar]]:
    """Coefficients (a, b, c0) of t -> c(origin + t*dir) = a t^2 + b t + c0."""
    chart = LineChart(l)
    ox, oy = chart.origin
    dx, dy = chart.dir
    a = dx * dx + dy * dy
    b = 2 * (ox * dx + oy * dy) + c.D * dx + c.E * dy
    c0 = ox * ox + oy * oy + c.D * ox + c.E * oy + c.F
    return chart, (a, b, c0)


def is_tangent_at(c: Circle, l: ProjLine, A: ProjPoint) -> bool:
    """True if c meets l in the double point A."""
    chart, (a, b, c0) = restriction(c, l)
    if not a:
        raise GeometryError("isotropic line")
    t = chart.affine_param(A)
    return not (b * b - 4 * a * c0) and (2 * a * t + b) == 0 and not power_of(A, c)
