"""Affine axis constructions on a line.

Given two pairs (P, Q) and (R, S) of finite points on a line l and an apex
A off the line, the axis is the line through A and the intersection B of
the parallel to <A, R> through P with the parallel to <A, Q> through S.
It meets l in the bracket point [P, Q | R, S], which depends only on the
two unordered pairs. The involution of l that swaps P <-> Q and R <-> S
sends the point at infinity of l to that bracket point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .kernel import (
    GeometryError,
    LineChart,
    ProjLine,
    ProjPoint,
    Scalar,
    incident,
    join,
    meet,
    parallel_through,
)


@dataclass(frozen=True)
class CollinearQuad:
    """Two pairs of finite points (P, Q), (R, S) on the line l.

    P == Q and R == S are allowed; R and S must avoid both P and Q.
    """

    l: ProjLine
    P: ProjPoint
    Q: ProjPoint
    R: ProjPoint
    S: ProjPoint

    def __post_init__(self):
        if self.l.is_infinity:
            raise GeometryError("base line is the line at infinity")
        for name in "PQRS":
            pt = getattr(self, name)
            if not pt.is_finite:
                raise GeometryError(f"{name} lies at infinity")
            if not incident(pt, self.l):
                raise GeometryError(f"{name} is not on the base line")
        if {self.R, self.S} & {self.P, self.Q}:
            raise GeometryError("R and S may not coincide with P or Q")

    @classmethod
    def through(cls, P, Q, R, S) -> CollinearQuad:
        """Build the quad on the line spanned by its distinct points."""
        base = join(P, R)
        return cls(base, P, Q, R, S)


@dataclass(frozen=True)
class AxisResult:
    B: ProjPoint
    g: ProjLine
    C: ProjPoint


def _diff(a, b):
    return a[0] - b[0], a[1] - b[1]


def line_ratio(P: ProjPoint, Q: ProjPoint, R: ProjPoint, S: ProjPoint) -> Scalar:
    """The scalar lambda with P - Q = lambda (R - S) for collinear points.

    One point at infinity is allowed only in the form (P - Q)/(P - R) with
    P infinite and Q, R distinct and finite; the ratio is then 1.
    """
    finite = [X.is_finite for X in (P, Q, R, S)]
    if not all(finite):
        if P == R and not finite[0] and finite[1] and finite[3] and Q != S:
            if not incident(P, join(Q, S)):
                raise GeometryError("points are not collinear")
            return P.field.one
        raise GeometryError("undefined ratio")
    if R == S:
        raise GeometryError("R and S coincide")
    num = _diff(P.affine(), Q.affine())
    den = _diff(R.affine(), S.affine())
    k = 0 if den[0] else 1
    lam = num[k] / den[k]
    if num[1 - k] != lam * den[1 - k]:
        raise GeometryError("points are not collinear")
    return lam


def bracket_point(q: CollinearQuad) -> ProjPoint:
    """C = [P, Q | R, S], solving (C - Q)/(C - R) = (Q - S)/(R - P).

    Returns the point at infinity of l when the right-hand side is 1.
    """
    chart = LineChart(q.l)
    p, qq, r, s = (chart.affine_param(X) for X in (q.P, q.Q, q.R, q.S))
    k = (qq - s) / (r - p)
    return chart.point(qq - k * r, 1 - k)


def bracket_formulas(q: CollinearQuad) -> tuple[ProjPoint, Optional[ProjPoint], Optional[ProjPoint]]:
    """The three equivalent characterisations of the bracket point.

    The second needs P != Q, the third R != S; unavailable ones are None.
    """
    chart = LineChart(q.l)
    p, qq, r, s = (chart.affine_param(X) for X in (q.P, q.Q, q.R, q.S))
    first = bracket_point(q)
    second = third = None
    if q.P != q.Q:
        m = ((r - qq) / (r - p)) * ((s - qq) / (s - p))
        second = chart.point(qq - m * p, 1 - m)
    if q.R != q.S:
        m = ((qq - s) / (qq - r)) * ((p - s) / (p - r))
        third = chart.point(s - m * r, 1 - m)
    return first, second, third


def axis_from_outside(q: CollinearQuad, A: ProjPoint) -> AxisResult:
    """The axis of the quad seen from a finite apex A off the base line."""
    if not A.is_finite:
        raise GeometryError("apex lies at infinity")
    if incident(A, q.l):
        raise GeometryError("apex on base line")
    lp = parallel_through(q.P, join(A, q.R))
    ls = parallel_through(q.S, join(A, q.Q))
    B = meet(lp, ls)
    g = join(A, B)
    return AxisResult(B, g, meet(g, q.l))


def axis_degenerate(P: ProjPoint, S: ProjPoint, A: ProjPoint, lQ: ProjLine, lR: ProjLine) -> AxisResult:
    """Axis when the apex A lies on the base line <P, S>.

    B is the meet of the parallel to lR through P with the parallel to lQ
    through S, and the axis is <A, B>. If lQ == lR, B is the common point at
    infinity and the axis is lQ itself.
    """
    for name, X in (("P", P), ("S", S), ("A", A)):
        if not X.is_finite:
            raise GeometryError(f"{name} lies at infinity")
    if A in (P, S):
        raise GeometryError("apex coincides with P or S")
    base = join(P, S)
    if not incident(A, base):
        raise GeometryError("apex is not on <P, S>")
    for name, m in (("lQ", lQ), ("lR", lR)):
        if not incident(A, m):
            raise GeometryError(f"{name} does not pass through the apex")
        if m == base:
            raise GeometryError(f"{name} equals the base line")
    B = meet(parallel_through(P, lR), parallel_through(S, lQ))
    g = join(A, B)
    return AxisResult(B, g, A)


def involution_image(X: ProjPoint, C: ProjPoint, R: ProjPoint, S: ProjPoint, l: ProjLine) -> ProjPoint:
    """gamma(X) for the involution of l with C = [X, gamma(X) | R, S].

    X and C may be at infinity; R and S are distinct finite points of l and
    C must differ from both.
    """
    if R == S:
        raise GeometryError("R and S coincide")
    if not (R.is_finite and S.is_finite):
        raise GeometryError("R and S must be finite")
    if C in (R, S):
        raise GeometryError("center coincides with R or S")
    chart = LineChart(l)
    r, s = chart.affine_param(R), chart.affine_param(S)
    c0, c1 = chart.param(C)
    x0, x1 = chart.param(X)
    # gamma is the symmetric bilinear relation c1*x*y - c0*(x + y) + c0*(r + s) - c1*r*s = 0
    const = c0 * (r + s) - c1 * r * s
    return chart.point(c0 * x0 - const * x1, c1 * x0 - c0 * x1)
