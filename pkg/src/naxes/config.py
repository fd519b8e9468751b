"""Cyclic n-gon configurations and their derived lines, points and axes.

Indices are 1-based and cyclic throughout: ``l(i)`` is the line through
A_{i-1} and A_{i+1}, ``B(i)`` is B_{i,i+1} = l_i meet l_{i+1}, and ``g(i)``
is the axis through A_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from .axis import CollinearQuad, bracket_point
from .circles import Circle, circle_tangent, circle_through
from .kernel import (
    QQ,
    Field,
    GeometryError,
    PencilResult,
    ProjLine,
    ProjPoint,
    incident,
    is_parallel,
    join,
    meet,
    parallel_through,
    pencil_of,
)


class ConfigError(GeometryError):
    """A point list violates one of the configuration assumptions.

    ``assumption`` is one of ``"size"``, ``"finite"``, ``"distinct"``,
    ``"i"``, ``"ii"``, ``"iii"`` (or ``"degenerate"`` for the collinear
    five-point case); ``index`` is the 1-based vertex index involved.
    """

    def __init__(self, assumption: str, index: Optional[int], message: str):
        self.assumption = assumption
        self.index = index
        super().__init__(message)


def cyc(seq: Sequence, i: int):
    """seq[i] for a 1-based cyclic index."""
    return seq[(i - 1) % len(seq)]


def side_line(points: Sequence[ProjPoint], i: int) -> ProjLine:
    """l_i = <A_{i-1}, A_{i+1}>."""
    return join(cyc(points, i - 1), cyc(points, i + 1))


def axis_via_parallels(points: Sequence[ProjPoint], i: int) -> tuple[ProjPoint, ProjLine]:
    """(E_i, g_i): E_i is the meet of the parallel to <A_i, A_{i+2}> through
    A_{i-1} with the parallel to <A_i, A_{i-2}> through A_{i+1}.

    Only A_{i-1}, A_i, A_{i+1} need be finite, so this also works on windows
    where A_{i +- 2} has been pushed to infinity.
    """
    a = cyc(points, i)
    e = meet(
        parallel_through(cyc(points, i - 1), join(a, cyc(points, i + 2))),
        parallel_through(cyc(points, i + 1), join(a, cyc(points, i - 2))),
    )
    return e, join(a, e)


def axis_via_bracket(points: Sequence[ProjPoint], i: int) -> tuple[ProjPoint, ProjLine]:
    """(C_i, g_i) with C_i = [A_{i-1}, B_{i-1,i} | B_{i,i+1}, A_{i+1}]."""
    li = side_line(points, i)
    q = CollinearQuad(
        li,
        cyc(points, i - 1),
        meet(side_line(points, i - 1), li),
        meet(li, side_line(points, i + 1)),
        cyc(points, i + 1),
    )
    c = bracket_point(q)
    return c, join(cyc(points, i), c)


@dataclass(frozen=True)
class NgonConfig:
    """A validated cyclic sequence A_1..A_n of finite points, n >= 5.

    Construct through :func:`validate`; the raw constructor performs no
    checks.
    """

    points: tuple[ProjPoint, ...]
    field: Field = QQ

    @property
    def n(self) -> int:
        return len(self.points)

    def A(self, i: int) -> ProjPoint:
        return cyc(self.points, i)

    def rotated(self, k: int) -> NgonConfig:
        """Relabel so that the old A_{k+1} becomes A_1."""
        k %= self.n
        return NgonConfig(self.points[k:] + self.points[:k], self.field)


@dataclass(frozen=True)
class DerivedData:
    config: NgonConfig
    lines: tuple[ProjLine, ...]
    Bs: tuple[ProjPoint, ...]
    Cs: tuple[ProjPoint, ...]
    Es: tuple[ProjPoint, ...]
    axes: tuple[ProjLine, ...]
    _circles: list = dc_field(default_factory=list, repr=False, compare=False)

    def l(self, i: int) -> ProjLine:
        return cyc(self.lines, i)

    def B(self, i: int) -> ProjPoint:
        """B_{i,i+1}."""
        return cyc(self.Bs, i)

    def C(self, i: int) -> ProjPoint:
        return cyc(self.Cs, i)

    def E(self, i: int) -> ProjPoint:
        return cyc(self.Es, i)

    def g(self, i: int) -> ProjLine:
        return cyc(self.axes, i)

    def circle(self, i: int) -> Circle:
        """c_{i,i+1}, the circle through A_i, B_{i,i+1}, A_{i+1}."""
        if not self._circles:
            self._circles.extend(consecutive_circles(self.config.points))
        return cyc(self._circles, i)


@dataclass(frozen=True)
class CenterResult:
    pencil: PencilResult
    subset: tuple[int, ...]

    @property
    def M(self) -> Optional[ProjPoint]:
        return self.pencil.center


def _coerce_points(points: Iterable[ProjPoint], field: Optional[Field]) -> tuple[tuple[ProjPoint, ...], Field]:
    pts = tuple(points)
    if not pts:
        raise ConfigError("size", None, "empty point list")
    f = field or pts[0].field
    for k, p in enumerate(pts, 1):
        if p.field != f:
            raise ConfigError("field", k, f"A_{k} is over {p.field}, expected {f}")
    return pts, f


def _check_distinct_finite(pts: Sequence[ProjPoint]) -> None:
    for k, p in enumerate(pts, 1):
        if not p.is_finite:
            raise ConfigError("finite", k, f"A_{k} lies at infinity")
    seen: dict[ProjPoint, int] = {}
    for k, p in enumerate(pts, 1):
        if p in seen:
            raise ConfigError("distinct", k, f"coincident vertices A_{seen[p]} and A_{k}")
        seen[p] = k


def validate(points: Iterable[ProjPoint], field: Optional[Field] = None) -> NgonConfig:
    """Check assumptions (i)-(iii) and return the configuration.

    Violations are reported in a fixed order: size, finiteness, distinct
    vertices, then (i), (ii), (iii), each by ascending index; the first one
    found is raised as :class:`ConfigError`.
    """
    pts, f = _coerce_points(points, field)
    n = len(pts)
    if n < 5:
        raise ConfigError("size", None, f"need at least 5 points, got {n}")
    _check_distinct_finite(pts)
    lines = [side_line(pts, i) for i in range(1, n + 1)]

    def l(i):
        return cyc(lines, i)

    for i in range(1, n + 1):
        a = cyc(pts, i)
        for j in (i - 2, i, i + 2):
            if incident(a, l(j)):
                jj = (j - 1) % n + 1
                raise ConfigError("i", i, f"assumption (i) fails at index {i}: A_{i} lies on l_{jj}")
    for i in range(1, n + 1):
        if l(i - 1) == l(i + 1):
            raise ConfigError("ii", i, f"assumption (ii) fails at index {i}: l_{(i - 2) % n + 1} = l_{i % n + 1}")
    for i in range(1, n + 1):
        if is_parallel(l(i), l(i + 1)):
            raise ConfigError("iii", i, f"assumption (iii) fails at index {i}: l_{i} is parallel to l_{i % n + 1}")
    return NgonConfig(pts, f)


def violates_iv(points: Sequence[ProjPoint]) -> Optional[int]:
    """First index i with A_i on one of l_{i-3}, l_{i-2}, l_i, l_{i+2}, l_{i+3}."""
    n = len(points)
    for i in range(1, n + 1):
        a = cyc(points, i)
        for j in (i - 3, i - 2, i, i + 2, i + 3):
            if incident(a, side_line(points, j)):
                return i
    return None


def validate_window(points: Sequence[ProjPoint]) -> None:
    """Assumptions (i)-(iii) restricted to instances whose indices all lie
    inside a non-cyclic window A_0..A_{m-1}. Raises ConfigError, with
    window-relative indices."""
    m = len(points)
    _check_distinct_finite(points)

    def inside(*idx):
        return all(0 <= k < m for k in idx)

    def l(i):
        return join(points[i - 1], points[i + 1])

    for i in range(m):
        for j in (i - 2, i, i + 2):
            if inside(j - 1, j + 1) and incident(points[i], l(j)):
                raise ConfigError("i", i, f"assumption (i) fails at window index {i}: A_{i} lies on l_{j}")
    for i in range(m):
        if inside(i - 2, i + 2) and l(i - 1) == l(i + 1):
            raise ConfigError("ii", i, f"assumption (ii) fails at window index {i}")
    for i in range(m):
        if inside(i - 1, i + 2) and is_parallel(l(i), l(i + 1)):
            raise ConfigError("iii", i, f"assumption (iii) fails at window index {i}")


def derive(cfg: NgonConfig) -> DerivedData:
    """All derived objects; each axis is built twice and the two must agree."""
    pts = cfg.points
    n = cfg.n
    lines = tuple(side_line(pts, i) for i in range(1, n + 1))
    Bs = []
    for i in range(1, n + 1):
        b = meet(lines[i - 1], lines[i % n])
        if not b.is_finite:
            raise ConfigError("iii", i, f"B_{i},{i % n + 1} lies at infinity")
        Bs.append(b)
    Cs, Es, axes = [], [], []
    for i in range(1, n + 1):
        c, g = axis_via_bracket(pts, i)
        e, g2 = axis_via_parallels(pts, i)
        if g != g2:
            raise AssertionError(f"axis g_{i} differs between constructions: {g} vs {g2}")
        Cs.append(c)
        Es.append(e)
        axes.append(g)
    return DerivedData(cfg, lines, tuple(Bs), tuple(Cs), tuple(Es), tuple(axes))


def center(cfg: NgonConfig, subset: Optional[Iterable[int]] = None, derived: Optional[DerivedData] = None) -> CenterResult:
    """The pencil formed by the axes g_i for i in ``subset`` (default: all)."""
    d = derived or derive(cfg)
    idx = tuple(range(1, cfg.n + 1)) if subset is None else tuple(subset)
    if len(idx) < 2:
        raise GeometryError("a center needs at least two axes")
    return CenterResult(pencil_of(d.g(i) for i in idx), idx)


def center_formula(A2: ProjPoint, A5: ProjPoint) -> ProjPoint:
    """Closed-form center for the frame A_1=(0:0:1), A_3=(0:1:1), A_4=(1:0:1)."""
    a, b, c = A2.coords
    x, y, z = A5.coords
    coords = (c * x, b * z, (c - b) * x + (a - c) * y + (c - a + b) * z)
    try:
        return ProjPoint(coords, A2.field)
    except GeometryError:
        raise GeometryError("center undefined") from None


def unit_frame(field: Field = QQ) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    """A_1, A_3, A_4 of the standard frame for :func:`center_formula`."""
    return ProjPoint((0, 0, 1), field), ProjPoint((0, 1, 1), field), ProjPoint((1, 0, 1), field)


def parallel_locus(A2: ProjPoint) -> ProjLine:
    """Positions of A_5 (standard frame) for which the center is at infinity."""
    a, b, c = A2.coords
    return ProjLine((c - b, a - c, c - a + b), A2.field)


def consecutive_circles(points: Sequence[ProjPoint]) -> list[Circle]:
    """c_{i,i+1} through A_i, B_{i,i+1}, A_{i+1}.

    When B_{i,i+1} coincides with a vertex (three consecutive points
    collinear) the circle is the one tangent at that vertex, matching the
    degenerate axis construction.
    """
    n = len(points)
    out = []
    for i in range(1, n + 1):
        ai, aj = cyc(points, i), cyc(points, i + 1)
        li, lj = side_line(points, i), side_line(points, i + 1)
        b = meet(li, lj)
        if b == aj:
            out.append(circle_tangent(ai, aj, li))
        elif b == ai:
            out.append(circle_tangent(aj, ai, lj))
        else:
            out.append(circle_through(ai, b, aj))
    return out
