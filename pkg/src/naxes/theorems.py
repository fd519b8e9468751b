"""Exact verifiers for the concurrence theorems.

Each ``check_*`` returns a :class:`VerifyReport`; the predicates
(``concur_condition``, ``zescond``, conic tests, ``hexagon_criterion``)
return plain booleans.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .axis import CollinearQuad, axis_degenerate, bracket_point, line_ratio
from .config import (
    ConfigError,
    NgonConfig,
    axis_via_bracket,
    axis_via_parallels,
    cyc,
    derive,
    side_line,
)
from .kernel import (
    Field,
    GeometryError,
    PencilKind,
    PencilResult,
    ProjLine,
    ProjPoint,
    Scalar,
    collinear,
    det,
    incident,
    is_parallel,
    join,
    meet,
    nonconcurrent_triple,
    pencil_of,
    point,
)

PASS = "pass"
FAIL = "fail"
NO_HYPOTHESIS = "hypothesis not satisfied"


@dataclass(frozen=True)
class VerifyReport:
    theorem: str
    verdict: str
    pencil: PencilResult
    witness: tuple[int, ...] = ()
    stats: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def _witness(axes: Sequence[ProjLine], indices: Sequence[int]) -> tuple[int, ...]:
    t = nonconcurrent_triple(axes)
    return tuple(indices[k] for k in t) if t else ()


def _report(theorem: str, axes: Sequence[ProjLine], indices: Sequence[int], fld: Field, **stats) -> VerifyReport:
    pencil = pencil_of(axes)
    ok = pencil.is_pencil
    return VerifyReport(
        theorem,
        PASS if ok else FAIL,
        pencil,
        () if ok else _witness(axes, indices),
        {"n": len(indices), "field": fld.tag, **stats},
    )


# -- five points ------------------------------------------------------------


def check_five_axes(cfg: NgonConfig) -> VerifyReport:
    """All five axes of a valid pentagon lie in one pencil."""
    if cfg.n != 5:
        raise ConfigError("size", None, f"five-axes check needs 5 points, got {cfg.n}")
    d = derive(cfg)
    return _report("five", d.axes, range(1, 6), cfg.field)


def validate_degenerate_five(points: Sequence[ProjPoint]) -> tuple[ProjPoint, ...]:
    """A_5 on <A_1, A_4>, no other collinear triple, l_i not parallel to l_{i+1}."""
    pts = tuple(points)
    if len(pts) != 5:
        raise ConfigError("size", None, f"need 5 points, got {len(pts)}")
    for k, p in enumerate(pts, 1):
        if not p.is_finite:
            raise ConfigError("finite", k, f"A_{k} lies at infinity")
    if len(set(pts)) != 5:
        raise ConfigError("distinct", None, "coincident vertices")
    if not collinear(pts[0], pts[3], pts[4]):
        raise ConfigError("degenerate", 5, "A_5 is not on <A_1, A_4>")
    for a in range(5):
        for b in range(a + 1, 5):
            for c in range(b + 1, 5):
                if (a, b, c) != (0, 3, 4) and collinear(pts[a], pts[b], pts[c]):
                    raise ConfigError("i", a + 1, f"A_{a + 1}, A_{b + 1}, A_{c + 1} are collinear")
    for i in range(1, 6):
        if is_parallel(side_line(pts, i), side_line(pts, i + 1)):
            raise ConfigError("iii", i, f"l_{i} is parallel to l_{i % 5 + 1}")
    return pts


def degenerate_five_axes(points: Sequence[ProjPoint]) -> tuple[ProjLine, ...]:
    """g_1..g_4 by the bracket construction, g_5 by the collinear-apex rule."""
    pts = validate_degenerate_five(points)
    axes = [axis_via_bracket(pts, i)[1] for i in range(1, 5)]
    g5 = axis_degenerate(pts[3], pts[0], pts[4], side_line(pts, 4), side_line(pts, 1)).g
    axes.append(g5)
    return tuple(axes)


def check_degenerate_five(points: Sequence[ProjPoint]) -> VerifyReport:
    axes = degenerate_five_axes(points)
    return _report("degen5", axes, range(1, 6), points[0].field)


# -- the concurrence condition ------------------------------------------------


@dataclass(frozen=True)
class ConcurInput:
    """Points with A, C, F, G collinear; C, E, H, I collinear; B, D, G, H collinear."""

    A: ProjPoint
    B: ProjPoint
    C: ProjPoint
    D: ProjPoint
    E: ProjPoint
    F: ProjPoint
    G: ProjPoint
    H: ProjPoint
    I: ProjPoint

    def __post_init__(self):
        if collinear(self.A, self.C, self.E):
            raise GeometryError("A, C, E are collinear")
        for names in ("ACFG", "CEHI", "BDGH"):
            pts = [getattr(self, k) for k in names]
            base = join(*_two_distinct(pts))
            if not all(incident(p, base) for p in pts):
                raise GeometryError(f"{', '.join(names)} are not collinear")

    @property
    def U(self) -> ProjPoint:
        return bracket_point(CollinearQuad(join(self.C, self.G), self.A, self.F, self.C, self.G))

    @property
    def V(self) -> ProjPoint:
        return bracket_point(CollinearQuad(join(self.B, self.G), self.H, self.D, self.B, self.G))

    @property
    def W(self) -> ProjPoint:
        return bracket_point(CollinearQuad(join(self.C, self.H), self.C, self.H, self.E, self.I))

    def lines(self) -> tuple[ProjLine, ProjLine, ProjLine]:
        return join(self.B, self.U), join(self.C, self.V), join(self.D, self.W)


def _two_distinct(pts):
    first = pts[0]
    return first, next(p for p in pts[1:] if p != first)


_FACTORS = (
    ("(B-G)/(B-H)", "B", "G", "B", "H"),
    ("(E-H)/(E-C)", "E", "H", "E", "C"),
    ("(F-C)/(F-G)", "F", "C", "F", "G"),
    ("(D-H)/(D-G)", "D", "H", "D", "G"),
    ("(A-G)/(A-C)", "A", "G", "A", "C"),
    ("(I-C)/(I-H)", "I", "C", "I", "H"),
)


def concur_sides(inp: ConcurInput) -> tuple[Scalar, Scalar]:
    """Left and right sides of the pencil criterion for <B,U>, <C,V>, <D,W>."""
    vals = []
    for name, p, q, r, s in _FACTORS:
        R, S = getattr(inp, r), getattr(inp, s)
        if R == S:
            raise GeometryError(f"degenerate ratio {name}")
        vals.append(line_ratio(getattr(inp, p), getattr(inp, q), R, S))
    return vals[0] * vals[1] * vals[2], vals[3] * vals[4] * vals[5]


def concur_condition(inp: ConcurInput, degenerate_AF: bool = False) -> bool:
    if degenerate_AF and inp.A != inp.F:
        raise GeometryError("degenerate variant requires A = F")
    lhs, rhs = concur_sides(inp)
    return lhs == rhs


def concur_pencil(inp: ConcurInput) -> PencilResult:
    return pencil_of(inp.lines())


def concur_from_degenerate(points: Sequence[ProjPoint]) -> ConcurInput:
    """The A = F instance inside a five-point configuration with A_5 on <A_1, A_4>:
    (B, C, D, E, A=F) = (A_1, A_2, A_3, A_4, A_5), (G, H, I) = (B_{1,2}, B_{2,3}, B_{3,4})."""
    pts = validate_degenerate_five(points)
    b12 = meet(side_line(pts, 1), side_line(pts, 2))
    b23 = meet(side_line(pts, 2), side_line(pts, 3))
    b34 = meet(side_line(pts, 3), side_line(pts, 4))
    return ConcurInput(A=pts[4], B=pts[0], C=pts[1], D=pts[2], E=pts[3], F=pts[4], G=b12, H=b23, I=b34)


# -- six points ---------------------------------------------------------------


def zescond(a, b, c, d, e, f) -> bool:
    """(e + f - 1) c b == (a + b - 1) d e, under the frame's nondegeneracy."""
    for cond, ok in (
        ("a + b != 0", a + b != 0),
        ("e + f != 0", e + f != 0),
        ("a != 0", a != 0),
        ("f != 0", f != 0),
        ("c + d != 1", c + d != 1),
    ):
        if not ok:
            raise GeometryError(f"nondegeneracy violated: {cond}")
    return (e + f - 1) * c * b == (a + b - 1) * d * e


def zes_delta(fld: Field, a, b, c, d, e, f) -> Scalar:
    """Determinant of the three main-diagonal line equations in the frame
    A_3=(0,0), A_2=(0,1), A_4=(1,0), A_1=(a,b), A_6=(c,d), A_5=(e,f)."""
    return det(fld, [[b, 1 - a, -b], [1 - f, e, -e], [d, -c, 0]])


def zes_hexagon(fld: Field, a, b, c, d, e, f) -> tuple[ProjPoint, ...]:
    """A_1..A_6 in that frame."""
    return (
        point(a, b, field=fld),
        point(0, 1, field=fld),
        point(0, 0, field=fld),
        point(1, 0, field=fld),
        point(e, f, field=fld),
        point(c, d, field=fld),
    )


def _conic_row(v: Sequence[int]) -> list[int]:
    x, y, z = v
    return [x * x, x * y, y * y, x * z, y * z, z * z]


def six_points_on_conic(points: Sequence[ProjPoint]) -> bool:
    """Vanishing of the 6x6 determinant of degree-2 monomials."""
    if len(points) != 6:
        raise GeometryError("need six points")
    fld = points[0].field
    return not det(fld, [_conic_row(p.coords) for p in points])


def six_lines_tangent_conic(lines: Sequence[ProjLine]) -> bool:
    """Dual test: the six lines touch a common conic."""
    if len(lines) != 6:
        raise GeometryError("need six lines")
    fld = lines[0].field
    if fld.characteristic == 2:
        raise GeometryError("tangent-conic test is not true in characteristic 2")
    return not det(fld, [_conic_row(l.coords) for l in lines])


@dataclass(frozen=True)
class SixReport:
    axes_pencil: bool
    triples: tuple[bool, ...]
    diagonals_pencil: bool
    on_conic: bool

    @property
    def some_triple(self) -> bool:
        return any(self.triples)

    @property
    def agree(self) -> bool:
        vals = {self.axes_pencil, self.some_triple, all(self.triples), self.diagonals_pencil, self.on_conic}
        return len(vals) == 1

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return self.axes_pencil, self.some_triple, self.diagonals_pencil, self.on_conic


def six_equivalence(cfg: NgonConfig) -> SixReport:
    if cfg.n != 6:
        raise ConfigError("size", None, f"six-point equivalence needs 6 points, got {cfg.n}")
    d = derive(cfg)
    axes_pencil = pencil_of(d.axes).is_pencil
    triples = tuple(pencil_of([d.g(i - 1), d.g(i), d.g(i + 1)]).is_pencil for i in range(1, 7))
    diagonals = pencil_of(join(cfg.A(i), cfg.A(i + 3)) for i in range(1, 4)).is_pencil
    conic = six_points_on_conic([d.B(i) for i in range(1, 7)])
    return SixReport(axes_pencil, triples, diagonals, conic)


def check_six(cfg: NgonConfig) -> VerifyReport:
    rep = six_equivalence(cfg)
    d = derive(cfg)
    pencil = pencil_of(d.axes)
    return VerifyReport(
        "six",
        PASS if rep.agree else FAIL,
        pencil,
        (),
        {"n": 6, "field": cfg.field.tag, "conditions": rep.as_tuple(), "triples": rep.triples},
    )


def criterion_lines(points: Sequence[ProjPoint], i: int) -> tuple[ProjLine, ProjLine, ProjLine]:
    """<A_{i-2}, A_{i+1}>, <A_{i-1}, A_{i+2}>, <A_i, D_i> with D_i = l_{i-2} meet l_{i+2}."""
    D = meet(side_line(points, i - 2), side_line(points, i + 2))
    return (
        join(cyc(points, i - 2), cyc(points, i + 1)),
        join(cyc(points, i - 1), cyc(points, i + 2)),
        join(cyc(points, i), D),
    )


def hexagon_criterion(points, i: int) -> bool:
    """Pencil test for g_{i-1}, g_i, g_{i+1} that avoids constructing the axes."""
    pts = points.points if isinstance(points, NgonConfig) else tuple(points)
    return pencil_of(criterion_lines(pts, i)).is_pencil


def axis_triple_pencil(points, i: int) -> bool:
    """Direct pencil test of g_{i-1}, g_i, g_{i+1} (parallel construction)."""
    pts = points.points if isinstance(points, NgonConfig) else tuple(points)
    return pencil_of(axis_via_parallels(pts, j)[1] for j in (i - 1, i, i + 1)).is_pencil


# -- main theorem -------------------------------------------------------------


def check_main(cfg: NgonConfig) -> VerifyReport:
    """If g_1..g_{n-3} lie in a pencil, so do all n axes, with the same center."""
    n = cfg.n
    d = derive(cfg)
    hyp_idx = list(range(1, n - 2))
    hyp = pencil_of(d.g(i) for i in hyp_idx)
    stats = {"n": n, "field": cfg.field.tag}
    if not hyp.is_pencil and hyp.kind is not PencilKind.DEGENERATE:
        return VerifyReport("main", NO_HYPOTHESIS, hyp, _witness([d.g(i) for i in hyp_idx], hyp_idx), stats)
    full = pencil_of(d.axes)
    same = full.is_pencil and (hyp.center is None or hyp.center == full.center)
    witness = () if same else _witness(d.axes, range(1, n + 1))
    return VerifyReport("main", PASS if same else FAIL, full, witness, stats)
