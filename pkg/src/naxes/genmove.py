"""Configuration samplers and vertex surgery.

``reduce`` merges A_3, A_4 into A_{3,4} = l_2 meet l_5; ``expand`` is its
inverse and keeps the axes' pencil; ``move_vertices`` slides A_3 along l_4
and re-derives A_2 so that the axes keep their pencil. Indices passed to
these functions are 1-based positions in the configuration, and the
relative labels A_1..A_6 in docstrings refer to the window around them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .config import ConfigError, NgonConfig, axis_via_parallels, validate, validate_window
from .theorems import validate_degenerate_five
from .kernel import (
    QQ,
    Field,
    GeometryError,
    LineChart,
    ProjPoint,
    Scalar,
    join,
    meet,
    parallel_through,
    pencil_of,
    point,
)


class SamplingError(RuntimeError):
    """The retry budget ran out."""


@dataclass(frozen=True)
class SampleParams:
    n: int
    field: Field = QQ
    seed: int = 0
    bound: int = 10
    max_retries: int = 10_000

    def __post_init__(self):
        if self.n < 5:
            raise ValueError("n must be at least 5")
        if self.bound < 5:
            raise ValueError("bound must be at least 5")


@dataclass(frozen=True)
class MoveChoice:
    """Slide the vertex at position ``i`` to A_i + t (A_{i+2} - A_i)."""

    i: int
    t: Scalar


def instance_rng(seed: int, index: int = 0) -> random.Random:
    """Independent, reproducible stream for instance ``index`` of a batch."""
    return random.Random(f"naxes:{seed}:{index}")


def random_point(rng: random.Random, fld: Field, bound: int) -> ProjPoint:
    return point(rng.randint(-bound, bound), rng.randint(-bound, bound), field=fld)


def random_scalar(rng: random.Random, fld: Field, bound: int, avoid=(0,)) -> Scalar:
    while True:
        v = fld(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))
        if all(v != fld(a) for a in avoid):
            return v


def _affine_combo(a: ProjPoint, b: ProjPoint, t) -> ProjPoint:
    """a + t (b - a) for finite a, b."""
    (ax, ay), (bx, by) = a.affine(), b.affine()
    return point(ax + t * (bx - ax), ay + t * (by - ay), field=a.field)


# -- samplers -----------------------------------------------------------------


def sample_config_counted(params: SampleParams, index: int = 0) -> tuple[NgonConfig, int]:
    """Rejection-sample a valid configuration; also return the attempt count."""
    rng = instance_rng(params.seed, index)
    for attempt in range(1, params.max_retries + 1):
        pts = [random_point(rng, params.field, params.bound) for _ in range(params.n)]
        try:
            return validate(pts, params.field), attempt
        except GeometryError:
            continue
    raise SamplingError("sampling budget exceeded")


def sample_config(params: SampleParams, index: int = 0) -> NgonConfig:
    return sample_config_counted(params, index)[0]


def _hypothesis_holds(cfg: NgonConfig) -> bool:
    n = cfg.n
    return pencil_of(axis_via_parallels(cfg.points, i)[1] for i in range(1, n - 2)).is_pencil


def sample_pencil_config(
    n: int,
    field: Field = QQ,
    seed: int = 0,
    bound: int = 10,
    max_retries: int = 500,
    index: int = 0,
) -> NgonConfig:
    """A valid n-gon whose axes lie in a pencil, grown from a random pentagon
    by repeated pencil-preserving vertex splits."""
    if n < 5:
        raise ValueError("n must be at least 5")
    rng = instance_rng(seed, index)
    budget = max_retries
    while budget > 0:
        budget -= 1
        pts = [random_point(rng, field, bound) for _ in range(5)]
        try:
            cfg = validate(pts, field)
        except GeometryError:
            continue
        while cfg.n < n and budget > 0:
            at = rng.randint(1, cfg.n)
            t1 = random_scalar(rng, field, 4, avoid=(0, 1))
            try:
                cfg = expand(cfg, at, t1)
            except GeometryError:
                budget -= 1
        if cfg.n == n and _hypothesis_holds(cfg):
            return cfg
    raise SamplingError("sampling budget exceeded")


def sample_hypothesis_config(
    n: int,
    field: Field = QQ,
    seed: int = 0,
    bound: int = 10,
    max_retries: int = 500,
    index: int = 0,
    infinite_center: bool = False,
) -> NgonConfig:
    """A valid n-gon (n >= 6) in which only g_1..g_{n-3} are forced through a
    common point M; nothing is assumed about the last three axes.

    Each forced axis g_i is imposed through its parallel construction:
    E_i is pinned to <A_i, M>, which fixes the direction of <A_i, A_{i+2}>.
    g_2 is unconstrained (M is drawn on it), g_3..g_{n-3} are imposed going
    forward and g_1 going backward; A_{n-1} is where both requirements meet.
    """
    if n < 6:
        raise ValueError("n must be at least 6")
    rng = instance_rng(seed, index)
    for _ in range(max_retries):
        A: dict[int, ProjPoint] = {}
        for k in (n, 1, 2, 3, 4):
            A[k] = random_point(rng, field, bound)

        def at(k):
            return A[(k - 1) % n + 1]

        try:
            seq = [at(k) for k in (n, 1, 2, 3, 4)]
            g2 = axis_via_parallels(seq, 3)[1]
            if infinite_center:
                M = g2.direction()
            else:
                chart = LineChart(g2)
                M = chart.point(random_scalar(rng, field, bound))

            def forced_line(i):
                # locus of A_{i+2} given A_{i-2}..A_{i+1} and g_i through M
                e = meet(join(at(i), M), parallel_through(at(i + 1), join(at(i), at(i - 2))))
                return parallel_through(at(i), join(at(i - 1), e))

            for i in range(3, n - 3):
                A[i + 2] = LineChart(forced_line(i)).point(random_scalar(rng, field, bound, avoid=()))
            last = forced_line(n - 3)
            e1 = meet(join(at(1), M), parallel_through(at(n), join(at(1), at(3))))
            back = parallel_through(at(1), join(at(2), e1))
            A[n - 1] = meet(last, back)
            cfg = validate([A[k] for k in range(1, n + 1)], field)
        except GeometryError:
            continue
        hyp = pencil_of(axis_via_parallels(cfg.points, i)[1] for i in range(1, n - 2))
        if hyp.is_pencil and hyp.center == M:
            return cfg
    raise SamplingError("sampling budget exceeded")


def sample_degenerate_five(
    field: Field = QQ,
    seed: int = 0,
    bound: int = 10,
    max_retries: int = 1000,
    index: int = 0,
) -> tuple[ProjPoint, ...]:
    """Five points with A_5 on <A_1, A_4> and no other collinear triple."""
    rng = instance_rng(seed, index)
    for _ in range(max_retries):
        a1, a2, a3, a4 = (random_point(rng, field, bound) for _ in range(4))
        if a1 == a4:
            continue
        a5 = _affine_combo(a1, a4, random_scalar(rng, field, bound, avoid=(0, 1)))
        try:
            return validate_degenerate_five([a1, a2, a3, a4, a5])
        except GeometryError:
            continue
    raise SamplingError("sampling budget exceeded")


# -- merge / split ------------------------------------------------------------


def _window(cfg: NgonConfig, at: int) -> list[ProjPoint]:
    """Points relabelled so that position ``at`` becomes relative A_3."""
    return [cfg.A(at - 2 + j) for j in range(cfg.n)]


def _place(rel: Sequence[ProjPoint], at: int) -> list[ProjPoint]:
    m = len(rel)
    out: list[Optional[ProjPoint]] = [None] * m
    for j, p in enumerate(rel):
        out[(at - 3 + j) % m] = p
    return out  # type: ignore[return-value]


def merge_point(cfg: NgonConfig, at: int) -> ProjPoint:
    """A_{3,4} = l_2 meet l_5 relative to ``at`` (possibly at infinity)."""
    r = _window(cfg, at)
    return meet(join(r[0], r[2]), join(r[3], r[5 % cfg.n]))


def reduce(cfg: NgonConfig, at: int) -> NgonConfig:
    """Replace the vertices at positions ``at`` and ``at + 1`` by their merge point."""
    if cfg.n < 6:
        raise ConfigError("size", None, "reduction needs at least 6 points")
    x = merge_point(cfg, at)
    if not x.is_finite:
        raise GeometryError("merge point at infinity, perturb first")
    r = _window(cfg, at)
    rel = r[:2] + [x] + r[4:]
    return validate(_place(rel, at), cfg.field)


def expand(cfg: NgonConfig, at: int, t1, t2=None) -> NgonConfig:
    """Split the vertex X at position ``at`` into two vertices A_3, A_4.

    A_3 = A_1 + t1 (X - A_1). With ``t2`` given, A_4 = A_6 + t2 (X - A_6);
    otherwise A_4 is solved so that every axis of the result passes through
    the common point of the reduced axes at A_2 and X, which preserves an
    existing pencil. Either way reduce(result, at) == cfg.
    """
    f = cfg.field
    r = _window(cfg, at)
    a1, a2, x, a5, a6 = r[0], r[1], r[2], r[3], r[4 % cfg.n]
    a3 = _affine_combo(a1, x, f(t1))
    if t2 is not None:
        a4 = _affine_combo(a6, x, f(t2))
    else:
        g2 = axis_via_parallels(r, 2)[1]
        gx = axis_via_parallels(r, 3)[1]
        m = meet(g2, gx)
        l2 = join(a1, x)
        e3 = meet(join(a3, m), parallel_through(a2, join(a3, a5)))
        a4 = meet(parallel_through(e3, l2), join(x, a6))
        if not a4.is_finite:
            raise GeometryError("split vertex lands at infinity")
    rel = [a1, a2, a3, a4] + r[3:]
    out = validate(_place(rel, at), f)
    if merge_point(out, at) != x:
        raise GeometryError("split is not inverted by the merge")
    return out


# -- vertex move --------------------------------------------------------------


def forbidden_positions(window: Sequence[ProjPoint]) -> list[tuple[str, ProjPoint]]:
    """Named positions on l_4 that A_3' must avoid (window A_0..A_6)."""
    w = window

    def l(k):
        return join(w[k - 1], w[k + 1])

    l4 = l(4)
    cands = [
        ("B_{3,4}", lambda: meet(l(3), l4)),
        ("<A_1,A_2> meet l_4", lambda: meet(join(w[1], w[2]), l4)),
        ("A_5", lambda: w[5]),
        ("<A_0,A_1> meet l_4", lambda: meet(join(w[0], w[1]), l4)),
        ("l_1 meet l_4", lambda: meet(l(1), l4)),
        ("l_5 meet l_4", lambda: meet(l(5), l4)),
        ("<A_1,A_4> meet l_4", lambda: meet(join(w[1], w[4]), l4)),
        ("l_4 meet m_1", lambda: meet(parallel_through(w[1], l(1)), l4)),
    ]
    out = []
    for name, make in cands:
        try:
            out.append((name, make()))
        except GeometryError:
            continue
    return out


def move_vertices(window, choice: MoveChoice):
    """Apply a vertex move to a seven-point window A_0..A_6 (``choice.i``
    must be 3) or to a full configuration (see :func:`move_in_config`)."""
    if isinstance(window, NgonConfig):
        return move_in_config(window, choice)
    if choice.i != 3:
        raise GeometryError("a window move always moves A_2 and A_3")
    return move_window(window, choice.t)


def move_window(window: Sequence[ProjPoint], t) -> list[ProjPoint]:
    """Move A_3 to A_3' = A_3 + t (A_5 - A_3) on l_4 and A_2 to
    A_2' = l_1 meet <P, A_3> with P = <A_1, A_4> meet <A_2, A_3'>.

    The window A_0..A_6 must satisfy the assumptions within its indices and
    have g_2, g_3, g_4 in a pencil. Afterwards g_4 is unchanged and the new
    g_2, g_3 pass through the same center.
    """
    w = list(window)
    if len(w) != 7:
        raise GeometryError("move needs a window of seven points A_0..A_6")
    validate_window(w)
    # the window is 0-based, the axis helper 1-based
    if not pencil_of(axis_via_parallels(w, i + 1)[1] for i in (2, 3, 4)).is_pencil:
        raise GeometryError("g_2, g_3, g_4 do not lie in a pencil")
    f = w[0].field
    a3p = _affine_combo(w[3], w[5], f(t))
    for name, bad in forbidden_positions(w):
        if a3p == bad:
            raise GeometryError(f"forbidden position: A_3' = {name}")
    P = meet(join(w[1], w[4]), join(w[2], a3p))
    a2p = meet(join(w[0], w[2]), join(P, w[3]))
    if not a2p.is_finite:
        raise GeometryError("A_2' lies at infinity")
    out = w[:2] + [a2p, a3p] + w[4:]
    validate_window(out)
    return out


def move_in_config(cfg: NgonConfig, choice: MoveChoice) -> NgonConfig:
    """Apply :func:`move_window` to the window centred on position ``choice.i``
    (moving positions i-1 and i) and revalidate the whole configuration."""
    if cfg.n < 7:
        raise ConfigError("size", None, "vertex move needs at least 7 points")
    i = choice.i
    window = [cfg.A(i - 3 + k) for k in range(7)]
    moved = move_window(window, choice.t)
    pts = list(cfg.points)
    pts[(i - 2) % cfg.n] = moved[2]
    pts[(i - 1) % cfg.n] = moved[3]
    return validate(pts, cfg.field)


def random_move(cfg: NgonConfig, i: int, rng: random.Random, max_retries: int = 50) -> tuple[NgonConfig, MoveChoice]:
    """Try random parameters until a move is admissible."""
    for _ in range(max_retries):
        choice = MoveChoice(i, random_scalar(rng, cfg.field, 6, avoid=(0, 1)))
        try:
            return move_in_config(cfg, choice), choice
        except GeometryError:
            continue
    raise SamplingError("no admissible move found within the retry budget")
