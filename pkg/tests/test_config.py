import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from naxes.config import (
    ConfigError,
    NgonConfig,
    axis_via_parallels,
    center,
    center_formula,
    derive,
    parallel_locus,
    unit_frame,
    validate,
    validate_window,
    violates_iv,
)
from naxes.kernel import QQ, GeometryError, LineChart, PencilKind, ProjPoint, fit_projectivity, incident, point
from naxes.theorems import zes_hexagon

from conftest import FIELDS, field_ids, random_configs, seeds

# in the frame A_1=(0,0), A_3=(0,1), A_4=(1,0) with A_2=(2,1)
PENTAGON = [(0, 0), (2, 1), (0, 1), (1, 0), (1, 3)]
# same frame with A_5=(1,2): l_3 and l_4 both have slope 1
PARALLEL_PENTAGON = [(0, 0), (2, 1), (0, 1), (1, 0), (1, 2)]


def pts(coords, fld=QQ):
    return [point(*c, field=fld) for c in coords]


def assumption_of(points):
    try:
        validate(points)
    except ConfigError as exc:
        return exc.assumption, exc.index
    return None


def test_pentagon_valid_and_center():
    cfg = validate(pts(PENTAGON))
    r = center(cfg)
    assert r.pencil.kind is PencilKind.FINITE
    assert r.M == point(Fraction(1, 3), Fraction(1, 3))
    assert r.M == center_formula(point(2, 1), point(1, 3))


def test_parallel_side_lines_rejected():
    with pytest.raises(ConfigError, match=r"assumption \(iii\) fails at index 3") as exc:
        validate(pts(PARALLEL_PENTAGON))
    assert (exc.value.assumption, exc.value.index) == ("iii", 3)
    # the parallel construction still runs and gives the center (1/2, 1/2)
    p = pts(PARALLEL_PENTAGON)
    axes = [axis_via_parallels(p, i)[1] for i in range(1, 6)]
    from naxes.kernel import pencil_of

    assert pencil_of(axes).center == point(Fraction(1, 2), Fraction(1, 2))


def test_planted_violations():
    hexagon = pts([(0, 0), (1, 0), (2, 3), (0, 5), (-3, 2), (-1, 0)])
    assert assumption_of(hexagon) == ("i", 1)
    # l_2 = <A_1, A_3> parallel to l_3 = <A_2, A_4>
    pentagon = pts([(0, 0), (3, 0), (1, 1), (4, 1), (1, 5)])
    assert assumption_of(pentagon) == ("iii", 2)


def test_structural_errors():
    with pytest.raises(ConfigError, match="coincident vertices"):
        validate(pts([(0, 0), (1, 0), (0, 0), (2, 3), (5, 1)]))
    with pytest.raises(ConfigError, match="at least 5"):
        validate(pts([(0, 0), (1, 0), (2, 3), (5, 1)]))
    with pytest.raises(ConfigError, match="infinity"):
        validate(pts([(0, 0), (1, 0), (2, 3), (5, 1)]) + [ProjPoint((1, 1, 0), QQ)])


def test_ii_violation():
    # A_1, A_3, A_5 collinear makes l_2 = l_4 ... and also puts A_1 on l_4
    p = pts([(0, 0), (3, -1), (1, 1), (4, 5), (2, 2), (-2, 4)])
    a = assumption_of(p)
    assert a is not None and a[0] in ("i", "ii")


@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=5, max_size=8, unique=True))
def test_i_and_ii_iff_iv(coords):
    p = pts(coords)
    res = assumption_of(p)
    i_and_ii = res is None or res[0] == "iii"
    assert i_and_ii == (violates_iv(p) is None)


def test_i_and_ii_iff_iv_bulk():
    rng = random.Random(7)
    seen = {True: 0, False: 0}
    for _ in range(500):
        n = rng.randint(5, 8)
        coords = set()
        while len(coords) < n:
            coords.add((rng.randint(-3, 3), rng.randint(-3, 3)))
        p = pts(list(coords))
        res = assumption_of(p)
        ok = res is None or res[0] == "iii"
        assert ok == (violates_iv(p) is None)
        seen[ok] += 1
    assert seen[True] > 20 and seen[False] > 20


def test_derive_frame_examples():
    hexagon = zes_hexagon(QQ, 3, 2, 2, 3, 2, 5)
    d = derive(validate(hexagon))
    assert d.B(2) == point(Fraction(3, 5), Fraction(2, 5))
    assert d.B(1) == point(-3, -2)


def test_unit_frame_E1():
    a1, a3, a4 = unit_frame()
    for A2, A5 in [((2, 1, 1), (1, 3, 1)), ((10, 6, 5), (6, 9, 5)), ((3, 1, 2), (-2, 7, 3))]:
        a, b, c = A2
        x, y, z = A5
        cfg = validate([a1, ProjPoint(A2, QQ), a3, a4, ProjPoint(A5, QQ)])
        assert derive(cfg).E(1) == ProjPoint((c * x, b * z, c * z), QQ)


@pytest.mark.parametrize("fld", FIELDS, ids=field_ids)
@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_axis_constructions_agree(fld, n):
    for cfg in random_configs(n, fld, 15, seed=n):
        d = derive(cfg)  # asserts bracket and parallel axes coincide
        for i in range(1, n + 1):
            assert incident(cfg.A(i), d.g(i)) and incident(d.C(i), d.g(i)) and incident(d.E(i), d.g(i))
            assert incident(d.C(i), d.l(i)) and d.B(i).is_finite


def test_generic_hexagon_not_a_pencil():
    kinds = [center(cfg).pencil.kind for cfg in random_configs(6, QQ, 20, seed=3)]
    assert kinds.count(PencilKind.NONE) >= 18


@given(seeds, st.integers(1, 7), st.integers(1, 7))
def test_two_axes_always_have_a_center(seed, i, j):
    assume(i != j)
    from naxes.genmove import SampleParams, sample_config

    cfg = sample_config(SampleParams(7, QQ, seed))
    d = derive(cfg)
    assume(d.g(i) != d.g(j))
    assert center(cfg, [i, j], d).pencil.is_pencil


def test_rotation_relabels_axes():
    cfg = random_configs(7, QQ, 1, seed=9)[0]
    d, dr = derive(cfg), derive(cfg.rotated(2))
    assert all(dr.g(i) == d.g(i + 2) for i in range(1, 8))


def test_center_formula_examples():
    assert center_formula(ProjPoint((2, 1, 1), QQ), ProjPoint((1, 2, 1), QQ)) == ProjPoint((1, 1, 2), QQ)
    m = center_formula(point(2, Fraction(6, 5)), point(Fraction(6, 5), Fraction(9, 5)))
    assert m == point(Fraction(15, 22), Fraction(15, 22))
    assert center_formula(point(10, 6), point(6, 9)) == point(Fraction(1, 8), Fraction(1, 8))
    with pytest.raises(GeometryError, match="center undefined"):
        center_formula(ProjPoint((2, 3, 2), QQ), ProjPoint((0, 1, 0), QQ))


def frame_pentagons(fld, count, seed):
    rng = random.Random(seed)
    a1, a3, a4 = unit_frame(fld)
    out = []
    while len(out) < count:
        A2 = point(rng.randint(-10, 10), rng.randint(-10, 10), field=fld)
        A5 = point(rng.randint(-10, 10), rng.randint(-10, 10), field=fld)
        try:
            out.append(validate([a1, A2, a3, a4, A5], fld))
        except GeometryError:
            continue
    return out


@pytest.mark.parametrize("fld", FIELDS, ids=field_ids)
def test_center_formula_matches_center(fld):
    for cfg in frame_pentagons(fld, 100, 1):
        assert center_formula(cfg.A(2), cfg.A(5)) == center(cfg).M


def test_parallel_locus():
    A2 = point(3, 2)
    loc = parallel_locus(A2)
    a, b, c = A2.coords
    u, v, _ = loc.coords
    assert Fraction(-u, v) == Fraction(c - b, c - a)
    a1, a3, a4 = unit_frame()
    chart = LineChart(loc)
    hits = 0
    for t in range(-10, 11):
        A5 = chart.point(t)
        try:
            cfg = validate([a1, A2, a3, a4, A5])
        except GeometryError:
            continue
        hits += 1
        assert center(cfg).pencil.kind is PencilKind.INFINITE
    assert hits >= 5


def test_center_is_projective_in_A5():
    a1, a3, a4 = unit_frame()
    A2 = point(3, 2)
    rng = random.Random(11)
    pairs = []
    while len(pairs) < 24:
        A5 = point(rng.randint(-10, 10), rng.randint(-10, 10))
        try:
            cfg = validate([a1, A2, a3, a4, A5])
        except GeometryError:
            continue
        pairs.append((A5, center(cfg).M))
    h = fit_projectivity([p for p, _ in pairs[:4]], [m for _, m in pairs[:4]])
    assert all(h(p) == m for p, m in pairs[4:])


def test_validate_window_ignores_wraparound():
    # A_6 on <A_0, A_1> violates (i) cyclically, but no window instance
    # involves both ends
    p = pts([(-2, 4), (3, -3), (0, 4), (2, 5), (4, -4), (4, -5), (8, -10)])
    with pytest.raises(ConfigError):
        validate(p)
    validate_window(p)
    bad = list(p)
    bad[5] = point(1, 13)  # A_1, A_3, A_5 collinear, so l_2 = l_4
    with pytest.raises(ConfigError):
        validate_window(bad)


def test_raw_constructor_does_not_validate():
    cfg = NgonConfig(tuple(pts(PARALLEL_PENTAGON)))
    assert cfg.n == 5
    with pytest.raises(ConfigError):
        derive(cfg)
