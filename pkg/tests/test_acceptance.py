"""Acceptance suite: nine timed criteria, one PASS/FAIL line each.

Run under pytest (lines appear even with output capture on) or directly with
``python tests/test_acceptance.py``.
"""

import io
import random
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from naxes.axis import CollinearQuad, axis_from_outside, bracket_formulas, bracket_point, involution_image
from naxes.circles import radical_axis
from naxes.cli import main as cli_main
from naxes.cli.fileio import parse_config, serialize_config
from naxes.config import center, center_formula, derive, parallel_locus, unit_frame, validate
from naxes.genmove import (
    MoveChoice,
    expand,
    move_vertices,
    random_point,
    random_scalar,
    reduce,
    sample_degenerate_five,
    sample_pencil_config,
)
from naxes.kernel import GF, QQ, GeometryError, LineChart, PencilKind, fit_projectivity, incident, join, pencil_of, point
from naxes.theorems import check_degenerate_five, six_equivalence, zes_delta, zes_hexagon, zescond

from conftest import random_configs
from test_circles import axis_circles
from test_config import frame_pentagons
from test_theorems import diagonal_hexagon

P = GF(10007)


def quad_and_apex(rng, fld, kind):
    """kind: 'generic', 'PQ' (P = Q) or 'RS' (R = S)."""
    while True:
        a, b = random_point(rng, fld, 10), random_point(rng, fld, 10)
        if a == b:
            continue
        chart = LineChart(join(a, b))
        p, q, r, s = (random_scalar(rng, fld, 10, avoid=()) for _ in range(4))
        if kind == "PQ":
            q = p
        elif kind == "RS":
            s = r
        if r in (p, q) or s in (p, q) or (kind != "PQ" and p == q) or (kind != "RS" and r == s):
            continue
        A = random_point(rng, fld, 10)
        if incident(A, chart.line):
            continue
        return CollinearQuad(chart.line, *(chart.point(t) for t in (p, q, r, s))), A


# -- criteria ---------------------------------------------------------------------


def criterion_1():
    for fld in (QQ, P):
        for cfg in random_configs(5, fld, 500, seed=101):
            res = pencil_of(derive(cfg).axes)
            assert res.is_pencil, cfg


def criterion_2():
    rng = random.Random(202)
    kinds = ["PQ"] * 25 + ["RS"] * 25 + ["generic"] * 150
    for kind in kinds:
        q, A = quad_and_apex(rng, QQ, kind)
        g = axis_from_outside(q, A).g
        assert radical_axis(*axis_circles(q, A)) == g
        assert incident(bracket_point(q), g)


def criterion_3():
    rng = random.Random(303)
    for _ in range(500):
        q, _ = quad_and_apex(rng, QQ, rng.choice(["PQ", "RS", "generic", "generic"]))
        first, second, third = bracket_formulas(q)
        assert all(f == first for f in (second, third) if f is not None)
    done = 0
    while done < 500:
        q, _ = quad_and_apex(rng, QQ, "generic")
        C = bracket_point(q)
        chart = LineChart(q.l)
        X = chart.point(random_scalar(rng, QQ, 10, avoid=()))
        try:
            gx = involution_image(X, C, q.R, q.S, q.l)
        except GeometryError:
            continue
        assert involution_image(gx, C, q.R, q.S, q.l) == X
        assert involution_image(q.R, C, q.R, q.S, q.l) == q.S
        assert involution_image(chart.point(1, 0), C, q.R, q.S, q.l) == C
        done += 1


def criterion_4():
    for cfg in frame_pentagons(QQ, 100, 404):
        assert center_formula(cfg.A(2), cfg.A(5)) == center(cfg).M
    a1, a3, a4 = unit_frame()
    A2 = point(3, 2)
    rng = random.Random(405)
    pairs = []
    while len(pairs) < 24:
        A5 = point(rng.randint(-10, 10), rng.randint(-10, 10))
        try:
            M = center(validate([a1, A2, a3, a4, A5])).M
        except GeometryError:
            continue
        if M.is_finite:
            pairs.append((A5, M))
    h = fit_projectivity([a for a, _ in pairs[:4]], [m for _, m in pairs[:4]])
    assert all(h(a) == m for a, m in pairs[4:])
    chart = LineChart(parallel_locus(A2))
    hits = 0
    for t in range(-10, 11):
        try:
            cfg = validate([a1, A2, a3, a4, chart.point(t)])
        except GeometryError:
            continue
        assert center(cfg).pencil.kind is PencilKind.INFINITE
        hits += 1
    assert hits >= 5


def criterion_5():
    for k in range(100):
        pts = sample_degenerate_five(QQ, seed=505, index=k)
        assert incident(pts[4], join(pts[0], pts[3]))
        assert check_degenerate_five(pts).passed


def criterion_6():
    for cfg in random_configs(6, QQ, 100, seed=606):
        rep = six_equivalence(cfg)
        assert rep.agree and rep.as_tuple() == (False,) * 4
    rng = random.Random(607)
    for k in range(100):
        cfg, _ = diagonal_hexagon(rng, QQ, infinite=k % 2 == 1)
        rep = six_equivalence(cfg)
        assert rep.agree and rep.as_tuple() == (True,) * 4
    count = 0
    while count < 200:
        a, b, c, d, f = (Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(5))
        if count % 2:
            den = c * b - (a + b - 1) * d
            if not den:
                continue
            e = (1 - f) * c * b / den
        else:
            e = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        try:
            cond = zescond(a, b, c, d, e, f)
            zes_hexagon(QQ, a, b, c, d, e, f)
        except GeometryError:
            continue
        assert cond == (zes_delta(QQ, a, b, c, d, e, f) == 0)
        count += 1


def criterion_7():
    for fld in (QQ, P):
        for n in range(7, 13):
            for k in range(50):
                cfg = sample_pencil_config(n, fld, seed=700 + n, index=k)
                axes = derive(cfg).axes
                hyp = pencil_of(axes[: n - 3])
                assert hyp.is_pencil
                full = pencil_of(axes)
                assert full.is_pencil and full.center == hyp.center
                assert full.kind == hyp.kind


def criterion_8():
    rng = random.Random(808)
    done = 0
    while done < 50:
        fld = rng.choice([QQ, P])
        cfg = sample_pencil_config(rng.randint(5, 9), fld, seed=rng.randrange(10**6))
        at = rng.randint(1, cfg.n)
        try:
            big = expand(cfg, at, random_scalar(rng, fld, 5, avoid=(0, 1)))
        except GeometryError:
            continue
        assert big.n == cfg.n + 1 and reduce(big, at) == cfg
        done += 1
    done = 0
    while done < 100:
        cfg = sample_pencil_config(7, QQ, seed=rng.randrange(10**6))
        try:
            moved = move_vertices(cfg, MoveChoice(4, random_scalar(rng, QQ, 6, avoid=(0, 1))))
        except GeometryError:
            continue
        before, after = derive(cfg), derive(moved)
        assert after.g(5) == before.g(5)  # g_4 of the window A_1..A_7
        assert pencil_of(after.axes).center == pencil_of(before.axes).center
        done += 1


def criterion_9():
    tmp = Path(__import__("tempfile").mkdtemp(prefix="naxes-acc-"))
    for seed in (1, 2, 3):
        cfg_path, svg_path = tmp / f"s{seed}.json", tmp / f"s{seed}.svg"
        quiet = io.StringIO()
        with redirect_stdout(quiet):
            assert cli_main(["gen", "--n", "7", "--seed", str(seed), "--pencil", "-o", str(cfg_path)]) == 0
            assert cli_main(["verify", "-i", str(cfg_path), "--theorem", "main", "--all-fields"]) == 0
            assert cli_main(["render", "-i", str(cfg_path), "-o", str(svg_path)]) == 0
        assert svg_path.read_text().startswith("<svg")
        text = cfg_path.read_text()
        cf = parse_config(text)
        assert serialize_config(cf.points, cf.field, cf.metadata) == text
        again = io.StringIO()
        with redirect_stdout(again):
            cli_main(["gen", "--n", "7", "--seed", str(seed), "--pencil"])
        assert again.getvalue() == text


CRITERIA = [
    (1, "five axes concur on 1000 random pentagons", criterion_1, 10),
    (2, "radical axis equals the constructed axis", criterion_2, 5),
    (3, "bracket formulas agree and involution laws", criterion_3, 5),
    (4, "center formula, projectivity, parallel locus", criterion_4, 5),
    (5, "degenerate five axes", criterion_5, 5),
    (6, "six-axes four-way equivalence", criterion_6, 10),
    (7, "main theorem on pencil configs n=7..12", criterion_7, 60),
    (8, "reduce/expand round trip and vertex moves", criterion_8, None),
    (9, "CLI pipeline gen -> verify -> render", criterion_9, None),
]


def run(number, label, fn, limit):
    t0 = time.perf_counter()
    err = None
    try:
        fn()
    except Exception as exc:  # any error is a failed criterion
        err = exc
    dt = time.perf_counter() - t0
    if err is None and limit is not None and dt >= limit:
        err = AssertionError(f"took {dt:.2f}s, limit {limit}s")
    budget = f" (limit {limit}s)" if limit is not None else ""
    verdict = "PASS" if err is None else "FAIL"
    return f"criterion {number}: {verdict} {label} in {dt:.2f}s{budget}", err


@pytest.mark.parametrize("number,label,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, label, fn, limit, capsys):
    line, err = run(number, label, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    if err is not None:
        raise err


if __name__ == "__main__":
    failed = 0
    for crit in CRITERIA:
        line, err = run(*crit)
        print(line)
        failed += err is not None
    sys.exit(1 if failed else 0)
