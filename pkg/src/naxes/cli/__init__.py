"""Command-line front end.

Subcommands: gen, verify, render, reduce, expand, move. Exit codes:
0 pass, 1 theorem failed or hypothesis not satisfied, 2 invalid input,
3 sampling budget exceeded. The default seed comes from ``NAXES_SEED``.
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from ..config import NgonConfig, validate
from ..genmove import MoveChoice, SampleParams, SamplingError, expand, move_vertices, reduce, sample_config, sample_pencil_config
from ..kernel import GF, QQ, FieldError, GeometryError, RationalField
from ..theorems import check_degenerate_five, check_five_axes, check_main, check_six
from .fileio import ConfigFile, FileFormatError, parse_scalar, read_config, serialize_config

EXIT_PASS, EXIT_FAIL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

# extra fields tried by ``verify --all-fields`` on rational inputs
CHECK_PRIMES = (10007, 1000003)

THEOREMS = {
    "five": check_five_axes,
    "six": check_six,
    "main": check_main,
}


def default_seed() -> int:
    try:
        return int(os.environ.get("NAXES_SEED", "0"))
    except ValueError:
        return 0


class _InvalidInput(Exception):
    pass


def _load(path: str) -> ConfigFile:
    try:
        return read_config(path)
    except (FileFormatError, FieldError) as exc:
        raise _InvalidInput(str(exc)) from None


def _config(cf: ConfigFile) -> NgonConfig:
    try:
        return validate(cf.points, cf.field)
    except GeometryError as exc:
        raise _InvalidInput(str(exc)) from None


def _reduce_mod(cf: ConfigFile, p: int) -> Optional[ConfigFile]:
    """The same integral triples read in GF(p); None if a point vanishes."""
    fld = GF(p)
    try:
        pts = tuple(type(q)(q.coords, fld) for q in cf.points)
    except GeometryError:
        return None
    return ConfigFile(fld, pts, cf.metadata)


def _check(cf: ConfigFile, theorem: str) -> dict:
    try:
        if theorem == "degen5":
            rep = check_degenerate_five(cf.points)
        else:
            rep = THEOREMS[theorem](_config(cf))
    except (_InvalidInput, GeometryError) as exc:
        return {"field": cf.field.tag, "verdict": "invalid", "error": str(exc)}
    center = rep.pencil.center
    out = {
        "field": cf.field.tag,
        "theorem": rep.theorem,
        "verdict": rep.verdict,
        "pencil": rep.pencil.kind.value,
        "center": str(center) if center is not None else None,
        "witness": list(rep.witness),
    }
    if "conditions" in rep.stats:
        out["conditions"] = list(rep.stats["conditions"])
    return out


def verify_file(path: str, theorem: str, all_fields: bool) -> dict:
    """Verify one file; returns a JSON-ready record (runs in worker processes)."""
    try:
        cf = _load(path)
    except _InvalidInput as exc:
        return {"input": path, "results": [{"verdict": "invalid", "error": str(exc)}]}
    results = [_check(cf, theorem)]
    if all_fields and isinstance(cf.field, RationalField):
        for p in CHECK_PRIMES:
            red = _reduce_mod(cf, p)
            if red is None:
                results.append({"field": f"prime {p}", "verdict": "skipped", "error": "reduction vanishes"})
                continue
            r = _check(red, theorem)
            if r["verdict"] == "invalid":
                # bad reduction of a valid rational input is not a failure
                r = {"field": f"prime {p}", "verdict": "skipped", "error": r["error"]}
            results.append(r)
    return {"input": path, "results": results}


def _exit_code(records: Sequence[dict]) -> int:
    # only the input's own field decides validity; reductions may be skipped
    if any(rec["results"][0]["verdict"] == "invalid" for rec in records):
        return EXIT_INVALID
    verdicts = [r["verdict"] for rec in records for r in rec["results"]]
    if any(v not in ("pass", "skipped") for v in verdicts):
        return EXIT_FAIL
    return EXIT_PASS


def _format(rec: dict) -> list[str]:
    lines = []
    for r in rec["results"]:
        head = f"{rec['input']} [{r.get('field', '?')}]"
        if r["verdict"] in ("invalid", "skipped"):
            lines.append(f"{head}: {r['verdict']}: {r['error']}")
            continue
        line = f"{head}: {r['theorem']} {r['verdict']}; pencil {r['pencil']}"
        if r["center"]:
            line += f"; center {r['center']}"
        if r["witness"]:
            line += "; non-concurrent axes " + ", ".join(f"g_{i}" for i in r["witness"])
        if "conditions" in r:
            line += "; conditions " + ", ".join(str(c).lower() for c in r["conditions"])
        lines.append(line)
    return lines


# -- subcommands --------------------------------------------------------------


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    try:
        fld = GF(args.prime) if args.prime is not None else QQ
    except FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    seed = default_seed() if args.seed is None else args.seed
    try:
        if args.pencil:
            cfg = sample_pencil_config(args.n, fld, seed, bound=args.bound, index=args.index)
        else:
            cfg = sample_config(SampleParams(args.n, fld, seed, bound=args.bound), args.index)
    except SamplingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    meta = {"seed": seed, "index": args.index, "generator": "pencil" if args.pencil else "uniform", "bound": args.bound}
    _emit(serialize_config(cfg.points, fld, meta), args.output)
    return EXIT_PASS


def cmd_verify(args) -> int:
    paths = list(args.input or [])
    if args.batch:
        found = sorted(glob.glob(os.path.join(args.batch, "*.json")))
        if not found:
            raise _InvalidInput(f"{args.batch}: no .json files")
        paths += found
    if not paths:
        raise _InvalidInput("verify needs --input or --batch")
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(verify_file, paths, [args.theorem] * len(paths), [args.all_fields] * len(paths)))
    else:
        records = [verify_file(p, args.theorem, args.all_fields) for p in paths]
    for rec in records:
        for line in _format(rec):
            print(line)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(records, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return _exit_code(records)


def _parse_box(text: str):
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("viewbox needs four numbers x0,y0,x1,y1") from None
    if len(vals) != 4 or vals[0] >= vals[2] or vals[1] >= vals[3]:
        raise argparse.ArgumentTypeError("viewbox needs four numbers x0,y0,x1,y1 with x0<x1, y0<y1")
    return vals


def cmd_render(args) -> int:
    from .render import RenderOptions, render_svg

    cf = _load(args.input)
    opts = RenderOptions(
        show_circles=not args.no_circles,
        show_axes=not args.no_axes,
        show_parallel_construction=args.parallels,
        viewbox=args.viewbox,
    )
    try:
        svg = render_svg(cf.points, opts)
    except GeometryError as exc:
        raise _InvalidInput(str(exc)) from None
    _emit(svg, args.output)
    return EXIT_PASS


def _scalar(text: str, fld, name: str):
    try:
        return fld(parse_scalar(text, name))
    except (FileFormatError, ZeroDivisionError) as exc:
        raise _InvalidInput(str(exc)) from None


def _surgery(args, op) -> int:
    cf = _load(args.input)
    cfg = _config(cf)
    try:
        out = op(cfg, cf.field)
    except GeometryError as exc:
        raise _InvalidInput(str(exc)) from None
    _emit(serialize_config(out.points, cf.field, cf.metadata), args.output)
    return EXIT_PASS


def cmd_reduce(args) -> int:
    return _surgery(args, lambda cfg, fld: reduce(cfg, args.at))


def cmd_expand(args) -> int:
    def op(cfg, fld):
        t2 = None if args.t2 is None else _scalar(args.t2, fld, "--t2")
        return expand(cfg, args.at, _scalar(args.t1, fld, "--t1"), t2)

    return _surgery(args, op)


def cmd_move(args) -> int:
    return _surgery(args, lambda cfg, fld: move_vertices(cfg, MoveChoice(args.index, _scalar(args.t, fld, "--t"))))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="naxes", description="Exact verification of n-axes concurrence.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="sample a configuration")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=None, help="default: $NAXES_SEED or 0")
    g.add_argument("--index", type=int, default=0, help="instance index within the seed's stream")
    g.add_argument("--pencil", action="store_true", help="force g_1..g_{n-3} into a pencil")
    g.add_argument("--prime", type=int, default=None)
    g.add_argument("--bound", type=int, default=10)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="verify a theorem on configuration files")
    v.add_argument("--input", "-i", action="append")
    v.add_argument("--batch", help="verify every .json file in this directory")
    v.add_argument("--theorem", choices=["five", "degen5", "six", "main"], required=True)
    v.add_argument("--all-fields", action="store_true", help="also check rational inputs mod large primes")
    v.add_argument("--report", help="write a JSON report")
    v.add_argument("--jobs", "-j", type=int, default=1, help="worker processes; output keeps input order")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a rational configuration as SVG")
    r.add_argument("--input", "-i", required=True)
    r.add_argument("--output", "-o")
    r.add_argument("--no-circles", action="store_true")
    r.add_argument("--no-axes", action="store_true")
    r.add_argument("--parallels", action="store_true", help="draw the parallel construction of each axis")
    r.add_argument("--viewbox", type=_parse_box, default=None)
    r.set_defaults(func=cmd_render)

    for name, func, helptext in (
        ("reduce", cmd_reduce, "merge the vertices at positions AT and AT+1"),
        ("expand", cmd_expand, "split the vertex at position AT"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--input", "-i", required=True)
        s.add_argument("--at", type=int, required=True)
        s.add_argument("--output", "-o")
        if name == "expand":
            s.add_argument("--t1", required=True)
            s.add_argument("--t2", default=None, help="place the second vertex freely (no pencil guarantee)")
        s.set_defaults(func=func)

    m = sub.add_parser("move", help="slide the vertex at INDEX along l_{INDEX+1}")
    m.add_argument("--input", "-i", required=True)
    m.add_argument("--index", type=int, required=True)
    m.add_argument("--t", required=True)
    m.add_argument("--output", "-o")
    m.set_defaults(func=cmd_move)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except _InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SamplingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
