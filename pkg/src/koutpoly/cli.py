"""Command-line front end: ``koutpoly --input pts.txt --k 2 --format count``."""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from .enumerator import EnumConfig, Schedule, enumerate_polygons
from .geom import (
    GeometryError,
    PointSet,
    Polygon,
    canonical_form,
    convex_hull,
    parse_points,
    validate_point_set,
)
from .oracle import MAX_N, oracle_enumerate


class GenerationFailed(RuntimeError):
    pass


@dataclass
class RunSpec:
    input: Optional[str] = None
    random_n: Optional[int] = None
    seed: int = 0
    range: int = 100
    convex: bool = False
    k: int = 0
    mode: str = "enumerate"
    format: str = "indices"
    svg: Optional[str] = None
    schedule: str = "preorder"
    stats: bool = False


def generate_points(n: int, seed: int, coord_range: int = 100, convex: bool = False, retries: int = 1000) -> PointSet:
    """Deterministic pseudorandom point set in general position."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    for _ in range(retries):
        if convex:
            # jittered angles on a circle, rounded to the integer grid
            angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
            pts = [(round(coord_range * math.cos(a)), round(coord_range * math.sin(a))) for a in angles]
        else:
            pts = [(rng.randint(0, coord_range), rng.randint(0, coord_range)) for _ in range(n)]
        try:
            ps = validate_point_set(pts)
        except GeometryError:
            continue
        if convex and len(convex_hull(ps).verts) != n:
            continue
        return ps
    raise GenerationFailed(f"no general-position set of {n} points in range {coord_range} after {retries} tries")


def emit_svg(ps: PointSet, P: Optional[Polygon], path) -> None:
    """Write an SVG of the point set, optionally with one polygon drawn over it."""
    xs = [x for x, _ in ps.points]
    ys = [y for _, y in ps.points]
    w = max(max(xs) - min(xs), 1)
    h = max(max(ys) - min(ys), 1)
    pad_x, pad_y = 0.05 * w, 0.05 * h
    x0 = min(xs) - pad_x
    vw, vh = w + 2 * pad_x, h + 2 * pad_y
    r = 0.012 * max(vw, vh)

    # the group transform flips y so the picture has the usual orientation
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{x0:g} {min(ys) - pad_y:g} {vw:g} {vh:g}">',
        f'<g transform="translate(0 {max(ys) + min(ys):g}) scale(1 -1)">',
    ]
    inside = outside = frozenset()
    verts: tuple[int, ...] = ()
    if P is not None:
        inside, outside, verts = P.inside, P.outside, P.verts
        d = " ".join(("M" if i == 0 else "L") + f"{ps[v][0]} {ps[v][1]}" for i, v in enumerate(verts)) + " Z"
        parts.append(
            f'<path class="polygon" d="{d}" fill="#cde" fill-opacity="0.5" '
            f'stroke="#124" stroke-width="{r / 2:g}"/>'
        )
    for i, (x, y) in enumerate(ps.points):
        if i in inside:
            cls, style = "inside", 'fill="#2a7"'
        elif i in outside:
            cls, style = "outside", 'fill="none" stroke="#c22"'
        elif i in verts:
            cls, style = "vertex", 'fill="#124"'
        else:
            cls, style = "point", 'fill="#555"'
        parts.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{r:g}" {style} stroke-width="{r / 3:g}"/>')
    parts.append("</g>")
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")


def _load(spec: RunSpec) -> PointSet:
    if spec.input is not None:
        text = sys.stdin.read() if spec.input == "-" else Path(spec.input).read_text()
        return validate_point_set(parse_points(text))
    return generate_points(spec.random_n, spec.seed, spec.range, spec.convex)


def _fmt(ps: PointSet, verts, fmt: str) -> str:
    if fmt == "coords":
        return " ".join(f"{ps[v][0]},{ps[v][1]}" for v in verts)
    return " ".join(map(str, verts))


def run(spec: RunSpec, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ps = _load(spec)
    except (GeometryError, OSError, GenerationFailed) as e:
        print(f"error: {e}", file=err)
        return 1
    if not 0 <= spec.k <= ps.n - 3:
        print(f"error: k={spec.k} must lie in 0..{ps.n - 3}", file=err)
        return 1
    if spec.mode in ("oracle", "verify") and ps.n > MAX_N:
        print(f"error: {spec.mode} mode requires n <= {MAX_N}", file=err)
        return 1

    svg_dir = Path(spec.svg) if spec.svg else None
    if svg_dir is not None:
        svg_dir.mkdir(parents=True, exist_ok=True)
        emit_svg(ps, None, svg_dir / "overview.svg")

    emitted = 0

    def show(verts):
        nonlocal emitted
        if svg_dir is not None:
            emit_svg(ps, canonical_form(verts, ps), svg_dir / f"polygon_{emitted:06d}.svg")
        emitted += 1
        if spec.format != "count":
            print(_fmt(ps, verts, spec.format), file=out, flush=True)

    if spec.mode == "enumerate":
        cfg = EnumConfig(k=spec.k, schedule=Schedule(spec.schedule), instrument=spec.stats)
        stats = enumerate_polygons(ps, cfg, lambda v, d, o: show(v))
        if spec.format == "count":
            print(emitted, file=out)
        if spec.stats:
            print("# stats " + json.dumps(stats.summary(), sort_keys=True), file=out)
        return 0

    if spec.mode == "oracle":
        for verts in sorted(oracle_enumerate(ps, spec.k).polygons):
            show(verts)
        if spec.format == "count":
            print(emitted, file=out)
        return 0

    got: list[tuple[int, ...]] = []
    cfg = EnumConfig(k=spec.k, schedule=Schedule(spec.schedule))
    enumerate_polygons(ps, cfg, lambda v, d, o: got.append(v))
    want = oracle_enumerate(ps, spec.k).polygons
    mine = set(got)
    if len(got) != len(mine):
        dup = next(v for v in got if got.count(v) > 1)
        print(f"MISMATCH duplicate {' '.join(map(str, dup))}", file=out)
        return 2
    if mine == want:
        print(f"MATCH enumerate={len(mine)} oracle={len(want)}", file=out)
        return 0
    only_e = sorted(mine - want)
    only_o = sorted(want - mine)
    if only_e:
        witness, side = only_e[0], "enumerate"
    else:
        witness, side = only_o[0], "oracle"
    print(
        f"MISMATCH enumerate={len(mine)} oracle={len(want)} "
        f"only-in-{side}: {' '.join(map(str, witness))}",
        file=out,
    )
    return 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="koutpoly", description="Enumerate at-most-k-out polygons of a point set.")
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="point file, one 'x y' per line ('-' for stdin)")
    src.add_argument("--random", metavar="N", type=int, dest="random_n", help="generate N random points")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--range", type=int, default=100, help="coordinate range for --random")
    ap.add_argument("--convex", action="store_true", help="generate points in convex position")
    ap.add_argument("--k", type=int, default=0)
    ap.add_argument("--mode", choices=("enumerate", "oracle", "verify"), default="enumerate")
    ap.add_argument("--format", choices=("indices", "coords", "count"), default="indices")
    ap.add_argument("--svg", metavar="DIR", help="write one SVG per polygon plus overview.svg")
    ap.add_argument("--schedule", choices=("preorder", "parity"), default="preorder")
    ap.add_argument("--stats", action="store_true", help="append an instrumentation summary")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(RunSpec(**vars(args)))


if __name__ == "__main__":
    sys.exit(main())
