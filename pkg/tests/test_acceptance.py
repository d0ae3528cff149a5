"""Acceptance suite.  Each criterion prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (or execute this
file); the lines are repeated in the terminal summary under "acceptance".

Frozen constants:

* ``C_TRI = 0.25``: per-node triangle-count queries <= C_TRI * n^2.  Set by
  ``scripts/calibrate_queries.py`` at n = 6 (observed max ratio 0.25) and
  not retuned afterwards.
* ``C_MEM = 6.5``: peak auxiliary units <= C_MEM * n^2, from the accounting
  n(n-1)/2 counter entries plus at most n + 1 frames of at most 6n units.
"""
from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass, field
from math import comb

import pytest

from koutpoly.cli import generate_points
from koutpoly.enumerator import EnumConfig, EnumStats, Schedule, enumerate_polygons
from koutpoly.family import parent
from koutpoly.geom import Polygon, classify_points, convex_hull, signed_area2
from koutpoly.oracle import oracle_enumerate
from koutpoly.range_queries import TriangleCounter

from conftest import ACCEPTANCE_LINES, random_point_set

SEED = 20240601
N_SETS = 120
N_RANGE = (4, 8)
TIME_LIMIT_S = 600.0
MAX_DELAY = 3
C_TRI = 0.25
C_MEM = 6.5


def report(num: int, name: str, ok: bool, detail: str) -> None:
    line = f"criterion {num} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@dataclass
class Run:
    ps: object
    k: int
    emitted: list
    stats: EnumStats
    oracle: set
    parity: EnumStats


@dataclass
class Batch:
    runs: list[Run] = field(default_factory=list)
    seconds: float = 0.0
    n_sets: int = 0


@pytest.fixture(scope="module")
def batch() -> Batch:
    rng = random.Random(SEED)
    out = Batch()
    t0 = time.perf_counter()
    for i in range(N_SETS):
        n = N_RANGE[0] + i % (N_RANGE[1] - N_RANGE[0] + 1)
        ps = random_point_set(rng, n)
        tc = TriangleCounter(ps)
        for k in range(n - 2):
            got = []
            cfg = EnumConfig(k=k, instrument=True, debug=True)
            stats = enumerate_polygons(ps, cfg, lambda v, d, o: got.append(v), tc=tc)
            parity = enumerate_polygons(ps, EnumConfig(k=k, schedule=Schedule.PARITY), tc=tc)
            out.runs.append(Run(ps, k, got, stats, oracle_enumerate(ps, k).polygons, parity))
        out.n_sets += 1
    out.seconds = time.perf_counter() - t0
    return out


def test_criterion_1_oracle_equivalence(batch):
    bad = [(r.ps.points, r.k) for r in batch.runs if set(r.emitted) != r.oracle]
    ok = not bad and batch.n_sets >= 100 and batch.seconds < TIME_LIMIT_S
    report(
        1,
        "oracle equivalence",
        ok,
        f"{batch.n_sets} sets, {len(batch.runs)} (S,k) runs, {len(bad)} mismatches, {batch.seconds:.1f}s",
    )
    assert ok, bad[:3]


def test_criterion_2_convex_closed_form():
    bad = []
    cases = 0
    for n in range(4, 11):
        ps = generate_points(n, seed=n, convex=True)
        for k in range(min(3, n - 3) + 1):
            st = enumerate_polygons(ps, EnumConfig(k=k))
            want = sum(comb(n, j) for j in range(k + 1))
            cases += 1
            if st.polygons_emitted != want:
                bad.append((n, k, st.polygons_emitted, want))
    report(2, "convex-position counts", not bad, f"{cases} (n,k) cases, {len(bad)} wrong")
    assert not bad


def test_criterion_3_boundary_cases(batch):
    checked = 0
    bad = []
    for r in batch.runs:
        n = r.ps.n
        if n > 7 or r.k not in (0, n - 3):
            continue
        checked += 1
        if set(r.emitted) != r.oracle:
            bad.append((r.ps.points, r.k))
        if r.k == 0:
            # every point a vertex or inside
            if any(classify_points(r.ps, v)[1] for v in r.emitted):
                bad.append((r.ps.points, r.k, "outside point at k=0"))
    report(3, "boundary k=0 and k=n-3", not bad and checked > 0, f"{checked} runs with n<=7, {len(bad)} wrong")
    assert not bad and checked


def test_criterion_4_uniqueness_and_tree(batch):
    dups = 0
    orphans = 0
    bad_chains = 0
    chains = 0
    for r in batch.runs:
        ps = r.ps
        emitted = set(r.emitted)
        dups += len(r.emitted) - len(emitted)
        hull = convex_hull(ps)
        full = r.k == ps.n - 3
        for verts in r.emitted:
            P = Polygon(verts, *classify_points(ps, verts))
            if P == hull:
                continue
            if parent(ps, P, r.k).polygon.verts not in emitted:
                orphans += 1
            if not full:
                continue
            # chains do not depend on k, so walk them once per set
            chains += 1
            steps = 0
            while P != hull and steps <= 3 * ps.n:
                Q = parent(ps, P).polygon
                if signed_area2(ps, Q.verts) <= signed_area2(ps, P.verts):
                    break
                P = Q
                steps += 1
            if P != hull:
                bad_chains += 1
    ok = dups == 0 and orphans == 0 and bad_chains == 0
    report(
        4,
        "uniqueness and tree structure",
        ok,
        f"{dups} duplicates, {orphans} orphans, {chains} parent chains, {bad_chains} bad",
    )
    assert ok


def test_criterion_5_regnum_consistency(batch):
    # debug=True in every batch run: a mismatch raises InconsistentTable
    updates = sum(r.stats.regnum.updates for r in batch.runs)
    checks = sum(r.stats.regnum.cross_checks for r in batch.runs)
    held = sum(r.stats.regnum.self_zero_held for r in batch.runs)
    corrected = sum(r.stats.regnum.self_zero_corrected for r in batch.runs)
    ok = updates > 0 and checks == updates and held + corrected == updates
    report(
        5,
        "incremental regnum tables",
        ok,
        f"{updates} updates cross-checked, removed-vertex zero held {held}, corrected {corrected}",
    )
    assert ok


def test_criterion_6_parity_delay(batch):
    worst = max(r.parity.max_expansions_between_outputs for r in batch.runs)
    same = all(r.parity.polygons_emitted == len(r.emitted) for r in batch.runs)
    ok = worst <= MAX_DELAY and same
    report(6, "parity-schedule delay", ok, f"max {worst} tree-edge traversals between outputs, bound {MAX_DELAY}")
    assert ok


def test_criterion_7_complexity(batch):
    tri_ratio = 0.0
    mem_ratio = 0.0
    depth_ok = True
    for r in batch.runs:
        n2 = r.ps.n ** 2
        tri_ratio = max(tri_ratio, max(r.stats.triangle_queries_per_node) / n2)
        mem_ratio = max(mem_ratio, r.stats.peak_aux_units / n2)
        depth_ok &= r.stats.max_depth <= r.ps.n
    ok = tri_ratio <= C_TRI and mem_ratio <= C_MEM and depth_ok
    report(
        7,
        "complexity accounting",
        ok,
        f"triangle queries/node <= {tri_ratio:.3f} n^2 (c={C_TRI}), "
        f"peak aux <= {mem_ratio:.2f} n^2 (C={C_MEM}), depth <= n: {depth_ok}",
    )
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
