"""Reverse-search traversal of the family tree rooted at the convex hull."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .convex_ops import RegnumAudit, RegnumTable
from .family import DigPair, dig, dig_occupancy, is_active_dig, is_active_remove
from .geom import PointSet, Polygon, convex_hull
from .range_queries import PolygonIntersector, TriangleCounter

Sink = Callable[[tuple[int, ...], int, int], None]


class Schedule(enum.Enum):
    PREORDER = "preorder"
    PARITY = "parity"


@dataclass
class EnumConfig:
    k: int
    schedule: Schedule = Schedule.PREORDER
    instrument: bool = False
    # cross-check every incremental regnum table against a scratch rebuild
    debug: bool = False


@dataclass
class EnumStats:
    nodes_visited: int = 0
    polygons_emitted: int = 0
    max_depth: int = 0
    triangle_queries_per_node: Counter = field(default_factory=Counter)
    intersection_queries_per_node: Counter = field(default_factory=Counter)
    max_expansions_between_outputs: int = 0
    max_stack_frames: int = 0
    counter_entries: int = 0
    peak_frame_units: int = 0
    regnum: RegnumAudit = field(default_factory=RegnumAudit)

    @property
    def peak_aux_units(self) -> int:
        return self.counter_entries + self.peak_frame_units

    def summary(self) -> dict:
        return {
            "nodes_visited": self.nodes_visited,
            "polygons_emitted": self.polygons_emitted,
            "max_depth": self.max_depth,
            "max_triangle_queries_per_node": max(self.triangle_queries_per_node, default=0),
            "max_intersection_queries_per_node": max(self.intersection_queries_per_node, default=0),
            "max_expansions_between_outputs": self.max_expansions_between_outputs,
            "max_stack_frames": self.max_stack_frames,
            "peak_aux_units": self.peak_aux_units,
            "regnum_updates": self.regnum.updates,
            "regnum_self_zero_held": self.regnum.self_zero_held,
            "regnum_self_zero_corrected": self.regnum.self_zero_corrected,
        }


def schedule_output(depth: int, mode: Schedule) -> str:
    """'before' or 'after' the children, for a node at the given depth."""
    if mode is Schedule.PARITY and depth % 2 == 1:
        return "after"
    return "before"


def find_children(
    ps: PointSet,
    P: Polygon,
    largest: Optional[int],
    rt: Optional[RegnumTable],
    k: int,
    tc: TriangleCounter,
    pi: PolygonIntersector,
    audit: Optional[RegnumAudit] = None,
    debug: bool = False,
) -> Iterator[tuple[Polygon, Optional[int], Optional[RegnumTable]]]:
    """Yield (child, largest-embeddable hint, regnum table) lazily."""
    verts = P.verts
    budget = k - len(P.outside)
    # vertices before pred(largest) only produce inactive pairs
    start = P.pos[largest] - 1 if largest is not None else 0
    inside = sorted(P.inside)
    for i in range(start, len(verts)):
        vi = verts[i]
        for p in inside:
            dp = DigPair(vi, p)
            occ = dig_occupancy(ps, P, dp, k, tc, pi)
            if occ is not None and is_active_dig(ps, P, dp, largest, pi):
                yield dig(ps, P, dp, occ), p, None
    if rt is not None and budget > 0:
        for v in verts:
            res = is_active_remove(ps, P, v, k, rt, tc, audit=audit, debug=debug)
            if res is not None:
                yield res[0], None, res[1]


@dataclass
class _Frame:
    poly: Polygon
    depth: int
    children: Iterator
    pi: PolygonIntersector
    emit_after: bool
    units: int
    node: int
    tri_queries: int = 0


def _frame_units(P: Polygon, rt: Optional[RegnumTable]) -> int:
    # vertex list + edge list + labels + (count, t1, t2) per regnum entry
    return 2 * len(P.verts) + len(P.inside) + len(P.outside) + (3 * len(rt) if rt else 0)


def enumerate_polygons(
    ps: PointSet,
    cfg: EnumConfig,
    sink: Optional[Sink] = None,
    tc: Optional[TriangleCounter] = None,
) -> EnumStats:
    """Visit every at-most-k-out polygon of ``ps`` once and hand it to ``sink``."""
    if not 0 <= cfg.k <= ps.n - 3:
        raise ValueError(f"k={cfg.k} outside 0..{ps.n - 3}")
    tc = tc or TriangleCounter(ps)
    stats = EnumStats(counter_entries=tc.entries)
    audit = stats.regnum
    since_output = 0
    ordinal = 0

    def emit(poly: Polygon, depth: int, node: int):
        nonlocal since_output
        stats.polygons_emitted += 1
        if since_output > stats.max_expansions_between_outputs:
            stats.max_expansions_between_outputs = since_output
        since_output = 0
        if sink is not None:
            sink(poly.verts, depth, node)

    stack: list[_Frame] = []
    frame_units = 0

    def push(poly: Polygon, depth: int, largest, rt):
        nonlocal ordinal, frame_units
        pi = PolygonIntersector(ps, poly)
        gen = find_children(ps, poly, largest, rt, cfg.k, tc, pi, audit, cfg.debug)
        after = schedule_output(depth, cfg.schedule) == "after"
        fr = _Frame(poly, depth, gen, pi, after, _frame_units(poly, rt), ordinal)
        ordinal += 1
        stats.nodes_visited += 1
        stats.max_depth = max(stats.max_depth, depth)
        stack.append(fr)
        frame_units += fr.units
        stats.max_stack_frames = max(stats.max_stack_frames, len(stack))
        stats.peak_frame_units = max(stats.peak_frame_units, frame_units)
        if not after:
            emit(poly, depth, fr.node)

    root = convex_hull(ps)
    push(root, 0, None, RegnumTable() if cfg.k > 0 else None)
    while stack:
        fr = stack[-1]
        before = tc.queries
        nxt = next(fr.children, None)
        fr.tri_queries += tc.queries - before
        if nxt is not None:
            since_output += 1
            push(nxt[0], fr.depth + 1, nxt[1], nxt[2])
            continue
        stack.pop()
        frame_units -= fr.units
        if fr.emit_after:
            emit(fr.poly, fr.depth, fr.node)
        if cfg.instrument:
            stats.triangle_queries_per_node[fr.tri_queries] += 1
            stats.intersection_queries_per_node[fr.pi.queries] += 1
        if stack:
            since_output += 1
    return stats


def enumerate_to_list(ps: PointSet, k: int, schedule: Schedule = Schedule.PREORDER) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    enumerate_polygons(ps, EnumConfig(k=k, schedule=schedule), lambda v, d, o: out.append(v))
    return out
