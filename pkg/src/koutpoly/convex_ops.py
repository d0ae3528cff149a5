"""Convex-polygon machinery: tangents, regnum tables, insertion and removal.

Only convex polygons carry a :class:`RegnumTable`.  ``regnum(P, p)`` is the
number of outside points in the pocket between ``P`` and the two tangent
segments from ``p``; a zero entry marks ``p`` as insertable.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

from .geom import (
    GeometryError,
    PointSet,
    Polygon,
    convex_hull_indices,
    cross,
    point_in_triangle,
)
from .range_queries import TriangleCounter


class PointNotOutside(GeometryError):
    pass


class NotInsertable(GeometryError):
    pass


class EmptyInsertableSet(RuntimeError):
    pass


class InconsistentTable(RuntimeError):
    pass


class DegenerateRemoval(GeometryError):
    pass


@dataclass(frozen=True)
class TangentPair:
    """Tangency vertices; the pocket runs counterclockwise from t1 to t2."""

    t1: int
    t2: int


class ConvexView:
    """O(n) preprocessing of a convex polygon for O(log n) tangent queries.

    The polygon is split at its lex-max vertex into a lower chain (lex
    increasing) and an upper chain (lex decreasing).  On each chain the
    edges that see ``p`` form one contiguous run around the edge whose
    lex-range brackets ``p``, so both run ends are found by bisection.
    """

    def __init__(self, ps: PointSet, poly: Polygon):
        self.ps = ps
        self.poly = poly
        self.pts = [ps[v] for v in poly.verts]
        m = len(self.pts)
        self.m = m
        self.h = max(range(m), key=self.pts.__getitem__)
        self._lower_keys = self.pts[: self.h + 1]
        # upper chain, negated so that it is increasing for bisect
        self._upper_keys = [(-x, -y) for x, y in self.pts[self.h:] + self.pts[:1]]
        self.queries = 0

    def _visible(self, i: int, p) -> bool:
        pts = self.pts
        return cross(pts[i], pts[(i + 1) % self.m], p) < 0

    def _run(self, lo: int, hi: int, mid: int, p):
        """Visible edge run inside [lo, hi] that must contain ``mid``."""
        if not self._visible(mid, p):
            return None
        a, b = lo, mid
        while a < b:
            c = (a + b) // 2
            if self._visible(c, p):
                b = c
            else:
                a = c + 1
        first = a
        a, b = mid, hi
        while a < b:
            c = (a + b + 1) // 2
            if self._visible(c, p):
                a = c
            else:
                b = c - 1
        return first, a

    def tangents(self, p_idx: int) -> TangentPair:
        self.queries += 1
        p = self.ps[p_idx]
        m, h = self.m, self.h
        # lower chain edges 0..h-1
        j = bisect_left(self._lower_keys, p) - 1
        lower = self._run(0, h - 1, min(max(j, 0), h - 1), p)
        # upper chain edges h..m-1
        j = bisect_left(self._upper_keys, (-p[0], -p[1])) - 1
        up = self._run(h, m - 1, h + min(max(j, 0), m - h - 1), p)
        if lower is None and up is None:
            raise PointNotOutside(f"point {p_idx} is not outside the polygon")
        if lower is None:
            a, b = up
        elif up is None:
            a, b = lower
        elif lower[1] == h - 1 and up[0] == h:
            a, b = lower[0], up[1]
        elif up[1] == m - 1 and lower[0] == 0:
            a, b = up[0], lower[1]
        else:  # pragma: no cover - impossible for a convex polygon
            raise AssertionError("visible edges are not contiguous")
        verts = self.poly.verts
        return TangentPair(verts[a], verts[(b + 1) % m])


def tangents(ps: PointSet, P: Polygon, p: int) -> TangentPair:
    if p not in P.outside:
        raise PointNotOutside(f"point {p} is not in outside(P)")
    return ConvexView(ps, P).tangents(p)


def tangents_scan(ps: PointSet, P: Polygon, p: int) -> TangentPair:
    """Linear-time reference: supporting-line test at every vertex."""
    pt = ps[p]
    verts = P.verts
    m = len(verts)
    t1 = t2 = None
    for i, v in enumerate(verts):
        sides = {cross(pt, ps[v], ps[w]) > 0 for w in verts if w != v}
        if len(sides) != 1:
            continue
        # pocket runs ccw from t1: the edge leaving t1 faces p
        if cross(ps[v], ps[verts[(i + 1) % m]], pt) < 0:
            t1 = v
        else:
            t2 = v
    if t1 is None or t2 is None:
        raise PointNotOutside(f"point {p} is not outside the polygon")
    return TangentPair(t1, t2)


@dataclass
class RegnumTable:
    counts: dict[int, int] = field(default_factory=dict)
    tangents: dict[int, TangentPair] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.counts)


@dataclass
class RegnumAudit:
    """How often the removed vertex itself came out with a zero count."""

    self_zero_held: int = 0
    self_zero_corrected: int = 0
    updates: int = 0
    cross_checks: int = 0


def _pocket_count(ps: PointSet, P: Polygon, p: int, tp: TangentPair) -> int:
    a, b, c = ps[p], ps[tp.t1], ps[tp.t2]
    # outside points are strictly outside P, so triangle membership decides
    return sum(1 for q in P.outside if q != p and point_in_triangle(ps[q], a, b, c))


def regnum_scratch(ps: PointSet, P: Polygon, view: ConvexView | None = None) -> RegnumTable:
    view = view or ConvexView(ps, P)
    rt = RegnumTable()
    for p in P.outside:
        tp = view.tangents(p)
        rt.tangents[p] = tp
        rt.counts[p] = _pocket_count(ps, P, p, tp)
    return rt


def insertable_set(rt: RegnumTable, ps: PointSet) -> list[int]:
    """Zero-count points in lex order; the first one is the parent's insertion."""
    out = sorted((p for p, c in rt.counts.items() if c == 0), key=ps.points.__getitem__)
    if not out and rt.counts:
        raise EmptyInsertableSet("convex polygon other than the hull has no insertable point")
    return out


def insert(ps: PointSet, P: Polygon, p: int, tp: TangentPair | None = None) -> Polygon:
    if p not in P.outside:
        raise NotInsertable(f"point {p} is not outside the polygon")
    tp = tp or tangents(ps, P, p)
    if _pocket_count(ps, P, p, tp) != 0:
        raise NotInsertable(f"point {p} has outside points in its pocket")
    verts = P.verts
    m = len(verts)
    i1, i2 = P.pos[tp.t1], P.pos[tp.t2]
    # keep the far chain t2 .. t1, swallow the near chain strictly between
    far = [verts[(i2 + j) % m] for j in range((i1 - i2) % m + 1)]
    near = [verts[(i1 + j) % m] for j in range(1, (i2 - i1) % m)]
    chain = far + [p]
    start = min(range(len(chain)), key=lambda i: ps[chain[i]])
    new_verts = tuple(chain[start:] + chain[:start])
    return Polygon(new_verts, P.inside | frozenset(near), P.outside - {p})


def remove(ps: PointSet, P: Polygon, v: int) -> tuple[Polygon, frozenset[int]]:
    """Drop vertex v and re-hull the remaining vertices and inside points."""
    rest = (set(P.verts) | P.inside) - {v}
    if len(rest) < 3:
        raise DegenerateRemoval(f"removing {v} leaves fewer than 3 points")
    hull = convex_hull_indices(ps, rest)
    inside = frozenset(rest - set(hull))
    return Polygon(hull, inside, P.outside | {v}), frozenset({v})


def regnum_update(
    ps: PointSet,
    P: Polygon,
    rt: RegnumTable,
    v: int,
    P2: Polygon,
    tc: TriangleCounter,
    audit: RegnumAudit | None = None,
    debug: bool = False,
) -> RegnumTable:
    """Table for ``P2 = remove(P, v)`` derived from the table of ``P``.

    Points keeping both tangency vertices change by at most one (the removed
    vertex may enter their pocket).  Points that lose a tangency vertex lose
    the outside points swept between the old and new tangent.  The entry for
    ``v`` itself is counted directly.
    """
    view = ConvexView(ps, P2)
    out = RegnumTable()
    pv = ps[v]
    for p, c in rt.counts.items():
        old = rt.tangents[p]
        new = view.tangents(p)
        if v == old.t1:
            c -= tc.count(p, old.t1, new.t1)
        elif v == old.t2:
            c -= tc.count(p, old.t2, new.t2)
        elif point_in_triangle(pv, ps[p], ps[old.t1], ps[old.t2]):
            c += 1
        out.counts[p] = c
        out.tangents[p] = new
    tp = view.tangents(v)
    out.tangents[v] = tp
    out.counts[v] = _pocket_count(ps, P2, v, tp)
    if audit is not None:
        audit.updates += 1
        if out.counts[v] == 0:
            audit.self_zero_held += 1
        else:
            audit.self_zero_corrected += 1
    if debug:
        ref = regnum_scratch(ps, P2)
        if audit is not None:
            audit.cross_checks += 1
        if ref.counts != out.counts or ref.tangents != out.tangents:
            raise InconsistentTable(
                f"incremental table {out.counts} != scratch {ref.counts} after removing {v}"
            )
    return out
