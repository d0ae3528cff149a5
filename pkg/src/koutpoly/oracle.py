"""Brute-force ground truth for small point sets.

Nothing here touches the triangle counter, the intersector, the tangent
bisection or the incremental reclassification used by the enumerator.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .geom import (
    PointSet,
    Polygon,
    canonical_verts,
    classify_points,
    convex_hull_indices,
    cross,
    is_convex_polygon,
    point_in_polygon,
    point_in_triangle,
    segments_intersect,
    signed_area2,
)

MAX_N = 10


class TooLarge(ValueError):
    pass


class IsRoot(ValueError):
    pass


@dataclass
class OracleResult:
    polygons: set[tuple[int, ...]]
    by_outside_count: Counter = field(default_factory=Counter)

    def __len__(self) -> int:
        return len(self.polygons)


@lru_cache(maxsize=64)
def _all_polygons(ps: PointSet) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Every simple polygon of ps with its outside count.

    Depth-first over chains that start at their lex-min point; an edge is
    accepted only if it meets no earlier non-adjacent edge.  Each cycle is
    reached once per direction and only the counterclockwise one is kept.
    """
    pts = ps.points
    n = ps.n
    found = []
    for s in range(n):
        cand = [i for i in range(n) if pts[i] > pts[s]]
        chain = [s]
        used = {s}

        def ok(a: int, b: int, skip_first: bool) -> bool:
            # new edge a-b against chain edges, excluding the adjacent one
            pa, pb = pts[a], pts[b]
            last = len(chain) - 2
            for j in range(len(chain) - 1):
                if j == last or (skip_first and j == 0):
                    continue
                if segments_intersect(pa, pb, pts[chain[j]], pts[chain[j + 1]]):
                    return False
            return True

        def extend():
            if len(chain) >= 3 and ok(chain[-1], s, True):
                if signed_area2(ps, chain) > 0:
                    found.append(tuple(chain))
            for c in cand:
                if c in used or not ok(chain[-1], c, False):
                    continue
                chain.append(c)
                used.add(c)
                extend()
                chain.pop()
                used.discard(c)

        extend()
    out = []
    for verts in found:
        _, outside = classify_points(ps, verts)
        out.append((verts, len(outside)))
    return tuple(out)


def oracle_enumerate(ps: PointSet, k: int) -> OracleResult:
    if ps.n > MAX_N:
        raise TooLarge(f"oracle is limited to n <= {MAX_N}, got {ps.n}")
    res = OracleResult(set())
    for verts, n_out in _all_polygons(ps):
        if n_out <= k:
            res.polygons.add(verts)
            res.by_outside_count[n_out] += 1
    return res


def _make(ps: PointSet, verts) -> Polygon:
    cv = canonical_verts(verts, ps)
    inside, outside = classify_points(ps, cv)
    return Polygon(cv, inside, outside)


def naive_embeddable(ps: PointSet, P: Polygon, v: int) -> bool:
    """Closed-region test: the ear triangle meets nothing of P but its two sides."""
    a, b = ps[P.pred(v)], ps[P.succ(v)]
    c = ps[v]
    if cross(a, c, b) > 0:
        return False
    tri = (a, c, b)
    others = [w for w in P.verts if w not in (v, P.pred(v), P.succ(v))]
    for w in others:
        if point_in_triangle(ps[w], *tri):
            return False
    for x, y in P.edges():
        if v in (x, y):
            continue
        px, py = ps[x], ps[y]
        for s1, s2 in ((a, c), (c, b), (b, a)):
            shared = {px, py} & {s1, s2}
            if shared:
                continue
            if segments_intersect(px, py, s1, s2):
                return False
    return True


def oracle_parent(ps: PointSet, P: Polygon, k: int | None = None) -> Polygon:
    verts = P.verts
    if not is_convex_polygon(ps, verts):
        for v in reversed(verts):
            if naive_embeddable(ps, P, v):
                return _make(ps, [w for w in verts if w != v])
        raise AssertionError("non-convex polygon without an embeddable vertex")
    if not P.outside:
        raise IsRoot("the convex hull has no parent")
    poly_pts = [ps[v] for v in verts]
    best = None
    for p in sorted(P.outside, key=ps.points.__getitem__):
        t1, t2 = _naive_tangents(ps, verts, p)
        tri = (ps[p], ps[t1], ps[t2])
        pocket = [
            q for q in P.outside
            if q != p and point_in_triangle(ps[q], *tri) and not point_in_polygon(ps[q], poly_pts)
        ]
        if not pocket:
            best = p
            break
    if best is None:
        raise AssertionError("convex polygon without an insertable point")
    return _make(ps, convex_hull_indices(ps, list(verts) + [best]))


def _naive_tangents(ps: PointSet, verts, p: int) -> tuple[int, int]:
    pt = ps[p]
    hits = []
    for v in verts:
        signs = {cross(pt, ps[v], ps[w]) > 0 for w in verts if w != v}
        if len(signs) == 1:
            hits.append(v)
    assert len(hits) == 2
    return hits[0], hits[1]
