"""Family-tree moves: embed/dig (non-convex) and insert/remove (convex).

Every polygon except the convex hull has exactly one parent:

* non-convex ``P``: embed its largest embeddable vertex;
* convex ``P``: insert the lex-smallest insertable outside point.

The ``is_active_*`` tests decide whether a candidate child really has
``P`` as its parent without recomputing the child's parent from scratch.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .convex_ops import (
    ConvexView,
    DegenerateRemoval,
    RegnumAudit,
    RegnumTable,
    insert,
    insertable_set,
    regnum_scratch,
    regnum_update,
    remove,
)
from .geom import GeometryError, PointSet, Polygon, cross, point_in_triangle
from .range_queries import PolygonIntersector, TriangleCounter


class NotEmbeddable(GeometryError):
    pass


class NotDigable(GeometryError):
    pass


class IsRoot(ValueError):
    pass


EMBED = "embed"
INSERT = "insert"


@dataclass(frozen=True)
class DigPair:
    vi: int
    p: int


@dataclass(frozen=True)
class ParentResult:
    polygon: Polygon
    kind: str  # EMBED or INSERT
    point: int


def _intersector(ps: PointSet, P: Polygon, pi: Optional[PolygonIntersector]) -> PolygonIntersector:
    return pi if pi is not None else PolygonIntersector(ps, P)


def _vertex_in_triangle(ps: PointSet, P: Polygon, a: int, b: int, c: int) -> bool:
    pa, pb, pc = ps[a], ps[b], ps[c]
    return any(
        point_in_triangle(ps[w], pa, pb, pc) for w in P.verts if w != a and w != b and w != c
    )


def is_embeddable(ps: PointSet, P: Polygon, vi: int, pi: Optional[PolygonIntersector] = None) -> bool:
    """Reflex vertex whose ear triangle misses the polygon's interior.

    Checked as: reflex turn at ``vi``, chord pred-succ crossing no edge,
    and no vertex of ``P`` strictly inside the ear triangle.
    """
    a, b = P.pred(vi), P.succ(vi)
    if cross(ps[a], ps[vi], ps[b]) > 0:
        return False
    if _intersector(ps, P, pi).segment_blocked(a, b):
        return False
    return not _vertex_in_triangle(ps, P, a, vi, b)


def embed(ps: PointSet, P: Polygon, vi: int, pi: Optional[PolygonIntersector] = None) -> Polygon:
    if not is_embeddable(ps, P, vi, pi):
        raise NotEmbeddable(f"vertex {vi} is not embeddable")
    a, b = P.pred(vi), P.succ(vi)
    pa, pv, pb = ps[a], ps[vi], ps[b]
    swallowed = frozenset(q for q in P.outside if point_in_triangle(ps[q], pa, pv, pb))
    verts = tuple(v for v in P.verts if v != vi)
    # a reflex vertex is never the lex-min one, so the start is unchanged
    return Polygon(verts, P.inside | swallowed | {vi}, P.outside - swallowed)


def largest_embeddable(ps: PointSet, P: Polygon, pi: Optional[PolygonIntersector] = None) -> Optional[int]:
    pi = _intersector(ps, P, pi)
    for v in reversed(P.verts):
        if is_embeddable(ps, P, v, pi):
            return v
    return None


def parent(ps: PointSet, P: Polygon, k: Optional[int] = None) -> ParentResult:
    if k is not None and len(P.outside) > k:
        raise ValueError(f"polygon has {len(P.outside)} outside points, more than k={k}")
    pi = PolygonIntersector(ps, P)
    top = largest_embeddable(ps, P, pi)
    if top is not None:
        return ParentResult(embed(ps, P, top, pi), EMBED, top)
    if not P.outside:
        raise IsRoot("the convex hull has no parent")
    view = ConvexView(ps, P)
    rt = regnum_scratch(ps, P, view)
    p = insertable_set(rt, ps)[0]
    return ParentResult(insert(ps, P, p, rt.tangents[p]), INSERT, p)


def dig_occupancy(
    ps: PointSet,
    P: Polygon,
    dp: DigPair,
    k: int,
    tc: TriangleCounter,
    pi: Optional[PolygonIntersector] = None,
) -> Optional[int]:
    """Number of points the dig would push outside, or None if not digable."""
    vi, p = dp.vi, dp.p
    if p not in P.inside:
        return None
    s = P.succ(vi)
    if cross(ps[vi], ps[s], ps[p]) < 0:
        return None
    occ = tc.count(vi, s, p)
    if occ > k - len(P.outside):
        return None
    pi = _intersector(ps, P, pi)
    if pi.segment_blocked(vi, p) or pi.segment_blocked(p, s):
        return None
    if _vertex_in_triangle(ps, P, vi, s, p):
        return None
    return occ


def is_digable(
    ps: PointSet,
    P: Polygon,
    dp: DigPair,
    k: int,
    tc: TriangleCounter,
    pi: Optional[PolygonIntersector] = None,
) -> bool:
    return dig_occupancy(ps, P, dp, k, tc, pi) is not None


def dig(ps: PointSet, P: Polygon, dp: DigPair, occupancy: Optional[int] = None) -> Polygon:
    """Promote inside point ``dp.p`` to a vertex between ``dp.vi`` and its successor.

    Callers that already know the triangle's occupancy pass it so that an
    empty triangle skips the reclassification scan.  Validity is the
    caller's responsibility (see :func:`checked_dig`).
    """
    vi, p = dp.vi, dp.p
    s = P.succ(vi)
    i = P.pos[vi]
    verts = P.verts[: i + 1] + (p,) + P.verts[i + 1:]
    if occupancy == 0:
        dropped = frozenset()
    else:
        a, b, c = ps[vi], ps[s], ps[p]
        dropped = frozenset(q for q in P.inside if q != p and point_in_triangle(ps[q], a, b, c))
    return Polygon(verts, P.inside - dropped - {p}, P.outside | dropped)


def checked_dig(ps: PointSet, P: Polygon, dp: DigPair, k: int, tc: TriangleCounter) -> Polygon:
    if not is_digable(ps, P, dp, k, tc):
        raise NotDigable(f"pair ({dp.vi}, {dp.p}) is not digable")
    return dig(ps, P, dp)


def _embeddable_after_dig(ps: PointSet, P: Polygon, dp: DigPair, pi: PolygonIntersector) -> bool:
    """Is succ(vi) embeddable in dig(P, vi, p)?  Probed without building the child.

    In the dug polygon the ear of ``u = succ(vi)`` is (p, u, succ(u)); the
    edge vi-u no longer exists and the new edges all end at p.
    """
    vi, p = dp.vi, dp.p
    u = P.succ(vi)
    w = P.succ(u)
    if cross(ps[p], ps[u], ps[w]) > 0:
        return False
    if pi.segment_blocked(p, w, ignore=((vi, u),)):
        return False
    return not _vertex_in_triangle(ps, P, p, u, w)


def is_active_dig(
    ps: PointSet,
    P: Polygon,
    dp: DigPair,
    largest: Optional[int],
    pi: Optional[PolygonIntersector] = None,
) -> bool:
    """Does dig(P, vi, p) have P as its parent?  ``dp`` must be digable.

    The dug point is embeddable in the child, so the pair is active iff no
    vertex after it in the child is embeddable.  Those vertices keep their
    status from ``P`` except succ(vi), whose ear changed:

    * vi before pred(largest): largest stays embeddable after p -> inactive;
    * otherwise: active iff succ(vi) is not embeddable in the child
      (nothing to check when vi is the last vertex).
    """
    i = P.pos[dp.vi]
    if i == len(P.verts) - 1:
        return True
    if largest is not None and P.pos[largest] > i + 1:
        return False
    return not _embeddable_after_dig(ps, P, dp, _intersector(ps, P, pi))


def is_active_remove(
    ps: PointSet,
    P: Polygon,
    v: int,
    k: int,
    rt: RegnumTable,
    tc: TriangleCounter,
    audit: Optional[RegnumAudit] = None,
    debug: bool = False,
) -> Optional[tuple[Polygon, RegnumTable]]:
    """Return (remove(P, v), its regnum table) if that child belongs to P."""
    if len(P.outside) >= k:
        return None
    try:
        child, _ = remove(ps, P, v)
    except DegenerateRemoval:
        return None
    rt2 = regnum_update(ps, P, rt, v, child, tc, audit=audit, debug=debug)
    if rt2.counts[v] != 0:
        return None
    pv = ps[v]
    for q, c in rt2.counts.items():
        if c == 0 and ps[q] < pv:
            return None
    return child, rt2
