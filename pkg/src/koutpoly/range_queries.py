"""Triangle range counting over S and segment/ray queries against a polygon."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .geom import Point, PointSet, Polygon, cross, point_in_triangle, segments_cross


class TriangleCounter:
    """Counts points of S strictly inside a triangle in O(1) per query.

    For every lex-ordered pair ``a < b`` the table stores the number of
    points strictly between them in lex order that lie strictly below the
    segment ``ab``.  Lex order is x order after an infinitesimal shear
    ``x -> x + eps*y``, which preserves every orientation, so the usual
    inclusion-exclusion over the three chords is exact even with shared
    x-coordinates.
    """

    def __init__(self, ps: PointSet):
        self.ps = ps
        n = ps.n
        pts = ps.points
        # rank[i] = position of point i in lex order
        order = sorted(range(n), key=lambda i: pts[i])
        self.rank = [0] * n
        for r, i in enumerate(order):
            self.rank[i] = r
        below = [[0] * n for _ in range(n)]
        for ra in range(n):
            a = pts[order[ra]]
            for rb in range(ra + 2, n):
                b = pts[order[rb]]
                cnt = 0
                for rc in range(ra + 1, rb):
                    if cross(a, b, pts[order[rc]]) < 0:
                        cnt += 1
                ia, ib = order[ra], order[rb]
                below[ia][ib] = below[ib][ia] = cnt
        self._below = below
        self.queries = 0

    @property
    def entries(self) -> int:
        n = self.ps.n
        return n * (n - 1) // 2

    def chord_below(self, a: int, b: int) -> int:
        return self._below[a][b]

    def count(self, a: int, b: int, c: int) -> int:
        self.queries += 1
        rank = self.rank
        a, b, c = sorted((a, b, c), key=rank.__getitem__)
        below = self._below
        pts = self.ps.points
        if cross(pts[a], pts[c], pts[b]) < 0:
            # middle vertex under the long chord, and counted by it
            return below[a][c] - below[a][b] - below[b][c] - 1
        return below[a][b] + below[b][c] - below[a][c]


def build_triangle_counter(ps: PointSet) -> TriangleCounter:
    return TriangleCounter(ps)


def triangle_count(tc: TriangleCounter, a: int, b: int, c: int) -> int:
    return tc.count(a, b, c)


def naive_triangle_count(ps: PointSet, a: int, b: int, c: int) -> int:
    pa, pb, pc = ps[a], ps[b], ps[c]
    return sum(
        1
        for i, p in enumerate(ps.points)
        if i not in (a, b, c) and point_in_triangle(p, pa, pb, pc)
    )


@dataclass(frozen=True)
class RayHit:
    edge: tuple[int, int]
    # exact ray parameter t >= 0 of the crossing, origin + t * direction
    t: Fraction


@dataclass
class PolygonIntersector:
    """Segment and ray queries against the edges of one polygon.

    Linear scan over all edges; the interface is what the enumerator
    depends on, so a logarithmic backend can be dropped in behind it.
    """

    ps: PointSet
    polygon: Polygon
    edges: list[tuple[int, int]] = field(init=False)
    queries: int = field(default=0, init=False)

    def __post_init__(self):
        self.edges = self.polygon.edges()

    def segment_blocked(self, s: int, t: int, ignore: Iterable[tuple[int, int]] = ()) -> bool:
        """True iff segment s-t crosses an edge of the polygon.

        Edges sharing an endpoint with the segment cannot cross it under
        general position and are skipped by :func:`segments_cross`.
        ``ignore`` lists edges to treat as absent, used when probing a
        polygon that differs from this one by a local edit.
        """
        self.queries += 1
        pts = self.ps.points
        a, b = pts[s], pts[t]
        skip = set(ignore)
        for u, v in self.edges:
            if (u, v) in skip:
                continue
            if segments_cross(a, b, pts[u], pts[v]):
                return True
        return False

    def ray_first_hit(self, origin: Point, direction: Point) -> Optional[RayHit]:
        """First edge crossed by the ray from ``origin`` along ``direction``."""
        self.queries += 1
        pts = self.ps.points
        best: Optional[RayHit] = None
        for u, v in self.edges:
            t = _ray_segment_param(origin, direction, pts[u], pts[v])
            if t is not None and (best is None or t < best.t):
                best = RayHit((u, v), t)
        return best


def _ray_segment_param(o: Point, d: Point, a: Point, b: Point) -> Optional[Fraction]:
    # solve o + t d = a + s (b - a), t >= 0, 0 <= s <= 1
    ex, ey = b[0] - a[0], b[1] - a[1]
    den = d[0] * ey - d[1] * ex
    if den == 0:
        return None
    wx, wy = a[0] - o[0], a[1] - o[1]
    t_num = wx * ey - wy * ex
    s_num = wx * d[1] - wy * d[0]
    if den < 0:
        den, t_num, s_num = -den, -t_num, -s_num
    if t_num < 0 or s_num < 0 or s_num > den:
        return None
    return Fraction(t_num, den)


def build_intersector(ps: PointSet, polygon: Polygon) -> PolygonIntersector:
    return PolygonIntersector(ps, polygon)
