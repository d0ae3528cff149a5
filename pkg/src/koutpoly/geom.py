"""Exact integer geometry: predicates, point sets and canonical polygons.

Points are ``(x, y)`` tuples of Python ints.  Polygons never store
coordinates, only indices into their owning :class:`PointSet`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Point = tuple[int, int]

CCW = 1
CW = -1

COORD_LIMIT = 10**7


class GeometryError(ValueError):
    pass


class CollinearInput(GeometryError):
    pass


class OnBoundary(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide")
        self.indices = (i, j)


class CollinearTriple(GeometryError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"points {i}, {j}, {k} are collinear")
        self.indices = (i, j, k)


class TooFewPoints(GeometryError):
    pass


class CoordinateOutOfRange(GeometryError):
    pass


class NotSimple(GeometryError):
    pass


def cross(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of triangle abc."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a: Point, b: Point, c: Point) -> int:
    """Return CCW if c is strictly left of the directed line a->b, else CW."""
    d = cross(a, b, c)
    if d > 0:
        return CCW
    if d < 0:
        return CW
    raise CollinearInput(f"{a}, {b}, {c} are collinear")


def lex_less(a: Point, b: Point) -> bool:
    return a < b


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """True iff p lies strictly inside triangle abc (either orientation)."""
    d1 = cross(a, b, p)
    d2 = cross(b, c, p)
    d3 = cross(c, a, p)
    if d1 == 0 or d2 == 0 or d3 == 0:
        raise OnBoundary(f"{p} lies on the boundary line of triangle {a}, {b}, {c}")
    return (d1 > 0) == (d2 > 0) == (d3 > 0)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Proper crossing of segments ab and cd.

    Endpoints shared between the two segments never count.  Under general
    position no other touching configuration exists.
    """
    if a == c or a == d or b == c or b == d:
        return False
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    if (d1 > 0) == (d2 > 0):
        return False
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    return (d3 > 0) != (d4 > 0)


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed-segment intersection test, including touching and overlap."""
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True

    def on_seg(p, q, r):
        return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])

    return (
        (d1 == 0 and on_seg(a, b, c))
        or (d2 == 0 and on_seg(a, b, d))
        or (d3 == 0 and on_seg(c, d, a))
        or (d4 == 0 and on_seg(c, d, b))
    )


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __len__(self) -> int:
        return len(self.points)


def validate_point_set(points: Iterable[Sequence[int]]) -> PointSet:
    """Check the input universe and freeze it into a :class:`PointSet`.

    Rejects duplicates, collinear triples, out-of-range or non-integer
    coordinates and sets with fewer than three points.
    """
    pts: list[Point] = []
    for i, p in enumerate(points):
        x, y = p
        if not (isinstance(x, int) and isinstance(y, int)):
            raise GeometryError(f"point {i} has non-integer coordinates {p!r}")
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise CoordinateOutOfRange(f"point {i} = {p!r} exceeds |coord| <= {COORD_LIMIT}")
        pts.append((x, y))
    if len(pts) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(pts)}")
    seen: dict[Point, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise DuplicatePoint(seen[p], i)
        seen[p] = i
    for i, j, k in combinations(range(len(pts)), 3):
        if cross(pts[i], pts[j], pts[k]) == 0:
            raise CollinearTriple(i, j, k)
    return PointSet(tuple(pts))


def parse_points(text: str) -> list[Point]:
    """Parse the ``x y`` per line text format ('#' comments, blanks ignored)."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GeometryError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GeometryError(f"line {lineno}: non-integer coordinate in {line!r}") from None
    return pts


def format_points(ps: PointSet) -> str:
    return "".join(f"{x} {y}\n" for x, y in ps.points)


def signed_area2(ps: PointSet, verts: Sequence[int]) -> int:
    """Twice the signed area of the closed chain (shoelace, exact)."""
    total = 0
    m = len(verts)
    for i in range(m):
        x1, y1 = ps[verts[i]]
        x2, y2 = ps[verts[(i + 1) % m]]
        total += x1 * y2 - x2 * y1
    return total


def is_simple(verts: Sequence[int], ps: PointSet) -> bool:
    """All-pairs check that the closed chain is simple.  O(m^2).

    Adjacent edges share exactly one endpoint and cannot overlap because
    the point set is in general position, so only non-adjacent pairs are
    tested.
    """
    m = len(verts)
    if m < 3 or len(set(verts)) != m:
        return False
    pts = [ps[v] for v in verts]
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            if segments_intersect(a, b, pts[j], pts[(j + 1) % m]):
                return False
    return True


def point_in_polygon(p: Point, pts: Sequence[Point]) -> bool:
    """Crossing-number test with exact arithmetic; p must not be on the boundary."""
    inside = False
    m = len(pts)
    px, py = p
    for i in range(m):
        a = pts[i]
        b = pts[(i + 1) % m]
        if (a[1] > py) != (b[1] > py):
            # sign of (x-intercept - px), cross-multiplied to stay in ints
            d = cross(a, b, p)
            if d == 0:
                raise OnBoundary(f"{p} lies on polygon edge {a}-{b}")
            if (d > 0) == (b[1] > a[1]):
                inside = not inside
        elif a[1] == py == b[1] and min(a[0], b[0]) <= px <= max(a[0], b[0]):
            raise OnBoundary(f"{p} lies on polygon edge {a}-{b}")
    return inside


def classify_points(ps: PointSet, verts: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Split the non-vertex indices into (inside, outside)."""
    pts = [ps[v] for v in verts]
    vs = set(verts)
    inside, outside = [], []
    for i in range(ps.n):
        if i in vs:
            continue
        (inside if point_in_polygon(ps[i], pts) else outside).append(i)
    return frozenset(inside), frozenset(outside)


@dataclass(frozen=True)
class Polygon:
    """Canonical polygon: counterclockwise, starting at its lex-min vertex."""

    verts: tuple[int, ...]
    inside: frozenset[int]
    outside: frozenset[int]
    pos: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "pos", {v: i for i, v in enumerate(self.verts)})

    def __len__(self) -> int:
        return len(self.verts)

    def pred(self, v: int) -> int:
        return self.verts[self.pos[v] - 1]

    def succ(self, v: int) -> int:
        i = self.pos[v] + 1
        return self.verts[i if i < len(self.verts) else 0]

    def precedes(self, a: int, b: int) -> bool:
        """The vertex order a < b by position in the canonical sequence."""
        return self.pos[a] < self.pos[b]

    def edges(self) -> list[tuple[int, int]]:
        v = self.verts
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def key(self) -> tuple[int, ...]:
        return self.verts


def canonical_verts(verts: Sequence[int], ps: PointSet) -> tuple[int, ...]:
    """Rotate to the lex-min vertex and force counterclockwise orientation."""
    verts = list(verts)
    if signed_area2(ps, verts) < 0:
        verts.reverse()
    start = min(range(len(verts)), key=lambda i: ps[verts[i]])
    return tuple(verts[start:] + verts[:start])


def canonical_form(verts: Sequence[int], ps: PointSet) -> Polygon:
    if not is_simple(verts, ps):
        raise NotSimple(f"chain {list(verts)} is not simple")
    cv = canonical_verts(verts, ps)
    inside, outside = classify_points(ps, cv)
    return Polygon(cv, inside, outside)


def convex_hull_indices(ps: PointSet, idx: Iterable[int]) -> tuple[int, ...]:
    """Monotone-chain hull of a subset, counterclockwise from the lex-min point."""
    order = sorted(idx, key=lambda i: ps[i])
    if len(order) < 3:
        return tuple(order)
    pts = ps.points
    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and cross(pts[lower[-2]], pts[lower[-1]], pts[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(pts[upper[-2]], pts[upper[-1]], pts[i]) <= 0:
            upper.pop()
        upper.append(i)
    return tuple(lower[:-1] + upper[:-1])


def convex_hull(ps: PointSet) -> Polygon:
    hull = convex_hull_indices(ps, range(ps.n))
    hs = set(hull)
    return Polygon(hull, frozenset(i for i in range(ps.n) if i not in hs), frozenset())


def is_convex_polygon(ps: PointSet, verts: Sequence[int]) -> bool:
    m = len(verts)
    return all(cross(ps[verts[i - 1]], ps[verts[i]], ps[verts[(i + 1) % m]]) > 0 for i in range(m))


def format_polygon(poly: Polygon) -> str:
    return " ".join(map(str, poly.verts))


def parse_polygon(line: str) -> tuple[int, ...]:
    return tuple(int(t) for t in line.split())
