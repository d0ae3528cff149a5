import itertools
import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from koutpoly.enumerator import EnumConfig, enumerate_polygons
from koutpoly.geom import (
    Polygon,
    classify_points,
    convex_hull,
    cross,
    point_in_triangle,
    segments_intersect,
    validate_point_set,
)
from koutpoly.range_queries import (
    PolygonIntersector,
    RayHit,
    TriangleCounter,
    build_intersector,
    build_triangle_counter,
    naive_triangle_count,
    triangle_count,
)

from conftest import point_sets, random_point_set


def _poly(ps, verts):
    return Polygon(tuple(verts), *classify_points(ps, verts))


def test_chord_below_s5(s5):
    tc = build_triangle_counter(s5)
    # only (4,0) lies strictly between the endpoints in x and below the chord;
    # (1,1) is above the line y = 3x/5
    assert tc.chord_below(0, 2) == 1
    assert tc.chord_below(2, 0) == 1
    assert tc.entries == 10


def test_three_point_counter_is_empty():
    ps = validate_point_set([(0, 0), (5, 1), (2, 7)])
    tc = TriangleCounter(ps)
    assert all(tc.chord_below(a, b) == 0 for a, b in itertools.permutations(range(3), 2))
    assert tc.count(0, 1, 2) == 0


def test_triangle_count_examples(s5):
    tc = build_triangle_counter(s5)
    assert triangle_count(tc, 0, 1, 3) == 1
    assert triangle_count(tc, 0, 1, 4) == 0
    assert triangle_count(tc, 0, 1, 2) == 0
    assert tc.queries == 3


def test_convex_hexagon_counts_match_naive():
    ps = validate_point_set([(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)])
    tc = TriangleCounter(ps)
    for a, b, c in itertools.combinations(range(6), 3):
        assert tc.count(a, b, c) == naive_triangle_count(ps, a, b, c) == 0


@given(point_sets(3, 12, hi=10**6), st.data())
def test_triangle_count_matches_naive(ps, data):
    tc = TriangleCounter(ps)
    a, b, c = data.draw(st.permutations(range(ps.n)))[:3]
    want = sum(
        1 for q in range(ps.n) if q not in (a, b, c) and point_in_triangle(ps[q], ps[a], ps[b], ps[c])
    )
    assert naive_triangle_count(ps, a, b, c) == want
    assert {tc.count(*perm) for perm in itertools.permutations((a, b, c))} == {want}


def test_segment_blocked_examples(s5):
    pi = build_intersector(s5, _poly(s5, (0, 1, 3)))
    assert not pi.segment_blocked(4, 0)
    assert pi.segment_blocked(4, 2)
    hull = PolygonIntersector(s5, convex_hull(s5))
    assert not hull.segment_blocked(4, 1)
    assert hull.queries == 1
    # ignoring the crossed edge unblocks it
    assert not pi.segment_blocked(4, 2, ignore=((1, 3),))


def test_ray_first_hit_examples(s5):
    hull = PolygonIntersector(s5, convex_hull(s5))
    # the ray passes exactly through vertex (0,0), shared by two edges at t=1
    hit = hull.ray_first_hit((1, 1), (-1, -1))
    assert hit.t == 1 and hit.edge in ((0, 1), (3, 0))
    assert hit == _scan_ray(s5, convex_hull(s5), (1, 1), (-1, -1))
    tri = PolygonIntersector(s5, _poly(s5, (0, 1, 3)))
    assert tri.ray_first_hit((5, 3), (1, 0)) is None
    hit = hull.ray_first_hit((1, 1), (1, 0))
    assert hit.edge == (1, 2)
    # edge (4,0)-(5,3) meets y=1 at x=13/3
    assert hit.t == Fraction(10, 3)


# independent all-edge references -------------------------------------------------


def _scan_blocked(ps, P, s, t, ignore=()):
    a, b = ps[s], ps[t]
    for u, v in P.edges():
        if (u, v) in ignore or {u, v} & {s, t}:
            continue
        if segments_intersect(a, b, ps[u], ps[v]):
            return True
    return False


def _scan_ray(ps, P, o, d):
    best = None
    for u, v in P.edges():
        (ax, ay), (bx, by) = ps[u], ps[v]
        # line through a,b:  A x + B y = C ; ray point o + t d
        A, B = by - ay, ax - bx
        C = A * ax + B * ay
        den = A * d[0] + B * d[1]
        if den == 0:
            continue
        t = Fraction(C - A * o[0] - B * o[1], den)
        if t < 0:
            continue
        x, y = o[0] + t * d[0], o[1] + t * d[1]
        if not (min(ax, bx) <= x <= max(ax, bx) and min(ay, by) <= y <= max(ay, by)):
            continue
        if best is None or t < best.t:
            best = RayHit((u, v), t)
    return best


def test_intersector_record_and_replay(monkeypatch):
    """Every segment query issued while enumerating agrees with an all-edge scan."""
    log = []
    orig = PolygonIntersector.segment_blocked

    def recording(self, s, t, ignore=()):
        res = orig(self, s, t, ignore)
        log.append((self.ps, self.polygon, s, t, tuple(ignore), res))
        return res

    monkeypatch.setattr(PolygonIntersector, "segment_blocked", recording)
    rng = random.Random(99)
    for _ in range(12):
        n = rng.randint(5, 8)
        ps = random_point_set(rng, n)
        enumerate_polygons(ps, EnumConfig(k=rng.randint(0, n - 3)))
    assert len(log) > 100
    for ps, P, s, t, ignore, res in log:
        assert _scan_blocked(ps, P, s, t, ignore) == res


def test_ray_first_hit_matches_scan():
    rng = random.Random(5)
    for _ in range(40):
        ps = random_point_set(rng, rng.randint(4, 8))
        P = convex_hull(ps)
        pi = PolygonIntersector(ps, P)
        for _ in range(10):
            o = (rng.randint(-20, 120), rng.randint(-20, 120))
            d = (rng.randint(-5, 5), rng.randint(-5, 5))
            if d == (0, 0):
                continue
            if any(_on_edge(ps, u, v, o) for u, v in P.edges()):
                continue
            got = pi.ray_first_hit(o, d)
            want = _scan_ray(ps, P, o, d)
            assert (got is None) == (want is None)
            if got is not None:
                assert got.t == want.t


def _on_edge(ps, u, v, o):
    a, b = ps[u], ps[v]
    return cross(a, b, o) == 0 and min(a[0], b[0]) <= o[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= o[1] <= max(
        a[1], b[1]
    )
