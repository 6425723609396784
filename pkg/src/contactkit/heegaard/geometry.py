"""Exact planar geometry for curves on cylinder charts.

A chart is a flat cylinder: circle coordinate s (period 1) times an
axis interval.  Curves are piecewise-linear paths given in the
universal cover with Fraction coordinates; crossings between curves are
found by shifting one path by all relevant deck translations and
intersecting segments exactly.  All predicates are exact; any
degeneracy (touching endpoints, collinear overlap between different
curves, parallel tangents at a crossing) raises, since the construction
chooses offsets generically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key


class DegenerateGeometry(Exception):
    pass


def cross2(ax, ay, bx, by):
    return ax * by - ay * bx


def seg_intersect(p1, p2, q1, q2):
    """Proper interior intersection of two segments, or None.

    Returns (point, t_p, t_q) with parameters in (0,1).  Endpoint
    touches and collinear overlaps raise DegenerateGeometry.
    """
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    denom = cross2(rx, ry, sx, sy)
    qpx, qpy = q1[0] - p1[0], q1[1] - p1[1]
    if denom == 0:
        if cross2(qpx, qpy, rx, ry) == 0:
            rr = rx * rx + ry * ry
            t0 = qpx * rx + qpy * ry
            t1 = t0 + (sx * rx + sy * ry)
            lo, hi = min(t0, t1), max(t0, t1)
            if hi < 0 or lo > rr:
                return None
            raise DegenerateGeometry("collinear overlapping segments")
        return None
    t = Fraction(cross2(qpx, qpy, sx, sy), denom)
    u = Fraction(cross2(qpx, qpy, rx, ry), denom)
    if 0 < t < 1 and 0 < u < 1:
        px = p1[0] + t * rx
        py = p1[1] + t * ry
        return (px, py), t, u
    if (t == 0 or t == 1) and 0 <= u <= 1:
        raise DegenerateGeometry("segment endpoint touches another segment")
    if (u == 0 or u == 1) and 0 <= t <= 1:
        raise DegenerateGeometry("segment endpoint touches another segment")
    return None


def _ceil(x):
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


def _floor(x):
    x = Fraction(x)
    return x.numerator // x.denominator


@dataclass
class CoverPath:
    """PL path in the universal cover of a cylinder chart.

    ``points`` is a list of (s, t) Fractions; consecutive points are
    joined by straight segments.  For ``closed`` paths the last point
    is the first one shifted by a deck translation (integer in s,
    multiple of the axis period in t when the chart is a torus).
    """

    points: list
    closed: bool = False

    def segments(self):
        return list(zip(self.points[:-1], self.points[1:]))


def _t_shifts(p1, p2, q1, q2, axis_period):
    if axis_period is None:
        return [0]
    t_lo = Fraction(min(p1[1], p2[1]) - max(q1[1], q2[1]), axis_period)
    t_hi = Fraction(max(p1[1], p2[1]) - min(q1[1], q2[1]), axis_period)
    return [m * axis_period for m in range(_ceil(t_lo), _floor(t_hi) + 1)]


def path_crossings(path_a: CoverPath, path_b: CoverPath, axis_period=None):
    """All transverse crossings of two cover paths on the cylinder.

    Returns a list of (point, param_a, param_b); the point is in cover
    coordinates of ``path_a``, params are (segment index, fraction)
    pairs ordered along each path.
    """
    out = []
    for ia, (p1, p2) in enumerate(path_a.segments()):
        for ib, (q1, q2) in enumerate(path_b.segments()):
            s_lo = min(p1[0], p2[0]) - max(q1[0], q2[0])
            s_hi = max(p1[0], p2[0]) - min(q1[0], q2[0])
            for ds in range(_ceil(s_lo), _floor(s_hi) + 1):
                for dt in _t_shifts(p1, p2, q1, q2, axis_period):
                    hit = seg_intersect(
                        p1, p2, (q1[0] + ds, q1[1] + dt), (q2[0] + ds, q2[1] + dt)
                    )
                    if hit is not None:
                        pt, tp, tq = hit
                        out.append((pt, (ia, tp), (ib, tq)))
    return out


def direction_at(path: CoverPath, seg_index):
    """Tangent direction of the path along segment ``seg_index``."""
    (x1, y1), (x2, y2) = path.points[seg_index], path.points[seg_index + 1]
    return (x2 - x1, y2 - y1)


def _half(v):
    x, y = v
    if x == 0 and y == 0:
        raise DegenerateGeometry("zero direction")
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u, v):
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross2(u[0], u[1], v[0], v[1])
    if c == 0:
        raise DegenerateGeometry(f"parallel directions at a crossing: {u} {v}")
    return -1 if c > 0 else 1


def ccw_sorted(items):
    """Sort (payload, direction) pairs counterclockwise from the +s axis."""
    return sorted(items, key=cmp_to_key(lambda a, b: _angle_cmp(a[1], b[1])))


def point_side(p, a, b):
    """+1 if p is left of the directed line a->b, -1 right, 0 on it."""
    c = cross2(b[0] - a[0], b[1] - a[1], p[0] - a[0], p[1] - a[1])
    return (c > 0) - (c < 0)
