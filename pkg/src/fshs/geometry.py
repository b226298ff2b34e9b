"""Planar primitives under the Euclidean norm.

Points are plain ``(x, y)`` float tuples. The two compact-set types defined
here, :class:`FinitePoints` and :class:`ConvexPolygon`, are immutable and
canonical, so equality and hashing behave.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

Point = Tuple[float, float]

DEDUP_TOL = 1e-12


def as_point(p) -> Point:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinate in {p!r}")
    return (x, y)


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def scale(p: Point, s: float) -> Point:
    return (p[0] * s, p[1] * s)


def dot(p: Point, q: Point) -> float:
    return p[0] * q[0] + p[1] * q[1]


def cross(o: Point, a: Point, b: Point) -> float:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def norm(p: Point) -> float:
    return math.hypot(p[0], p[1])


def _canonical(points: Iterable, tol: float = DEDUP_TOL) -> Tuple[Point, ...]:
    pts = sorted(as_point(p) for p in points)
    out: list = []
    for p in pts:
        if any(abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol for q in out[-4:]):
            continue
        out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class FinitePoints:
    """A nonempty finite compact, deduplicated and sorted lexicographically."""

    points: Tuple[Point, ...]
    name: Optional[str] = None

    def __post_init__(self):
        pts = _canonical(self.points)
        if not pts:
            raise ValueError("a finite compact needs at least one point")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        # the label is not part of the set
        if isinstance(other, FinitePoints):
            return self.points == other.points
        return NotImplemented

    def __hash__(self):
        return hash(self.points)


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon with CCW vertices and no collinear triples.

    One vertex is a point, two a segment; both are legal.
    """

    vertices: Tuple[Point, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("empty polygon")
        object.__setattr__(self, "vertices", tuple(as_point(v) for v in self.vertices))

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        if len(v) == 1:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        return polygon_distance(p, self) <= tol

    def extreme(self, u: Point) -> Point:
        return max(self.vertices, key=lambda v: dot(v, u))

    def support(self, u: Point) -> float:
        return max(dot(v, u) for v in self.vertices)

    def area(self) -> float:
        v = self.vertices
        if len(v) < 3:
            return 0.0
        return 0.5 * sum(v[k][0] * v[(k + 1) % len(v)][1] - v[(k + 1) % len(v)][0] * v[k][1]
                         for k in range(len(v)))

    def __neg__(self):
        # a half-turn keeps the orientation
        return ConvexPolygon(tuple((-x, -y) for x, y in self.vertices))


def convex_hull(points: Union[FinitePoints, Iterable]) -> ConvexPolygon:
    """Andrew's monotone chain; collinear and duplicate points are dropped."""
    pts = points.points if isinstance(points, FinitePoints) else _canonical(points)
    if len(pts) <= 2:
        return ConvexPolygon(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return ConvexPolygon(tuple(hull))


def minkowski_sum(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """Edge-merge sum of two convex polygons (degenerate ones included)."""
    a, b = _edge_order(P), _edge_order(Q)
    if len(a) < 3 or len(b) < 3:
        # degenerate operands: the hull of vertex sums is cheap and exact
        return convex_hull([add(p, q) for p in P.vertices for q in Q.vertices])
    i = j = 0
    out = []
    na, nb = len(a), len(b)
    while i < na or j < nb:
        out.append(add(a[i % na], b[j % nb]))
        ea = sub(a[(i + 1) % na], a[i % na])
        eb = sub(b[(j + 1) % nb], b[j % nb])
        c = ea[0] * eb[1] - ea[1] * eb[0]
        if j >= nb or (i < na and c > 0):
            i += 1
        elif i >= na or c < 0:
            j += 1
        else:
            i += 1
            j += 1
    return convex_hull(out)


def _edge_order(P: ConvexPolygon):
    # rotate so the bottom-most (then left-most) vertex comes first
    v = list(P.vertices)
    k = min(range(len(v)), key=lambda t: (v[t][1], v[t][0]))
    return v[k:] + v[:k]


def project_onto_segment(p: Point, a: Point, b: Point) -> Point:
    ab = sub(b, a)
    L2 = dot(ab, ab)
    if L2 == 0.0:
        return a
    t = dot(sub(p, a), ab) / L2
    t = min(1.0, max(0.0, t))
    return (a[0] + t * ab[0], a[1] + t * ab[1])


def _inside_polygon(p: Point, P: ConvexPolygon) -> bool:
    v = P.vertices
    if len(v) < 3:
        return False
    return all(cross(v[k], v[(k + 1) % len(v)], p) >= 0 for k in range(len(v)))


def project_onto_polygon(p: Point, P: ConvexPolygon) -> Point:
    v = P.vertices
    if len(v) == 1:
        return v[0]
    if _inside_polygon(p, P):
        return p
    best, bd = None, math.inf
    for a, b in P.edges():
        q = project_onto_segment(p, a, b)
        dq = dist(p, q)
        if dq < bd:
            best, bd = q, dq
    return best


def polygon_distance(p: Point, P: ConvexPolygon) -> float:
    """Distance from ``p`` to the filled polygon; 0 inside."""
    return dist(p, project_onto_polygon(p, P))


def point_set_distance(p: Point, A: Union[FinitePoints, ConvexPolygon, Sequence[Point]]) -> float:
    """|p A| for a finite set or a filled convex polygon."""
    if isinstance(A, ConvexPolygon):
        return polygon_distance(p, A)
    pts = A.points if isinstance(A, FinitePoints) else A
    if not pts:
        return math.inf
    return min(math.hypot(p[0] - a[0], p[1] - a[1]) for a in pts)


# --- curve intersections ---------------------------------------------------

def circle_circle_intersections(c1: Point, r1: float, c2: Point, r2: float,
                                tol: float = 1e-12) -> list:
    """Intersection points of two circles.

    Near-tangent pairs (gap within ``tol``) return the single tangency point;
    coincident circles return nothing.
    """
    if r1 > r2:
        # measure from the smaller circle: keeps a and h accurate when radii differ a lot
        c1, r1, c2, r2 = c2, r2, c1, r1
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    D = math.hypot(dx, dy)
    if D <= tol:
        return []
    if D > r1 + r2 + tol or D < abs(r1 - r2) - tol:
        return []
    a = ((D - r2) * (D + r2) + r1 * r1) / (2.0 * D)
    h2 = r1 * r1 - a * a
    ex, ey = dx / D, dy / D
    if h2 <= 0.0:
        # tangent within tol: midpoint of the closest pair of antipodal feet
        feet1 = [(c1[0] + s * r1 * ex, c1[1] + s * r1 * ey) for s in (1.0, -1.0)]
        feet2 = [(c2[0] + s * r2 * ex, c2[1] + s * r2 * ey) for s in (1.0, -1.0)]
        p, q = min(((p, q) for p in feet1 for q in feet2), key=lambda pq: dist(*pq))
        return [((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)]
    h = math.sqrt(h2)
    mx, my = c1[0] + a * ex, c1[1] + a * ey
    return [(mx - h * ey, my + h * ex), (mx + h * ey, my - h * ex)]


def segment_circle_intersections(a: Point, b: Point, c: Point, r: float,
                                 tol: float = 1e-12) -> list:
    d = sub(b, a)
    f = sub(a, c)
    A = dot(d, d)
    if A == 0.0:
        return [a] if abs(dist(a, c) - r) <= tol else []
    B = 2.0 * dot(f, d)
    C = dot(f, f) - r * r
    disc = B * B - 4 * A * C
    L = math.sqrt(A)
    if disc < 0:
        # tangent within tol: the foot of the perpendicular
        foot_t = -B / (2 * A)
        foot = (a[0] + foot_t * d[0], a[1] + foot_t * d[1])
        if abs(dist(foot, c) - r) <= tol and -tol / L <= foot_t <= 1 + tol / L:
            return [foot]
        return []
    s = math.sqrt(disc)
    out = []
    for t in ((-B - s) / (2 * A), (-B + s) / (2 * A)):
        if -tol / L <= t <= 1 + tol / L:
            t = min(1.0, max(0.0, t))
            out.append((a[0] + t * d[0], a[1] + t * d[1]))
    return out


def segment_segment_intersections(a: Point, b: Point, c: Point, e: Point,
                                  tol: float = 1e-12) -> list:
    r = sub(b, a)
    s = sub(e, c)
    den = r[0] * s[1] - r[1] * s[0]
    qp = sub(c, a)
    if abs(den) <= 1e-15 * max(1.0, norm(r) * norm(s)):
        # parallel: report overlapping endpoints
        out = []
        for p, (u, w) in ((a, (c, e)), (b, (c, e)), (c, (a, b)), (e, (a, b))):
            if dist(p, project_onto_segment(p, u, w)) <= tol:
                out.append(p)
        return out
    t = (qp[0] * s[1] - qp[1] * s[0]) / den
    u = (qp[0] * r[1] - qp[1] * r[0]) / den
    lr, ls = max(norm(r), 1e-300), max(norm(s), 1e-300)
    if -tol / lr <= t <= 1 + tol / lr and -tol / ls <= u <= 1 + tol / ls:
        t = min(1.0, max(0.0, t))
        return [(a[0] + t * r[0], a[1] + t * r[1])]
    return []


def circumcenter(a: Point, b: Point, c: Point) -> Optional[Point]:
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) < 1e-15:
        return None
    a2, b2, c2 = dot(a, a), dot(b, b), dot(c, c)
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    return (ux, uy)


def bisector_segment(a: Point, b: Point, half_length: float) -> Tuple[Point, Point]:
    """A long finite piece of the perpendicular bisector of ``ab``."""
    m = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    d = sub(b, a)
    L = norm(d)
    n = (-d[1] / L, d[0] / L)
    return (add(m, scale(n, -half_length)), add(m, scale(n, half_length)))
