"""Compact regions built from closed neighbourhoods of convex polygons.

Every convex region the solver handles is an intersection of atoms
``B_r(P)`` with ``P`` a (possibly degenerate) convex polygon. A disk is the
atom of a one-vertex polygon. Queries are answered by enumerating the few
points where an optimum can sit: the extreme point of a single atom, or an
intersection of two atom boundaries. In the plane this is exhaustive, so
projections, support values and emptiness are exact up to rounding.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import DEFAULT, Config
from .geometry import (
    ConvexPolygon,
    FinitePoints,
    Point,
    add,
    bisector_segment,
    circle_circle_intersections,
    circumcenter,
    convex_hull,
    dist,
    dot,
    norm,
    point_set_distance,
    polygon_distance,
    project_onto_polygon,
    scale,
    segment_circle_intersections,
    segment_segment_intersections,
    sub,
)


class NonConvergence(RuntimeError):
    """An iterative geometric routine hit its iteration cap."""


class Indeterminate(RuntimeError):
    """A tolerance band could not be resolved by exact enumeration."""


_PROBE = (0.6, -0.8)  # any fixed direction works for the emptiness test


def _atom_pieces(P: ConvexPolygon, r: float):
    """Boundary pieces of ``B_r(P)``: circles, segments, isolated points."""
    v = P.vertices
    if r <= 0.0:
        if len(v) == 1:
            return [], [], [v[0]]
        return [], P.edges(), []
    circles = [(c, r) for c in v]
    if len(v) == 1:
        return circles, [], []
    directed = [(v[0], v[1]), (v[1], v[0])] if len(v) == 2 else P.edges()
    segments = []
    for a, b in directed:
        e = sub(b, a)
        L = norm(e)
        n = (e[1] / L * r, -e[0] / L * r)
        segments.append((add(a, n), add(b, n)))
    return circles, segments, []


def _piece_intersections(pa, pb, tol):
    ca, sa, _ = pa
    cb, sb, _ = pb
    out = []
    for c1, r1 in ca:
        for c2, r2 in cb:
            out.extend(circle_circle_intersections(c1, r1, c2, r2, tol))
        for a, b in sb:
            out.extend(segment_circle_intersections(a, b, c1, r1, tol))
    for a, b in sa:
        for c2, r2 in cb:
            out.extend(segment_circle_intersections(a, b, c2, r2, tol))
        for c, e in sb:
            out.extend(segment_segment_intersections(a, b, c, e, tol))
    return out


def project_onto_atom(p: Point, P: ConvexPolygon, r: float) -> Point:
    q = project_onto_polygon(p, P)
    dq = dist(p, q)
    if dq <= r:
        return p
    return add(q, scale(sub(p, q), r / dq))


class ConvexCell:
    """``⋂_k B_{r_k}(P_k)``: a convex compact, possibly empty.

    ``provenance`` is an optional per-atom label; for disk cells of a finite
    boundary it records ``(compact index, point index)``.
    """

    def __init__(self, atoms: Sequence[Tuple[ConvexPolygon, float]], provenance=(),
                 tol: float = DEFAULT.tol):
        if not atoms:
            raise ValueError("a cell needs at least one atom")
        self.atoms = tuple((P, float(r)) for P, r in atoms)
        if any(r < 0 for _, r in self.atoms):
            raise ValueError("negative radius")
        self.provenance = tuple(provenance)
        self.tol = tol
        self._pieces = [_atom_pieces(P, r) for P, r in self.atoms]
        self.vertices = self._find_vertices()
        self.empty = not self.vertices and not self.extremes(_PROBE)

    # -- membership ------------------------------------------------------
    def slack(self, p: Point) -> float:
        """min_k (r_k - |p P_k|); nonnegative exactly on the cell."""
        return min(r - polygon_distance(p, P) for P, r in self.atoms)

    def contains(self, p: Point, tol: Optional[float] = None) -> bool:
        t = self.tol if tol is None else tol
        return all(polygon_distance(p, P) <= r + t for P, r in self.atoms)

    def _find_vertices(self) -> List[Point]:
        cands: list = []
        for pieces in self._pieces:
            cands.extend(pieces[2])
        for i, j in combinations(range(len(self.atoms)), 2):
            cands.extend(_piece_intersections(self._pieces[i], self._pieces[j], self.tol))
        return [p for p in cands if self.contains(p)]

    def extremes(self, u: Point) -> List[Point]:
        out = [add(P.extreme(u), scale(u, r)) for P, r in self.atoms]
        return [p for p in out if self.contains(p)]

    # -- queries -----------------------------------------------------------
    def support(self, u: Point) -> Tuple[float, Point]:
        """max over the cell of ``u . x`` and a maximiser."""
        if self.empty:
            raise ValueError("support of an empty cell")
        cands = self.vertices + self.extremes(u)
        x = max(cands, key=lambda q: dot(q, u))
        return dot(x, u), x

    def project(self, p: Point) -> Point:
        """Nearest point of the cell (exact candidate enumeration)."""
        if self.empty:
            raise ValueError("projection onto an empty cell")
        if self.contains(p, 0.0):
            return p
        cands = [project_onto_atom(p, P, r) for P, r in self.atoms]
        cands = [q for q in cands if self.contains(q)] + self.vertices
        return min(cands, key=lambda q: dist(p, q))

    def distance(self, p: Point) -> float:
        if self.empty:
            return math.inf
        return dist(p, self.project(p))

    def shrunk(self, t: float) -> Optional["ConvexCell"]:
        """The cell with every radius reduced by ``t``; None when some radius < 0."""
        atoms = [(P, r - t) for P, r in self.atoms]
        if any(r < 0 for _, r in atoms):
            return None
        return type(self)._from_atoms(atoms, self.provenance, 1e-13)

    @classmethod
    def _from_atoms(cls, atoms, provenance, tol):
        return ConvexCell(atoms, provenance, tol)

    def max_slack(self) -> Tuple[float, Optional[Point]]:
        """sup_x min_k (r_k - |x P_k|) by bisection on uniform shrinking."""
        pts = [v for P, _ in self.atoms for v in P.vertices]
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        span = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        hi = min(r for _, r in self.atoms)
        lo = -(span + 1.0)
        top = self.shrunk(hi)
        if top is not None and not top.empty:
            return hi, top.support(_PROBE)[1]
        witness = self.shrunk(lo).support(_PROBE)[1]
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if not (lo < mid < hi):
                break
            c = self.shrunk(mid)
            if c is not None and not c.empty:
                lo, witness = mid, c.support(_PROBE)[1]
            else:
                hi = mid
        return lo, witness

    def bbox(self) -> Tuple[float, float, float, float]:
        xmin = -self.support((-1.0, 0.0))[0]
        xmax = self.support((1.0, 0.0))[0]
        ymin = -self.support((0.0, -1.0))[0]
        ymax = self.support((0.0, 1.0))[0]
        return xmin, ymin, xmax, ymax

    def __repr__(self):
        return f"{type(self).__name__}(atoms={len(self.atoms)}, empty={self.empty})"


class DiskIntersectionCell(ConvexCell):
    """``⋂_k B_{r_k}(c_k)``."""

    def __init__(self, disks: Sequence[Tuple[Point, float]], provenance=(),
                 tol: float = DEFAULT.tol):
        # built in the solver's inner loop, so the polygon atoms are made lazily
        self._disks = tuple(((float(c[0]), float(c[1])), float(r)) for c, r in disks)
        if not self._disks:
            raise ValueError("a cell needs at least one atom")
        if any(r < 0 for _, r in self._disks):
            raise ValueError("negative radius")
        self.provenance = tuple(provenance)
        self.tol = tol
        self.vertices = self._find_vertices()
        self.empty = not self.vertices and not self.extremes(_PROBE)

    @cached_property
    def atoms(self):
        return tuple((ConvexPolygon((c,)), r) for c, r in self._disks)

    @cached_property
    def _pieces(self):
        return [_atom_pieces(P, r) for P, r in self.atoms]

    @classmethod
    def _from_atoms(cls, atoms, provenance, tol):
        return DiskIntersectionCell([(P.vertices[0], r) for P, r in atoms], provenance, tol)

    @property
    def disks(self) -> List[Tuple[Point, float]]:
        return list(self._disks)

    # fast paths: the generic polygon code is correct but slow for disks
    def slack(self, p: Point) -> float:
        x, y = p
        return min(r - math.hypot(x - c[0], y - c[1]) for c, r in self._disks)

    def contains(self, p: Point, tol: Optional[float] = None) -> bool:
        t = self.tol if tol is None else tol
        x, y = p
        for c, r in self._disks:
            if math.hypot(x - c[0], y - c[1]) > r + t:
                return False
        return True

    def _find_vertices(self) -> List[Point]:
        raw = self._disks
        cands = [c for c, r in raw if r == 0.0]
        for i, j in combinations(range(len(raw)), 2):
            cands.extend(circle_circle_intersections(raw[i][0], raw[i][1], raw[j][0], raw[j][1],
                                                     self.tol))
        return [p for p in cands if self.contains(p)]

    def extremes(self, u: Point) -> List[Point]:
        out = [(c[0] + r * u[0], c[1] + r * u[1]) for c, r in self._disks]
        return [p for p in out if self.contains(p)]

    def project(self, p: Point) -> Point:
        if self.empty:
            raise ValueError("projection onto an empty cell")
        if self.contains(p, 0.0):
            return p
        x, y = p
        best, bd = None, math.inf
        for c, r in self._disks:
            dx, dy = x - c[0], y - c[1]
            L = math.hypot(dx, dy)
            if L <= r:
                continue  # p lies in this disk, so it cannot be the active one alone
            q = (c[0] + dx * r / L, c[1] + dy * r / L)
            dq = L - r
            if dq < bd and self.contains(q):
                best, bd = q, dq
        for q in self.vertices:
            dq = math.hypot(x - q[0], y - q[1])
            if dq < bd:
                best, bd = q, dq
        if best is None:
            # every exact candidate missed by rounding: p is within tol of the cell,
            # or the cell is a sliver around a tiny disk
            if self.contains(p):
                return p
            best = min(self.extremes(_PROBE), key=lambda q: dist(p, q))
        return best

    def arcs(self) -> List[Tuple[Point, float, float, float]]:
        """Boundary arcs as ``(center, radius, start angle, end angle)``, CCW."""
        if self.empty:
            return []
        out = []
        disks = self.disks
        for k, (c, r) in enumerate(disks):
            if r == 0.0:
                continue
            intervals = [(0.0, 2.0 * math.pi)]
            for l, (c2, r2) in enumerate(disks):
                if l == k:
                    continue
                D = dist(c, c2)
                if D == 0.0:
                    if r2 < r - self.tol:
                        intervals = []
                    continue
                cosa = (r * r + D * D - r2 * r2) / (2.0 * r * D)
                if cosa <= -1.0:
                    continue
                if cosa > 1.0:
                    intervals = []
                    break
                half = math.acos(cosa)
                phi = math.atan2(c2[1] - c[1], c2[0] - c[0])
                intervals = _intersect_arcs(intervals, phi - half, phi + half)
                if not intervals:
                    break
            for a, b in intervals:
                out.append((c, r, a, b))
        return out


def _intersect_arcs(intervals, a, b):
    """Intersect angle intervals (in [0, 2pi)) with the arc [a, b]."""
    two_pi = 2.0 * math.pi
    a %= two_pi
    b = a + (b - a if b >= a else b - a + two_pi)
    pieces = [(a, min(b, two_pi))]
    if b > two_pi:
        pieces.append((0.0, b - two_pi))
    out = []
    for s, e in intervals:
        for ps, pe in pieces:
            lo, hi = max(s, ps), min(e, pe)
            if hi >= lo:
                out.append((lo, hi))
    return out


class CellUnion:
    """Finite union of nonempty convex cells; may be empty (no cells)."""

    def __init__(self, cells: Sequence[ConvexCell]):
        self.cells = tuple(c for c in cells if not c.empty)

    @property
    def empty(self) -> bool:
        return not self.cells

    def contains(self, p: Point, tol: Optional[float] = None) -> bool:
        return any(c.contains(p, tol) for c in self.cells)

    def project(self, p: Point) -> Point:
        if self.empty:
            raise ValueError("projection onto an empty union")
        return min((c.project(p) for c in self.cells), key=lambda q: dist(p, q))

    def distance(self, p: Point) -> float:
        if self.empty:
            return math.inf
        return min(c.distance(p) for c in self.cells)

    def support(self, u: Point) -> Tuple[float, Point]:
        return max((c.support(u) for c in self.cells), key=lambda hx: hx[0])

    def bbox(self):
        boxes = [c.bbox() for c in self.cells]
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return f"CellUnion(cells={len(self.cells)})"


@dataclass(frozen=True)
class InteriorTest:
    status: str  # "interior" | "point" | "thin" | "empty"
    witness: Optional[Point]
    slack: float

    def __bool__(self):
        return self.status == "interior"


def cell_interior_nonempty(cell: ConvexCell, cfg: Config = DEFAULT) -> InteriorTest:
    """Three-way interior test.

    Outside the ``[-tol, tol]`` slack band the sign decides. Inside it the
    cell is resolved by the tangency points among its boundary pieces: none
    means empty, clustered ones a single point (their centroid). A cell cut
    by a zero-radius atom may be a segment (``thin``, no interior) or still
    have interior; its width decides.
    """
    s, w = cell.max_slack()
    if s > cfg.tol:
        return InteriorTest("interior", w, s)
    if s < -cfg.tol:
        return InteriorTest("empty", None, s)
    cands = list(cell.vertices) + cell.extremes(_PROBE)
    if cands:
        cands += [cell.support((math.cos(t), math.sin(t)))[1] for t in np.arange(8) * (math.pi / 4)]
    if not cands:
        return InteriorTest("empty", None, s)
    cx = sum(p[0] for p in cands) / len(cands)
    cy = sum(p[1] for p in cands) / len(cands)
    spread = max(dist(p, (cx, cy)) for p in cands)
    if spread <= 1e3 * math.sqrt(cfg.tol):
        return InteriorTest("point", (cx, cy), s)
    if any(r <= cfg.tol for _, r in cell.atoms):
        # slack cannot exceed a zero radius, so measure the width directly
        w = _cell_width(cell)
        return InteriorTest("interior" if w > 10 * cfg.tol else "thin", (cx, cy), s)
    raise Indeterminate(f"slack {s:.3g} within tol but candidates spread {spread:.3g}")


def _cell_width(cell: ConvexCell, k: int = 90) -> float:
    out = math.inf
    for t in range(k):
        u = (math.cos(math.pi * t / k), math.sin(math.pi * t / k))
        out = min(out, cell.support(u)[0] + cell.support((-u[0], -u[1]))[0])
    return out


def project_onto_cell(p: Point, cell: ConvexCell, cfg: Config = DEFAULT,
                      method: str = "exact") -> Point:
    """Metric projection onto a nonempty cell.

    ``method="dykstra"`` runs cyclic Dykstra projections onto the atoms and
    raises :class:`NonConvergence` past ``cfg.proj_max_iter`` sweeps;
    ``"exact"`` enumerates candidates.
    """
    if method == "exact":
        return cell.project(p)
    if method != "dykstra":
        raise ValueError(f"unknown method {method!r}")
    if cell.contains(p, 0.0):
        return p
    x = p
    incs = [(0.0, 0.0)] * len(cell.atoms)
    for _ in range(cfg.proj_max_iter):
        prev = x
        for k, (P, r) in enumerate(cell.atoms):
            y = add(x, incs[k])
            x = project_onto_atom(y, P, r)
            incs[k] = sub(y, x)
        if dist(x, prev) < cfg.proj_tol and cell.contains(x, cfg.proj_tol):
            return x
    raise NonConvergence(f"Dykstra did not reach {cfg.proj_tol:g} in {cfg.proj_max_iter} sweeps")


# --- convex offset regions ---------------------------------------------------

def _np_polygon_distance(X: np.ndarray, P: ConvexPolygon) -> np.ndarray:
    V = np.asarray(P.vertices, dtype=float)
    if len(V) == 1:
        return np.hypot(X[:, 0] - V[0, 0], X[:, 1] - V[0, 1])
    if len(V) == 2:
        edges = [(V[0], V[1])]
    else:
        edges = [(V[k], V[(k + 1) % len(V)]) for k in range(len(V))]
    best = np.full(len(X), np.inf)
    inside = np.ones(len(X), dtype=bool) if len(V) >= 3 else np.zeros(len(X), dtype=bool)
    for a, b in edges:
        ab = b - a
        t = np.clip(((X - a) @ ab) / (ab @ ab), 0.0, 1.0)
        q = a + t[:, None] * ab
        best = np.minimum(best, np.hypot(X[:, 0] - q[:, 0], X[:, 1] - q[:, 1]))
        if len(V) >= 3:
            inside &= (ab[0] * (X[:, 1] - a[1]) - ab[1] * (X[:, 0] - a[0])) >= 0
    best[inside] = 0.0
    return best


def _support_samples(cell: ConvexCell, n: int):
    # uniform directions plus every edge normal: offsets of polygons have
    # straight sides, and only their exact normals bound them tightly
    theta = list(2.0 * np.pi * np.arange(n) / n)
    for P, _ in cell.atoms:
        if len(P.vertices) >= 2:
            for a, b in P.edges():
                theta.append(math.atan2(-(b[0] - a[0]), b[1] - a[1]) % (2.0 * math.pi))
                if len(P.vertices) == 2:
                    theta.append(math.atan2(b[0] - a[0], -(b[1] - a[1])) % (2.0 * math.pi))
    theta = np.unique(np.round(np.asarray(theta), 15))
    U = np.column_stack([np.cos(theta), np.sin(theta)])
    n = len(theta)
    best_h = np.full(n, -np.inf)
    best_x = np.zeros((n, 2))
    if cell.vertices:
        V = np.asarray(cell.vertices)
        S = U @ V.T
        k = np.argmax(S, axis=1)
        best_h = S[np.arange(n), k]
        best_x = V[k]
    for P, r in cell.atoms:
        PV = np.asarray(P.vertices)
        E = PV[np.argmax(U @ PV.T, axis=1)] + r * U
        ok = np.ones(n, dtype=bool)
        for Q, rq in cell.atoms:
            ok &= _np_polygon_distance(E, Q) <= rq + cell.tol
        h = np.einsum("ij,ij->i", U, E)
        better = ok & (h > best_h)
        best_h = np.where(better, h, best_h)
        best_x = np.where(better[:, None], E, best_x)
    return U, best_h, best_x


class ConvexOffsetRegion:
    """``⋂_i B_{d_i}(P_i)`` with certified inner and outer polygons.

    The inner polygon is the hull of support contact points, the outer one
    the intersection of the supporting half-planes; ``n_dirs`` is doubled
    until their Hausdorff gap is at most ``eps``.
    """

    MAX_DIRS = 1 << 15

    def __init__(self, terms: Sequence[Tuple[ConvexPolygon, float]], cfg: Config = DEFAULT):
        self.terms = tuple((P, float(d)) for P, d in terms)
        self.cfg = cfg
        self.cell = ConvexCell(self.terms, tol=cfg.tol)
        self.inner: Optional[ConvexPolygon] = None
        self.outer: Optional[ConvexPolygon] = None
        self.gap = 0.0
        self.n_dirs = 0
        if not self.cell.empty:
            self._approximate()

    @property
    def empty(self) -> bool:
        return self.cell.empty

    def _approximate(self):
        n = self.cfg.n_dirs
        while True:
            U, h, X = _support_samples(self.cell, n)
            O = _consecutive_line_meets(U, h)
            gap = _segment_gap(O, X)
            if gap <= self.cfg.eps or n >= self.MAX_DIRS:
                break
            n *= 2
        inner = convex_hull(map(tuple, X))
        outer = convex_hull(map(tuple, O))
        self.inner, self.outer, self.gap, self.n_dirs = inner, outer, gap, n
        self.support_dirs, self.support_values = U, h

    def contains(self, p: Point, tol: Optional[float] = None) -> bool:
        return self.cell.contains(p, tol)

    def project(self, p: Point) -> Point:
        return self.cell.project(p)

    def distance(self, p: Point) -> float:
        return self.cell.distance(p)

    def support(self, u: Point) -> Tuple[float, Point]:
        return self.cell.support(u)

    def bbox(self):
        return self.cell.bbox()

    def __repr__(self):
        return f"ConvexOffsetRegion(terms={len(self.terms)}, empty={self.empty}, gap={self.gap:.2g})"


def _consecutive_line_meets(U: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Meeting points of the support lines of directions k and k+1."""
    V, hv = np.roll(U, -1, axis=0), np.roll(h, -1)
    det = U[:, 0] * V[:, 1] - U[:, 1] * V[:, 0]
    x = (h * V[:, 1] - hv * U[:, 1]) / det
    y = (U[:, 0] * hv - V[:, 0] * h) / det
    return np.column_stack([x, y])


def _segment_gap(O: np.ndarray, X: np.ndarray) -> float:
    """max_k |O_k, [X_k, X_{k+1}]|: an upper bound on how far the outer
    polygon reaches beyond the inner one."""
    Y = np.roll(X, -1, axis=0)
    D = Y - X
    L = np.einsum("ij,ij->i", D, D)
    t = np.where(L > 0, np.einsum("ij,ij->i", O - X, D) / np.where(L > 0, L, 1.0), 0.0)
    Q = X + np.clip(t, 0.0, 1.0)[:, None] * D
    return float(np.max(np.hypot(*(O - Q).T)))


@dataclass(frozen=True)
class Neighborhood:
    """``B_r(base)`` for a base with an exact distance; |x B_r(R)| = (|x R| - r)+."""

    base: object
    radius: float

    @property
    def empty(self):
        return getattr(self.base, "empty", False)

    def distance(self, p: Point) -> float:
        return max(0.0, region_point_distance(p, self.base) - self.radius)

    def contains(self, p: Point, tol: float = DEFAULT.tol) -> bool:
        return self.distance(p) <= tol

    def project(self, p: Point) -> Point:
        q = region_project(p, self.base)
        dq = dist(p, q)
        if dq <= self.radius:
            return p
        return add(q, scale(sub(p, q), self.radius / dq))

    def bbox(self):
        x0, y0, x1, y1 = region_bbox(self.base)
        r = self.radius
        return x0 - r, y0 - r, x1 + r, y1 + r


Region = Union[FinitePoints, ConvexPolygon, ConvexCell, CellUnion, ConvexOffsetRegion, Neighborhood]


def is_convex_region(R) -> bool:
    return isinstance(R, (ConvexPolygon, ConvexCell, ConvexOffsetRegion)) or (
        isinstance(R, FinitePoints) and len(R) == 1)


def region_empty(R) -> bool:
    return bool(getattr(R, "empty", False))


def region_point_distance(p: Point, R) -> float:
    """|p R| for any supported region; +inf for an empty one."""
    if isinstance(R, (FinitePoints, ConvexPolygon)):
        return point_set_distance(p, R)
    return R.distance(p)


def region_project(p: Point, R) -> Point:
    if isinstance(R, FinitePoints):
        return min(R.points, key=lambda a: dist(p, a))
    if isinstance(R, ConvexPolygon):
        return project_onto_polygon(p, R)
    return R.project(p)


def region_bbox(R):
    if isinstance(R, FinitePoints):
        pts = R.points
    elif isinstance(R, ConvexPolygon):
        pts = R.vertices
    else:
        return R.bbox()
    return (min(p[0] for p in pts), min(p[1] for p in pts),
            max(p[0] for p in pts), max(p[1] for p in pts))


def contains(R, p: Point, cfg: Config = DEFAULT) -> bool:
    """Membership up to the comparison tolerance."""
    return region_point_distance(p, R) <= cfg.tol


def ball_neighborhood(A, r: float, cfg: Config = DEFAULT):
    """``B_r(A)``.

    Finite sets give a union of single-disk cells, polygons a one-term offset
    region; other regions are wrapped in :class:`Neighborhood`.
    """
    if r < 0:
        raise ValueError("radius must be non-negative")
    if isinstance(A, FinitePoints):
        return CellUnion([DiskIntersectionCell([(a, r)], [(0, j)], cfg.tol)
                          for j, a in enumerate(A.points)])
    if isinstance(A, ConvexPolygon):
        return ConvexOffsetRegion([(A, r)], cfg)
    if isinstance(A, CellUnion) and all(len(c.atoms) == 1 for c in A.cells):
        return CellUnion([type(c)._from_atoms([(c.atoms[0][0], c.atoms[0][1] + r)],
                                              c.provenance, cfg.tol) for c in A.cells])
    if isinstance(A, ConvexOffsetRegion) and len(A.terms) == 1:
        P, d = A.terms[0]
        return ConvexOffsetRegion([(P, d + r)], cfg)
    return Neighborhood(A, r)


# --- boundary sampling ---------------------------------------------------------

def boundary_sample(R, eps: float, cfg: Config = DEFAULT) -> List[Point]:
    """Points of the boundary of ``R`` such that every boundary point is within
    ``eps`` of one of them (offset regions: within ``eps`` plus the polygon gap)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    if isinstance(R, FinitePoints):
        return list(R.points)
    if isinstance(R, ConvexPolygon):
        return _polygon_boundary(R, eps)
    if isinstance(R, DiskIntersectionCell):
        return _cell_boundary(R, eps)
    if isinstance(R, ConvexOffsetRegion):
        return [] if R.empty else _polygon_boundary(R.inner, eps)
    if isinstance(R, ConvexCell):
        return boundary_sample(ConvexOffsetRegion(R.atoms, cfg), eps, cfg)
    if isinstance(R, CellUnion):
        out = []
        for k, c in enumerate(R.cells):
            others = [o for m, o in enumerate(R.cells) if m != k]
            for p in boundary_sample(c, eps, cfg):
                if not any(o.slack(p) > cfg.tol for o in others):
                    out.append(p)
        return out
    raise TypeError(f"cannot sample {type(R).__name__}")


def _polygon_boundary(P: ConvexPolygon, eps: float) -> List[Point]:
    if len(P.vertices) == 1:
        return [P.vertices[0]]
    out = []
    edges = P.edges() if len(P.vertices) > 2 else [P.edges()[0], P.edges()[0][::-1]]
    for a, b in edges:
        m = max(1, math.ceil(dist(a, b) / eps))
        out.extend((a[0] + (b[0] - a[0]) * t / m, a[1] + (b[1] - a[1]) * t / m) for t in range(m))
    return out


def _cell_boundary(cell: DiskIntersectionCell, eps: float) -> List[Point]:
    if cell.empty:
        return []
    arcs = cell.arcs()
    if not arcs:
        # a single point (tangency) or zero-radius disk
        return [cell.support(_PROBE)[1]]
    out = []
    for c, r, a, b in arcs:
        m = max(1, math.ceil((b - a) * r / eps))
        out.extend((c[0] + r * math.cos(a + (b - a) * t / m),
                    c[1] + r * math.sin(a + (b - a) * t / m)) for t in range(m + 1))
    return out


# --- directed distances ------------------------------------------------------------

def sup_distance_to_points(cell: ConvexCell, pts: Sequence[Point]) -> Tuple[float, Point]:
    """max over the cell of |x A| for finite A, with a maximiser.

    Inside the Voronoi region of one site the distance is convex, so the
    maximum sits at an extreme point of (cell ∩ Voronoi region): a cell
    vertex, the far point of a boundary circle, a bisector crossing of the
    boundary, or a Voronoi vertex. All are enumerated.
    """
    pts = list(pts)
    cands = list(cell.vertices) + cell.extremes(_PROBE)
    circles, segments = [], []
    for pc in cell._pieces:
        circles.extend(pc[0])
        segments.extend(pc[1])
    for c, r in circles:
        for a in pts:
            d = dist(c, a)
            if d > 0:
                cands.append(add(c, scale(sub(c, a), r / d)))
            else:
                cands.extend(add(c, (r * math.cos(t), r * math.sin(t))) for t in (0.0, math.pi / 2))
    x0, y0, x1, y1 = _atoms_bbox(cell)
    half = 2.0 * (math.hypot(x1 - x0, y1 - y0) + max(math.hypot(p[0], p[1]) for p in pts) + 1.0)
    for a, b in combinations(pts, 2):
        if a == b:
            continue
        s0, s1 = bisector_segment(a, b, half)
        for c, r in circles:
            cands.extend(segment_circle_intersections(s0, s1, c, r, cell.tol))
        for u, w in segments:
            cands.extend(segment_segment_intersections(s0, s1, u, w, cell.tol))
    for a, b, c in combinations(pts, 3):
        cc = circumcenter(a, b, c)
        if cc is not None:
            cands.append(cc)
    cands = [q for q in cands if cell.contains(q)]
    best = max(cands, key=lambda q: point_set_distance(q, pts))
    return point_set_distance(best, pts), best


def sup_distance_to_polygon(cell: ConvexCell, P: ConvexPolygon) -> Tuple[float, Point]:
    """max over the cell of |x P| for a filled convex polygon ``P``, with a maximiser.

    The distance is convex, so on a straight boundary piece it peaks at an
    end (a cell vertex). On an arc ``c + r*u`` it equals
    ``max_u (u.c + r - h_P(u))`` whose critical directions are the edge
    normals of ``P`` and the directions ``c - v`` for vertices ``v``.
    """
    pv = P.vertices
    dirs = []
    for a, b in P.edges():
        e = sub(b, a)
        L = norm(e)
        dirs.extend([(e[1] / L, -e[0] / L), (-e[1] / L, e[0] / L)])
    cands = list(cell.vertices) + cell.extremes(_PROBE)
    for Q, r in cell.atoms:
        if r <= 0.0:
            continue
        for c in Q.vertices:
            us = list(dirs)
            for v in pv:
                w = sub(c, v)
                L = norm(w)
                if L > 0:
                    us.append(scale(w, 1.0 / L))
            for u in us:
                x = add(c, scale(u, r))
                if cell.contains(x):
                    cands.append(x)
    best = max(cands, key=lambda q: polygon_distance(q, P))
    return polygon_distance(best, P), best


def _atoms_bbox(cell: ConvexCell):
    xs = [v[0] for P, r in cell.atoms for v in P.vertices]
    ys = [v[1] for P, r in cell.atoms for v in P.vertices]
    rr = max(r for _, r in cell.atoms)
    return min(xs) - rr, min(ys) - rr, max(xs) + rr, max(ys) + rr


def lipschitz_sup(R, g, eps: float, max_nodes: int = 200_000) -> Tuple[float, float]:
    """Certified sup over region ``R`` of a 1-Lipschitz function ``g``.

    Branch and bound over squares: a square meeting ``R`` is bounded above by
    ``g(center) + half-diagonal``. Returns ``(value, error)``; ``error`` is
    the remaining gap, at most ``eps`` unless the node budget ran out.
    """
    x0, y0, x1, y1 = region_bbox(R)
    side = max(x1 - x0, y1 - y0, 1e-12)
    best = -math.inf
    heap = []

    def push(cx, cy, s):
        nonlocal best
        half = s * math.sqrt(0.5)
        c = (cx, cy)
        if region_point_distance(c, R) > half:
            return
        q = region_project(c, R)
        best = max(best, g(q))
        heapq.heappush(heap, (-(g(c) + half), cx, cy, s))

    push((x0 + x1) / 2, (y0 + y1) / 2, side)
    nodes = 0
    while heap:
        ub = -heap[0][0]
        if ub - best <= eps or nodes >= max_nodes:
            return best, max(0.0, ub - best)
        _, cx, cy, s = heapq.heappop(heap)
        h = s / 4
        for dx in (-h, h):
            for dy in (-h, h):
                push(cx + dx, cy + dy, s / 2)
                nodes += 1
    return best, 0.0


def _directed(A, B, cfg: Config) -> Tuple[float, float]:
    """sup_{a in A} |a B| with an error bound."""
    if isinstance(A, FinitePoints):
        return max(region_point_distance(a, B) for a in A.points), 0.0
    if isinstance(A, ConvexPolygon):
        if is_convex_region(B):
            # distance to a convex set is convex: the max sits at a vertex
            return max(region_point_distance(v, B) for v in A.vertices), 0.0
        if isinstance(B, FinitePoints):
            return _sup_polygon_to_points(A, B.points), 0.0
    if isinstance(A, ConvexOffsetRegion):
        A = A.cell
    if isinstance(A, ConvexCell) and isinstance(B, FinitePoints):
        return sup_distance_to_points(A, B.points)[0], 0.0
    if isinstance(A, ConvexCell) and isinstance(B, ConvexPolygon):
        return sup_distance_to_polygon(A, B)[0], 0.0
    if isinstance(A, ConvexCell) and isinstance(B, (ConvexCell, ConvexOffsetRegion)):
        return _sup_convex_to_convex(A, B, cfg)
    if isinstance(A, CellUnion) and isinstance(B, FinitePoints):
        return max(sup_distance_to_points(c, B.points)[0] for c in A.cells), 0.0
    if isinstance(A, CellUnion):
        vals = [_directed(c, B, cfg) for c in A.cells]
        return max(v for v, _ in vals), max(e for _, e in vals)
    return lipschitz_sup(A, lambda x: region_point_distance(x, B), cfg.eps)


def _sup_convex_to_convex(A: ConvexCell, B, cfg: Config) -> Tuple[float, float]:
    # |x B| is convex, so over a polygon it peaks at a vertex; the inner and
    # outer polygons of A bracket the sup within their gap
    if A.empty:
        return 0.0, 0.0
    R = ConvexOffsetRegion(A.atoms, cfg)
    lower = max(B.distance(v) for v in R.inner.vertices)
    upper = max(B.distance(v) for v in R.outer.vertices)
    return upper, max(0.0, upper - lower)


def _sup_polygon_to_points(P: ConvexPolygon, pts: Sequence[Point]) -> float:
    cands = list(P.vertices)
    half = 4.0 * (max(norm(v) for v in P.vertices) + max(norm(p) for p in pts) + 1.0)
    for a, b in combinations(pts, 2):
        s0, s1 = bisector_segment(a, b, half)
        for u, w in P.edges():
            cands.extend(segment_segment_intersections(s0, s1, u, w, 1e-12))
    for a, b, c in combinations(pts, 3):
        cc = circumcenter(a, b, c)
        if cc is not None and polygon_distance(cc, P) <= 1e-12:
            cands.append(cc)
    return max(point_set_distance(q, pts) for q in cands)


def directed_distance(A, B, cfg: Config = DEFAULT) -> Tuple[float, float]:
    """sup_{a in A} |a B| and its certified absolute error."""
    if region_empty(A):
        return 0.0, 0.0
    if region_empty(B):
        return math.inf, 0.0
    return _directed(A, B, cfg)


def set_set_distance(A, B, cfg: Config = DEFAULT) -> float:
    """inf_{a in A} |a B|; 0 iff the two compacts meet."""
    if region_empty(A) or region_empty(B):
        return math.inf
    if isinstance(A, FinitePoints):
        return min(region_point_distance(a, B) for a in A.points)
    if isinstance(B, FinitePoints):
        return set_set_distance(B, A, cfg)
    if isinstance(A, CellUnion):
        return min(set_set_distance(c, B, cfg) for c in A.cells)
    if isinstance(B, CellUnion):
        return min(set_set_distance(A, c, cfg) for c in B.cells)
    # two convex regions: alternate projections converge to a closest pair
    x = region_project(_center(A), A)
    best = math.inf
    for _ in range(10_000):
        y = region_project(x, B)
        x2 = region_project(y, A)
        d = dist(x2, y)
        if best - d < 1e-15:
            return min(best, d)
        best, x = d, x2
    return best


def _center(R) -> Point:
    x0, y0, x1, y1 = region_bbox(R)
    return ((x0 + x1) / 2, (y0 + y1) / 2)


def hausdorff_distance(A, B, cfg: Config = DEFAULT) -> Tuple[float, float]:
    """``d_H(A, B)`` and its certified absolute error (0 when exact)."""
    ab, e1 = directed_distance(A, B, cfg)
    ba, e2 = directed_distance(B, A, cfg)
    if ab >= ba:
        return ab, max(e1, e2) if abs(ab - ba) <= e1 + e2 else e1
    return ba, max(e1, e2) if abs(ab - ba) <= e1 + e2 else e2
