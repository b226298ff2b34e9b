"""Far, non-dense and discrete boundary points, and the contact sets they pin.

For a solution vector ``d`` a point ``a`` of ``A_i`` is

* far when the open ball ``U_{d_i}(a)`` misses ``K_d``; since the closed
  ball meets ``K_d`` this is the identity ``|a K_d| = d_i``;
* non-dense when ``B_{d_i}(a) ∩ K_d`` has empty interior;
* discrete when ``B_{d_i}(a) ∩ K_d`` is finite.

``B_{d_i}(a) ∩ K_d`` is a union of convex pieces (one per cell of K_d), so
non-density is a per-piece interior test and discreteness a per-piece
"is it a point" test. The two are computed by different routes (maximum
slack versus the spread of support points) and cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .config import DEFAULT, Config
from .geometry import ConvexPolygon, Point, dist
from .regions import (
    CellUnion,
    ConvexCell,
    DiskIntersectionCell,
    Indeterminate,
    boundary_sample,
    cell_interior_nonempty,
    sup_distance_to_polygon,
)
from .steiner import Boundary, SteinerReport

_DIRS = tuple((math.cos(k * math.pi / 4), math.sin(k * math.pi / 4)) for k in range(8))
CONTACT_DEDUP = 1e-7


@dataclass(frozen=True)
class PointInfo:
    compact: int
    index: int
    point: Point
    distance_to_Kd: float
    far: bool
    nondense: bool
    discrete: bool
    contact_points: Tuple[Point, ...]
    pieces: Tuple[ConvexCell, ...] = field(default=(), repr=False, compare=False)

    @property
    def consistent(self) -> bool:
        """Non-dense and discrete agree (they must, for finite boundaries)."""
        return self.nondense == self.discrete


@dataclass
class PointClassification:
    d: Tuple[float, ...]
    points: List[List[PointInfo]]
    # polygon compacts: sampled boundary points found far, per compact
    far_samples: List[List[Point]] = field(default_factory=list)

    def far(self, i: int) -> List[PointInfo]:
        return [p for p in self.points[i] if p.far]

    def discrete(self, i: int) -> List[PointInfo]:
        return [p for p in self.points[i] if p.discrete]

    def all(self):
        return [p for row in self.points for p in row]

    @property
    def mismatches(self) -> List[PointInfo]:
        return [p for p in self.all() if not p.consistent]


def _piece(cell: ConvexCell, a: Point, r: float, tol: float) -> ConvexCell:
    if isinstance(cell, DiskIntersectionCell):
        return DiskIntersectionCell(cell.disks + [(a, r)], cell.provenance, tol)
    return ConvexCell(list(cell.atoms) + [(ConvexPolygon((a,)), r)], cell.provenance, tol)


def point_extent(cell: ConvexCell) -> float:
    """Spread of the cell's support points in eight directions (0 for a point)."""
    pts = list(cell.vertices)
    for u in _DIRS:
        pts.extend(cell.extremes(u))
    if not pts:
        return 0.0
    return max(dist(p, q) for p in pts for q in pts)


def _point_threshold(cell: ConvexCell, tol: float) -> float:
    # a lens of slack s is at most about 2*sqrt(2*r*s) long with r the smallest
    # radius, so this matches the [-tol, tol] band of the interior test
    r = max(tol, min(r for _, r in cell.atoms))
    return 4.0 * math.sqrt(r * tol)


def _centroid(cell: ConvexCell) -> Point:
    pts = list(cell.vertices)
    for u in _DIRS:
        pts.extend(cell.extremes(u))
    return (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))


def _dedup(points: Sequence[Point], tol: float = CONTACT_DEDUP) -> Tuple[Point, ...]:
    out: List[Point] = []
    for p in points:
        if not any(dist(p, q) <= tol for q in out):
            out.append(p)
    return tuple(sorted(out))


def classify_point(a: Point, i: int, j: int, d_i: float, K: CellUnion,
                   cfg: Config = DEFAULT) -> PointInfo:
    dK = K.distance(a)
    far = dK >= d_i - cfg.tol
    pieces = []
    for cell in K.cells:
        pc = _piece(cell, a, d_i, cfg.tol)
        if not pc.empty:
            pieces.append(pc)
    nondense = True
    for pc in pieces:
        try:
            if cell_interior_nonempty(pc, cfg).status == "interior":
                nondense = False
                break
        except Indeterminate:
            raise Indeterminate(f"point {j} of compact {i}: tangency band not resolved")
    contacts = []
    discrete = True
    for pc in pieces:
        if point_extent(pc) <= _point_threshold(pc, cfg.tol):
            contacts.append(_centroid(pc))
        else:
            discrete = False
    return PointInfo(i, j, a, dK, far, nondense, discrete,
                     _dedup(contacts) if discrete else (), tuple(pieces))


def classify_points(A: Boundary, report: SteinerReport, cfg: Config = DEFAULT) -> PointClassification:
    """Flags for every boundary point (polygon compacts: every vertex, plus
    far boundary samples)."""
    if not report.feasible:
        raise ValueError("classification needs a feasible solution vector")
    K, d = report.K_d, report.d.d
    rows = []
    samples = []
    for i in range(A.n):
        rows.append([classify_point(a, i, j, d[i], K, cfg) for j, a in enumerate(A.points(i))])
        far_s = []
        if not A.finite:
            P = A.compacts[i]
            for x in boundary_sample(P, max(cfg.eps, 1e-3) * 10, cfg):
                if K.distance(x) >= d[i] - cfg.tol:
                    far_s.append(x)
        samples.append(far_s)
    return PointClassification(tuple(d), rows, samples)


@dataclass
class HPSet:
    """Contact locus of the far (``kind="F"``) or discrete (``kind="D"``) points.

    ``pieces[i]`` is a :class:`CellUnion` for ``F`` and a tuple of points for
    ``D``; ``union`` combines them.
    """

    kind: str
    pieces: List[object]

    @property
    def union(self):
        if self.kind == "D":
            return _dedup([p for pc in self.pieces for p in pc])
        return CellUnion([c for pc in self.pieces for c in pc.cells])

    def is_empty(self, i: Optional[int] = None) -> bool:
        parts = self.pieces if i is None else [self.pieces[i]]
        if self.kind == "D":
            return all(len(p) == 0 for p in parts)
        return all(p.empty for p in parts)


def hp_set(A: Boundary, report: SteinerReport, cls: PointClassification, kind: str = "D",
           cfg: Config = DEFAULT) -> HPSet:
    """``HP_d(F_i) = B_{d_i}(F_i) ∩ K_d`` or ``HP_d(D_i)``, per compact."""
    if kind not in ("F", "D"):
        raise ValueError("kind must be 'F' or 'D'")
    pieces: List[object] = []
    for i in range(A.n):
        if kind == "D":
            pieces.append(_dedup([p for info in cls.discrete(i) for p in info.contact_points]))
            continue
        cells = [c for info in cls.far(i) for c in info.pieces]
        for x in cls.far_samples[i] if cls.far_samples else []:
            cells.extend(classify_point(x, i, -1, report.d[i], report.K_d, cfg).pieces)
        pieces.append(CellUnion(cells))
    return HPSet(kind, pieces)


@dataclass
class TheoremCheck:
    holds: bool
    witnesses: List[Tuple[int, int, Point]]
    message: str


def check_far_point_theorem(A: Boundary, report: SteinerReport, cls: PointClassification,
                            cfg: Config = DEFAULT) -> TheoremCheck:
    """Finite boundary: some compact has a discrete point. Polygon boundary:
    some compact has a far point (vertices exactly, edges by sampling)."""
    if A.finite:
        wit = [(p.compact, p.index, p.point) for p in cls.all() if p.discrete]
        if wit:
            return TheoremCheck(True, wit, f"{len(wit)} discrete point(s)")
        return TheoremCheck(False, [], "no discrete point: d is not optimal, or the check is wrong")
    wit = [(p.compact, p.index, p.point) for p in cls.all() if p.far]
    wit += [(i, -1, x) for i, row in enumerate(cls.far_samples) for x in row]
    if wit:
        return TheoremCheck(True, wit, f"{len(wit)} far point(s)")
    return TheoremCheck(False, [], "no far point: d is not optimal, or the check is wrong")


@dataclass
class PHPVerdict:
    index: int
    holds: bool
    witness: Optional[Point]
    via: str  # "own-contact" | "sphere" | "none"


def check_pHP(A: Boundary, report: SteinerReport, cls: PointClassification,
              cfg: Config = DEFAULT) -> List[PHPVerdict]:
    """For each i: a point of ``HP_d(F)`` lies in ``HP_d(F_i)`` or on the sphere
    ``|p A_i| = d_i``. Polygon (or singleton) compacts only."""
    if A.finite and any(len(C) > 1 for C in A.compacts):
        raise ValueError("pHP applies to convex compacts")
    hp = hp_set(A, report, cls, "F", cfg)
    polys = [C if isinstance(C, ConvexPolygon) else ConvexPolygon(C.points) for C in A.compacts]
    out = []
    for i in range(A.n):
        own = hp.pieces[i]
        if not own.empty:
            out.append(PHPVerdict(i, True, own.cells[0].support((0.6, -0.8))[1], "own-contact"))
            continue
        found = None
        for k in range(A.n):
            for cell in hp.pieces[k].cells:
                v, x = sup_distance_to_polygon(cell, polys[i])
                if v >= report.d[i] - cfg.tol:
                    found = x
                    break
            if found:
                break
        out.append(PHPVerdict(i, found is not None, found, "sphere" if found else "none"))
    return out
