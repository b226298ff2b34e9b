"""Convexified boundaries and the stability of a finite boundary.

A finite boundary is stable when replacing every compact by its convex hull
leaves the optimal total deviation unchanged. Two routes decide instability:
comparing the two optima directly, and the contact-point criterion, which
needs only one solution class of the original boundary: if for some compact
``A_s`` every discrete contact point on a sphere ``∂B_{d_s}(a)`` lies
strictly inside all open neighbourhoods ``U_{d_i}(Conv A_i)``, the boundary
is unstable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .classification import classify_points, hp_set
from .config import DEFAULT, Config
from .geometry import ConvexPolygon, FinitePoints, Point, convex_hull, dist, polygon_distance
from .regions import ConvexCell, ConvexOffsetRegion, hausdorff_distance, sup_distance_to_polygon
from .steiner import Boundary, SteinerReport, solve

SPHERE_TOL_FACTOR = 10.0  # contact points are exact to ~1e-11; spheres are tested at 10*tol


class MarginIndeterminate(RuntimeError):
    """A contact point sits too close to a neighbourhood boundary to call."""

    def __init__(self, margin: float, point: Point, index: int):
        super().__init__(f"margin {margin:.3g} at {point} for compact {index} is inside [tol, 10*tol)")
        self.margin, self.point, self.index = margin, point, index


def convexify_boundary(A: Boundary) -> Boundary:
    """Per-compact convex hulls; idempotent."""
    hulls = []
    for C in A.compacts:
        pts = C.points if isinstance(C, FinitePoints) else C.vertices
        hulls.append(convex_hull(pts))
    return Boundary(tuple(hulls), A.names)


@dataclass(frozen=True)
class SaveDist:
    preserved: bool
    witness: Optional[Point]
    r: float
    r_conv: float

    @property
    def agrees(self) -> bool:
        return self.preserved == (abs(self.r_conv - self.r) <= 1e-9 * max(1.0, self.r))


def conv_preserves_distance(A: FinitePoints, B: FinitePoints, cfg: Config = DEFAULT) -> SaveDist:
    """Whether ``d_H(Conv A, Conv B) = d_H(A, B)``, decided by a distance witness.

    It holds iff some ``a ∈ A`` has ``|a Conv B| >= r`` or some ``b ∈ B`` has
    ``|b Conv A| >= r``: the hulls' distance is a max over original points.
    """
    r = hausdorff_distance(A, B, cfg)[0]
    PA, PB = convex_hull(A), convex_hull(B)
    thr = r - cfg.tol * max(1.0, r)
    witness = None
    for a in A.points:
        if polygon_distance(a, PB) >= thr:
            witness = a
            break
    if witness is None:
        for b in B.points:
            if polygon_distance(b, PA) >= thr:
                witness = b
                break
    r_conv = hausdorff_distance(PA, PB, cfg)[0]
    return SaveDist(witness is not None, witness, r, r_conv)


def build_K_d_conv(A: Boundary, d: Sequence[float], cfg: Config = DEFAULT) -> ConvexOffsetRegion:
    C = convexify_boundary(A)
    return ConvexOffsetRegion(list(zip(C.compacts, [float(x) for x in d])), cfg)


@dataclass
class UConvRegion:
    """``⋂ U_{d_i}(Conv A_i)``, tested by strict inequality with a margin."""

    polygons: Tuple[ConvexPolygon, ...]
    d: Tuple[float, ...]
    margin: float

    def slack(self, p: Point) -> float:
        return min(r - polygon_distance(p, P) for P, r in zip(self.polygons, self.d))

    def contains(self, p: Point) -> bool:
        return self.slack(p) >= self.margin

    def max_slack(self) -> Tuple[float, Optional[Point]]:
        return ConvexCell(list(zip(self.polygons, self.d))).max_slack()


@dataclass(frozen=True)
class NecessaryCheck:
    index: int
    d: float
    dH_conv: float
    equal: bool


def _dH_conv_compact(P: ConvexPolygon, cell: ConvexCell) -> float:
    # both sides are convex: vertex distances and an exact sup over the cell
    there = max(cell.distance(v) for v in P.vertices)
    back = sup_distance_to_polygon(cell, P)[0]
    return max(there, back)


def necessary_condition(A: Boundary, report: SteinerReport, cfg: Config = DEFAULT) -> List[NecessaryCheck]:
    """``d_H(Conv A_i, K_d^Conv) = d_i`` for every i; a strict drop rules out
    stability with this d."""
    C = convexify_boundary(A)
    d = report.d.d
    cell = ConvexCell(list(zip(C.compacts, d)), tol=cfg.tol)
    out = []
    for i, P in enumerate(C.compacts):
        v = _dH_conv_compact(P, cell)
        out.append(NecessaryCheck(i, d[i], v, abs(v - d[i]) <= cfg.open_margin * cfg.tol * max(1.0, d[i])))
    return out


@dataclass
class DStay:
    status: str  # "holds" | "fails" | "inapplicable"
    s: Optional[int] = None
    reason: str = ""
    hp_points: Tuple[Point, ...] = ()
    kept: Tuple[Point, ...] = ()
    margins: Tuple[float, ...] = ()
    vacuous: bool = False

    @property
    def holds(self) -> bool:
        return self.status == "holds"


def dstay_check(A: Boundary, report: SteinerReport, cfg: Config = DEFAULT) -> DStay:
    """Contact-point instability test for one solution class.

    Raises :class:`MarginIndeterminate` when no compact certifies the
    condition and some kept point is within ``[tol, 10*tol)`` of a
    neighbourhood boundary.
    """
    if not A.finite:
        return DStay("inapplicable", reason="needs a finite boundary")
    d = report.d.d
    if any(x <= cfg.tol for x in d):
        return DStay("inapplicable", reason="some d_i is zero")
    C = convexify_boundary(A)
    U = UConvRegion(C.compacts, d, cfg.open_margin * cfg.tol)
    slack, _ = U.max_slack()
    if slack <= cfg.tol:
        return DStay("inapplicable", reason=f"U_d^Conv is empty (max slack {slack:.3g})")
    cls = classify_points(A, report, cfg)
    hp = hp_set(A, report, cls, "D", cfg).union
    sphere_tol = SPHERE_TOL_FACTOR * cfg.tol
    pending: Optional[MarginIndeterminate] = None
    for s in range(A.n):
        kept = tuple(p for p in hp
                     if any(abs(dist(p, a) - d[s]) <= sphere_tol for a in A.points(s)))
        margins = tuple(U.slack(p) for p in kept)
        if all(m >= U.margin for m in margins):
            return DStay("holds", s, hp_points=hp, kept=kept, margins=margins, vacuous=not kept)
        for p, m in zip(kept, margins):
            if cfg.tol <= m < U.margin and pending is None:
                pending = MarginIndeterminate(m, p, s)
    if pending is not None:
        raise pending
    return DStay("fails", hp_points=hp, reason="every compact has a contact point outside U_d^Conv")


@dataclass
class StabilityReport:
    S_A: float
    S_A_conv: float
    gap: float
    certified_error: float
    dstay: DStay
    necessary: List[NecessaryCheck]
    verdict: str  # "stable" | "unstable" | "undecided"
    direct: str  # what the S comparison alone says
    steiner: SteinerReport = field(repr=False)
    steiner_conv: SteinerReport = field(repr=False)
    notes: List[str] = field(default_factory=list)

    @property
    def routes_agree(self) -> bool:
        return not (self.dstay.holds and self.direct == "equal")


def stability_verdict(A: Boundary, cfg: Config = DEFAULT) -> StabilityReport:
    """Three-valued stability verdict.

    ``unstable`` when the optimum drops by more than the certified error or
    the contact-point test holds for some solution class; ``stable`` when the
    optima agree within the certified error and the necessary condition
    holds; ``undecided`` otherwise.
    """
    rep = solve(A, cfg)
    C = convexify_boundary(A)
    rep_c = solve(C, cfg)
    gap = rep.S - rep_c.S
    # error of each S as the objective of a concrete compact, plus the
    # feasibility tolerance both solves accept
    cert = rep.certified_error + rep_c.certified_error + 2 * A.n * cfg.tol
    notes = []
    dstay = DStay("fails", reason="no class checked")
    indeterminate = None
    for cls_rep in rep.classes or [rep]:
        try:
            dstay = dstay_check(A, cls_rep, cfg)
        except MarginIndeterminate as exc:
            indeterminate = exc
            continue
        if dstay.holds:
            break
    if not dstay.holds and indeterminate is not None:
        notes.append(str(indeterminate))
        dstay = DStay("fails", reason=f"indeterminate margin {indeterminate.margin:.3g}")
    necessary = necessary_condition(A, rep, cfg)
    if gap > cert:
        direct = "drop"
    elif abs(gap) <= cert:
        direct = "equal"
    else:
        direct = "rise"
        notes.append(f"S_A below S_A^Conv by {-gap:.3g}: a solve missed its optimum")
    if direct == "drop" or dstay.holds:
        verdict = "unstable"
    elif direct == "equal" and all(c.equal for c in necessary) and indeterminate is None:
        verdict = "stable"
    else:
        verdict = "undecided"
    return StabilityReport(rep.S, rep_c.S, gap, cert, dstay, necessary, verdict, direct,
                           rep, rep_c, notes)
