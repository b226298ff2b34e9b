"""Maximal Steiner compacts K_d and the search for optimal solution vectors.

For a boundary ``A = (A_1..A_n)`` and radii ``d`` the set
``K_d = ⋂ B_{d_i}(A_i)`` is the largest compact whose Hausdorff distance to
each ``A_i`` is at most ``d_i``, and it attains them exactly when
``A_i ⊂ B_{d_i}(K_d)`` for all ``i``. The optimum ``S_A`` is therefore

    min  Σ d_i   over d with K_d ≠ ∅ and A_i ⊂ B_{d_i}(K_d) for every i.

The search runs derivative-free descent on the exact penalty
``f(d) = Σ max(d_i, max_{a∈A_i} |a K_d|)`` from several feasible starts and
then polishes each local result with a convex program: once every boundary
point has a chosen witness cell, feasibility is a set of second-order cone
constraints in ``(d, x)`` and the restricted problem is solved to
near machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize

from .config import DEFAULT, Config
from .geometry import ConvexPolygon, FinitePoints, Point, as_point, dist, polygon_distance
from .regions import (
    CellUnion,
    ConvexCell,
    DiskIntersectionCell,
    NonConvergence,
    hausdorff_distance,
    sup_distance_to_points,
    sup_distance_to_polygon,
)

Compact = Union[FinitePoints, ConvexPolygon]

_PENALTY = 1e6
CLASS_SEP = 1e-6  # coordinates closer than this belong to one solution class
STRICT_TOL = 1e-11
POLISH_SLACK = 1e-9  # per compact: how much f may rise when the polish lands on an exact tangency


class NoConvergence(NonConvergence):
    """No feasible solution vector was found."""


def _compact_points(C: Compact) -> Tuple[Point, ...]:
    return C.points if isinstance(C, FinitePoints) else C.vertices


@dataclass(frozen=True)
class Boundary:
    """An ordered family of nonempty compacts, all finite or all convex polygons."""

    compacts: Tuple[Compact, ...]
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        comps = tuple(self.compacts)
        if not comps:
            raise ValueError("a boundary needs at least one compact")
        for C in comps:
            if not isinstance(C, (FinitePoints, ConvexPolygon)):
                raise TypeError(f"unsupported compact {type(C).__name__}")
        kinds = {type(C) for C in comps}
        if len(kinds) > 1:
            raise ValueError("mixing finite and polygon compacts is not supported")
        names = tuple(self.names) or tuple(f"A{i + 1}" for i in range(len(comps)))
        if len(names) != len(comps):
            raise ValueError("one name per compact")
        object.__setattr__(self, "compacts", comps)
        object.__setattr__(self, "names", names)

    @classmethod
    def of(cls, point_lists: Sequence[Sequence], names: Sequence[str] = ()) -> "Boundary":
        return cls(tuple(FinitePoints(tuple(as_point(p) for p in pts)) for pts in point_lists),
                   tuple(names))

    @property
    def n(self) -> int:
        return len(self.compacts)

    @property
    def finite(self) -> bool:
        return isinstance(self.compacts[0], FinitePoints)

    def points(self, i: int) -> Tuple[Point, ...]:
        """The finite set whose farthest point realises ``sup_{a∈A_i} |a K|``
        for convex ``K``: the points themselves, or the polygon vertices."""
        return _compact_points(self.compacts[i])

    def permuted(self, order: Sequence[int]) -> "Boundary":
        return Boundary(tuple(self.compacts[k] for k in order), tuple(self.names[k] for k in order))

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.compacts)


@dataclass(frozen=True)
class SolutionVector:
    d: Tuple[float, ...]

    def __post_init__(self):
        d = tuple(float(x) for x in self.d)
        if any(not math.isfinite(x) or x < 0 for x in d):
            raise ValueError(f"solution vector entries must be finite and >= 0: {d}")
        object.__setattr__(self, "d", d)

    def __len__(self):
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, k):
        return self.d[k]


def _as_vector(d) -> SolutionVector:
    return d if isinstance(d, SolutionVector) else SolutionVector(tuple(d))


@dataclass
class OracleCheck:
    S_upper: float
    d: Tuple[float, ...]
    h: float
    lower_bound: float  # S_upper - n*h, a certified lower bound on S_A
    agrees: bool


@dataclass
class SteinerReport:
    """Result of checking (or optimising) a solution vector.

    ``residuals[i] = max_{a∈A_i} |a K_d| - d_i``; ``hausdorff[i]`` is
    ``d_H(A_i, K_d)``. ``tight`` means ``d_i = d_H(A_i, K_d)`` for every ``i``
    within tolerance, i.e. ``d`` is the distance vector of ``K_d``.
    """

    d: SolutionVector
    S: float
    K_d: CellUnion
    feasible: bool
    residuals: Tuple[float, ...]
    hausdorff: Tuple[float, ...]
    tight: bool
    certified_error: float
    classes: List["SteinerReport"] = field(default_factory=list)
    oracle: Optional[OracleCheck] = None
    evaluations: int = 0

    @property
    def non_tight(self) -> Tuple[int, ...]:
        return tuple(i for i, (h, x) in enumerate(zip(self.hausdorff, self.d))
                     if not abs(h - x) <= _tight_tol(x))


def _tight_tol(x: float) -> float:
    return 1e-7 * max(1.0, x)


# --- K_d ---------------------------------------------------------------------

def build_K_d(A: Boundary, d, cfg: Config = DEFAULT) -> CellUnion:
    """``⋂_i B_{d_i}(A_i)`` as a union of nonempty convex cells, one per
    compatible index tuple."""
    d = tuple(_as_vector(d))
    if len(d) != A.n:
        raise ValueError(f"expected {A.n} radii, got {len(d)}")
    if not A.finite:
        return CellUnion([ConvexCell([(C, d[i]) for i, C in enumerate(A.compacts)],
                                     [(i, 0) for i in range(A.n)], cfg.tol)])
    tol = cfg.tol
    pts = [C.points for C in A.compacts]
    cells = []

    def extend(prefix, k):
        if k == len(pts):
            cells.append(DiskIntersectionCell([(pts[i][j], d[i]) for i, j in prefix], prefix, tol))
            return
        r = d[k]
        for j, c in enumerate(pts[k]):
            # pairwise disjoint disks cannot share a cell
            if any(dist(c, pts[i][jj]) > r + d[i] + tol for i, jj in prefix):
                continue
            extend(prefix + [(k, j)], k + 1)

    extend([], 0)
    return CellUnion(cells)


def _directed_K_to(K: CellUnion, C: Compact, cfg: Config) -> Tuple[float, float]:
    """sup_{x∈K} |x C| with its error."""
    if K.empty:
        return 0.0, 0.0
    if isinstance(C, FinitePoints):
        return max(sup_distance_to_points(c, C.points)[0] for c in K.cells), 0.0
    return max(sup_distance_to_polygon(c, C)[0] for c in K.cells), 0.0


def total_deviation(A: Boundary, K, cfg: Config = DEFAULT) -> Tuple[float, float]:
    """``S(A, K) = Σ d_H(A_i, K)`` and the accumulated certified error."""
    if getattr(K, "empty", False):
        raise ValueError("K must be nonempty")
    tot = err = 0.0
    for C in A.compacts:
        v, e = hausdorff_distance(C, K, cfg)
        tot += v
        err += e
    return tot, err


def _residuals(A: Boundary, K: CellUnion, d) -> Tuple[float, ...]:
    if K.empty:
        return tuple(math.inf for _ in d)
    return tuple(max(K.distance(v) for v in A.points(i)) - d[i] for i in range(A.n))


def check_solution_vector(A: Boundary, d, cfg: Config = DEFAULT) -> SteinerReport:
    """Feasibility, residuals and Hausdorff distances of ``K_d``."""
    d = _as_vector(d)
    K = build_K_d(A, d, cfg)
    res = _residuals(A, K, d)
    feasible = not K.empty and all(r <= cfg.tol for r in res)
    if K.empty:
        return SteinerReport(d, sum(d), K, False, res, tuple(math.inf for _ in d), False, math.inf)
    haus, errs = [], []
    for i in range(A.n):
        toward, e = _directed_K_to(K, A.compacts[i], cfg)
        haus.append(max(res[i] + d[i], toward))
        errs.append(e)
    tight = feasible and all(abs(h - x) <= _tight_tol(x) + e for h, x, e in zip(haus, d, errs))
    S = math.fsum(d)
    cert = abs(S - math.fsum(haus)) + math.fsum(errs) if feasible else math.inf
    return SteinerReport(d, S, K, feasible, res, tuple(haus), tight, cert)


# --- objective and polish -------------------------------------------------------

class _Objective:
    def __init__(self, A: Boundary, cfg: Config):
        self.A, self.cfg, self.calls = A, cfg, 0

    def __call__(self, x) -> float:
        self.calls += 1
        d = [float(v) for v in x]
        if min(d) < 0:
            return _PENALTY * (1.0 + sum(abs(v) for v in d))
        K = build_K_d(self.A, d, self.cfg)
        if K.empty:
            return _PENALTY * (1.0 + sum(d))
        return sum(max(d[i], max(K.distance(v) for v in self.A.points(i))) for i in range(self.A.n))

    def feasible(self, d) -> bool:
        K = build_K_d(self.A, d, self.cfg)
        return not K.empty and all(r <= self.cfg.tol for r in _residuals(self.A, K, d))


def _witness_program(A: Boundary, d: Sequence[float], cfg: Config) -> Optional[np.ndarray]:
    """Minimise Σd with every boundary point tied to its current nearest cell.

    Variables are ``d`` and one point ``x_v`` per boundary point ``v``; the
    constraints ``|x_v - v| <= d_i`` and ``|x_v P_l| <= d_l`` for every atom
    of the witness cell are convex, so the local solve is global for the
    restricted problem, whose feasible set lies inside the true one.
    """
    K = build_K_d(A, d, cfg)
    if K.empty:
        return None
    n = A.n
    rows = []  # (owner compact, point, [(atom polygon, atom compact)])
    x0 = list(d)
    for i in range(n):
        for v in A.points(i):
            cell = min(K.cells, key=lambda c: c.distance(v))
            q = cell.project(v)
            rows.append((i, v, [(P, prov[0]) for (P, _), prov in zip(cell.atoms, cell.provenance)]))
            x0.extend(q)
    x0 = np.asarray(x0, dtype=float)

    cons = []
    for k, (i, v, atoms) in enumerate(rows):
        s = n + 2 * k
        cons.append((i, v, s, None))
        for P, l in atoms:
            cons.append((l, P.vertices[0] if len(P.vertices) == 1 else P, s, True))

    def g(z):
        out = np.empty(len(cons))
        for m, (l, target, s, is_atom) in enumerate(cons):
            p = (z[s], z[s + 1])
            if isinstance(target, ConvexPolygon):
                out[m] = z[l] - polygon_distance(p, target)
            else:
                out[m] = z[l] - math.hypot(p[0] - target[0], p[1] - target[1])
        return out

    def jac(z):
        J = np.zeros((len(cons), len(z)))
        for m, (l, target, s, is_atom) in enumerate(cons):
            p = (z[s], z[s + 1])
            J[m, l] = 1.0
            if isinstance(target, ConvexPolygon):
                from .geometry import project_onto_polygon
                q = project_onto_polygon(p, target)
            else:
                q = target
            dx, dy = p[0] - q[0], p[1] - q[1]
            L = math.hypot(dx, dy)
            if L > 1e-300:
                J[m, s], J[m, s + 1] = -dx / L, -dy / L
        return J

    c = np.zeros(len(x0))
    c[:n] = 1.0
    bounds = [(0.0, None)] * n + [(None, None)] * (len(x0) - n)
    res = minimize(lambda z: float(c @ z), x0, jac=lambda z: c, method="SLSQP",
                   constraints=[{"type": "ineq", "fun": g, "jac": jac}],
                   bounds=bounds, options={"ftol": 1e-16, "maxiter": 500})
    z = res.x
    if not np.all(np.isfinite(z)):
        return None
    return np.maximum(z[:n], 0.0)


def _polish(A: Boundary, d: np.ndarray, obj: _Objective, rounds: int = 6) -> np.ndarray:
    cur, fcur = d, obj(d)
    slack = 10 * A.n * POLISH_SLACK
    for _ in range(rounds):
        nxt = _witness_program(A, cur, obj.cfg)
        if nxt is None:
            break
        # the program's constraints hold to ~1e-12; nudge into strict feasibility
        for bump in (0.0, 1e-12, 1e-11, 1e-10):
            trial = nxt * (1.0 + bump) + bump
            if obj.feasible(trial):
                break
        else:
            break
        fn = obj(trial)
        if fn > fcur + slack or np.max(np.abs(trial - cur)) <= 1e-14:
            break
        cur, fcur = trial, fn
    return cur


def _balance(A: Boundary, d: np.ndarray, obj: _Objective, iters: int = 30) -> np.ndarray:
    """Move radius from larger to smaller coordinates while staying feasible.

    Optimal sets can contain whole faces (two singletons: any split of the
    distance); this picks a deterministic, balanced representative. Σd is
    unchanged by every accepted move.
    """
    d = np.array(d, dtype=float)
    for _ in range(2):
        for i in range(A.n):
            for j in range(A.n):
                gap = d[j] - d[i]
                if gap <= CLASS_SEP:
                    continue
                step = np.zeros(A.n)
                step[i], step[j] = 1.0, -1.0
                if obj.feasible(d + 0.5 * gap * step):
                    d = d + 0.5 * gap * step
                    continue
                lo, hi = 0.0, 0.5 * gap
                if not obj.feasible(d + 1e-3 * hi * step):
                    continue
                for _ in range(iters):
                    mid = 0.5 * (lo + hi)
                    if obj.feasible(d + mid * step):
                        lo = mid
                    else:
                        hi = mid
                d = d + lo * step
    return d


def _tighten(A: Boundary, d: np.ndarray, obj: _Objective) -> np.ndarray:
    """Lower each coordinate to the feasibility threshold (to ~1e-13 relative).

    The descent usually ends close to the threshold, so the bracket is found
    by growing steps down from the current value before bisecting.
    """
    d = np.array(d, dtype=float)
    for i in range(A.n):
        trial = d.copy()
        trial[i] = 0.0
        if obj.feasible(trial):
            d[i] = 0.0
            continue
        hi = d[i]
        step = 1e-9 * max(1.0, hi)
        lo = max(0.0, hi - step)
        while True:
            trial[i] = lo
            if not obj.feasible(trial):
                break
            hi, step = lo, step * 8
            lo = max(0.0, hi - step)
        resolution = 1e-13 * max(1.0, hi)
        while hi - lo > resolution:
            mid = 0.5 * (lo + hi)
            if not (lo < mid < hi):
                break
            trial[i] = mid
            if obj.feasible(trial):
                hi = mid
            else:
                lo = mid
        d[i] = hi
    return d


def _to_hausdorff(A: Boundary, d: np.ndarray, cfg: Config) -> np.ndarray:
    """Replace d by the distance vector of K_d; K_d itself does not change."""
    rep = check_solution_vector(A, d, cfg)
    if not rep.feasible:
        return d
    h = np.minimum(np.asarray(rep.hausdorff), d)
    return h if check_solution_vector(A, h, cfg).feasible else d


def _starts(A: Boundary, cfg: Config, obj: _Objective) -> List[np.ndarray]:
    n = A.n
    anchors = []
    for k in range(n):
        anchors.append(np.array([hausdorff_distance(A.compacts[i], A.compacts[k], cfg)[0]
                                 for i in range(n)]))
    rng = np.random.default_rng(cfg.seed)
    out = list(anchors)
    scale = max(float(np.max(a)) for a in anchors) or 1.0
    for _ in range(cfg.starts):
        w = rng.dirichlet(np.ones(n))
        x = sum(wk * a for wk, a in zip(w, anchors)) * rng.uniform(1.0, 1.5, n)
        x = np.maximum(x, 0.05 * scale * rng.uniform(0.5, 1.0, n))
        for _ in range(60):
            if obj.feasible(x):
                break
            x = x * 1.25 + 0.01 * scale
        out.append(x)
    return out


def _descend(x0: np.ndarray, obj: _Objective) -> np.ndarray:
    scale = max(float(np.max(x0)), 1e-3)
    simplex = [x0] + [x0 + 0.15 * scale * np.eye(len(x0))[k] for k in range(len(x0))]
    r = minimize(obj, x0, method="Nelder-Mead",
                 options={"initial_simplex": np.array(simplex), "xatol": 1e-6 * scale,
                          "fatol": 1e-9, "maxfev": 120 * len(x0)})
    return np.maximum(r.x, 0.0)


def _canonical_order(A: Boundary) -> List[int]:
    return sorted(range(A.n), key=lambda k: _compact_points(A.compacts[k]))


def solve(A: Boundary, cfg: Config = DEFAULT) -> SteinerReport:
    """Best solution vector found, with all distinct optimal classes in ``classes``.

    The computation runs on a canonical ordering of the compacts, so
    permuting the input permutes ``d`` and nothing else.
    """
    order = _canonical_order(A)
    inv = [0] * A.n
    for pos, k in enumerate(order):
        inv[k] = pos
    B = A.permuted(order)
    reports, evals = _solve_canonical(B, cfg)

    def back(rep: SteinerReport) -> SteinerReport:
        # re-evaluate in the caller's order so cells and provenance match A
        return check_solution_vector(A, [rep.d[inv[k]] for k in range(A.n)], cfg)

    classes = [back(r) for r in reports]
    best = classes[0]
    best.classes = classes
    best.evaluations = evals
    if cfg.oracle and A.finite:
        S_up, d_up = grid_oracle(A, None, cfg.grid_h)
        best.oracle = OracleCheck(S_up, tuple(d_up), cfg.grid_h, S_up - A.n * cfg.grid_h,
                                  best.S <= S_up + cfg.tol)
    return best


def _solve_canonical(A: Boundary, cfg: Config):
    if A.n == 1:
        return [check_solution_vector(A, [0.0], cfg)], 0
    # a strict tolerance keeps the search from trading tangency slack for objective
    obj = _Objective(A, cfg.with_overrides(tol=min(cfg.tol, STRICT_TOL)))
    finals = []
    # with polygon compacts K_d is one convex cell and the witness program is
    # the whole problem, so descent adds nothing and the anchors suffice
    starts = _starts(A, cfg, obj) if A.finite else _starts(A, cfg.with_overrides(starts=0), obj)
    for x0 in starts:
        if not obj.feasible(x0):
            continue
        x = _descend(x0, obj) if A.finite else x0
        if obj(x) >= _PENALTY:
            x = x0
        x = _polish(A, x, obj, rounds=6 if A.finite else 3)
        x = _balance(A, x, obj)
        x = _tighten(A, x, obj)
        x = _to_hausdorff(A, x, obj.cfg)
        rep = check_solution_vector(A, x, cfg)
        if rep.feasible:
            finals.append(rep)
    if not finals:
        raise NoConvergence(f"no feasible solution vector after {cfg.starts + A.n} starts")
    finals.sort(key=lambda r: (r.S, r.d.d))
    best_S = finals[0].S
    classes: List[SteinerReport] = []
    for r in finals:
        if r.S > best_S + 1e-7 * max(1.0, best_S):
            break
        if all(max(abs(a - b) for a, b in zip(r.d, c.d)) > CLASS_SEP for c in classes):
            classes.append(r)
    return classes, obj.calls


# --- brute-force oracle ------------------------------------------------------------

def _np_dist_to_disk_meet(p: np.ndarray, centers: List[np.ndarray], radii: List[np.ndarray]) -> np.ndarray:
    """Vectorised ``|p ⋂_k B_{r_k}(c_k)|`` over a batch of radius vectors.

    ``p`` and the centres are fixed points; ``radii[k]`` is an array over the
    batch. Returns +inf where the intersection is empty. Candidates are ``p``
    itself, its projection onto each disk, and pairwise circle crossings:
    in the plane the nearest point has at most two active constraints.
    """
    m = len(radii[0])
    best = np.full(m, np.inf)

    def inside(X, Y):
        ok = np.ones(m, dtype=bool)
        for c, r in zip(centers, radii):
            ok &= np.hypot(X - c[0], Y - c[1]) <= r + 1e-12
        return ok

    def offer(X, Y, valid=None):
        nonlocal best
        ok = inside(X, Y)
        if valid is not None:
            ok &= valid
        dd = np.hypot(X - p[0], Y - p[1])
        best = np.where(ok & (dd < best), dd, best)

    offer(np.full(m, p[0]), np.full(m, p[1]))
    for c, r in zip(centers, radii):
        v = p - c
        L = math.hypot(v[0], v[1])
        if L == 0.0:
            # p at the centre: any boundary point is equally far; inside() handles p
            continue
        offer(c[0] + v[0] / L * r, c[1] + v[1] / L * r)
    K = len(centers)
    for a in range(K):
        for b in range(a + 1, K):
            c1, c2 = centers[a], centers[b]
            D = math.hypot(*(c2 - c1))
            r1, r2 = radii[a], radii[b]
            if D == 0.0:
                continue
            aa = (D * D + r1 * r1 - r2 * r2) / (2 * D)
            h2 = r1 * r1 - aa * aa
            valid = h2 >= -1e-12
            h = np.sqrt(np.maximum(h2, 0.0))
            ex, ey = (c2 - c1) / D
            mx, my = c1[0] + aa * ex, c1[1] + aa * ey
            offer(mx - h * ey, my + h * ex, valid)
            offer(mx + h * ey, my - h * ex, valid)
    return best


def grid_oracle(A: Boundary, box: Optional[float], h: float) -> Tuple[float, Tuple[float, ...]]:
    """Minimum of Σd over feasible points of the grid ``(hZ)^n ∩ [0, box]^n``.

    Feasibility is monotone in ``d``, so for every grid setting of
    ``d_1..d_{n-1}`` the feasible values of ``d_n`` form a ray starting at an
    exactly computable threshold: for each boundary point, the distance from
    the relevant point to a disk intersection, minimised over index tuples
    and maximised over boundary points. Rounding that threshold up to the
    grid gives exactly what an exhaustive scan of ``d_n`` would find. The
    result satisfies ``S_A <= S_upper <= S_A + n*h``.

    Implemented with vectorised numpy, independently of the cell machinery.
    ``box=None`` uses the best anchor sum, which bounds every useful ``d_i``.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    if not A.finite:
        raise ValueError("grid oracle needs a finite boundary")
    n = A.n
    P = [np.asarray(C.points, dtype=float) for C in A.compacts]
    if n == 1:
        return 0.0, (0.0,)
    if box is None:
        box = min(sum(_np_hausdorff(P[i], P[k]) for i in range(n)) for k in range(n))
    steps = int(math.floor(box / h + 1e-9))
    axis = np.arange(steps + 1) * h
    grids = np.meshgrid(*([axis] * (n - 1)), indexing="ij")
    D = [g.ravel() for g in grids]
    keep = sum(D) <= box + 1e-12
    D = [x[keep] for x in D]
    m = len(D[0])
    need = np.zeros(m)  # smallest feasible d_n for each grid point
    for i in range(n):
        for a in P[i]:
            # constraint for a ∈ A_i: some tuple j with B_{d_i}(a) ∩ ⋂_l B_{d_l}(a^l_j) ≠ ∅
            others = [l for l in range(n) if l != i]
            best = np.full(m, np.inf)
            for js in product(*[range(len(P[l])) for l in others]):
                fixed_c, fixed_r, target = [], [], None
                if i != n - 1:
                    fixed_c.append(a)
                    fixed_r.append(D[i])
                for l, j in zip(others, js):
                    if l == n - 1:
                        target = P[l][j]
                    else:
                        fixed_c.append(P[l][j])
                        fixed_r.append(D[l])
                if i == n - 1:
                    target = a
                best = np.minimum(best, _np_dist_to_disk_meet(target, fixed_c, fixed_r))
            need = np.maximum(need, best)
    with np.errstate(invalid="ignore"):
        k = np.ceil(need / h - 1e-9)
    k = np.where(np.isfinite(k), np.maximum(k, 0.0), np.inf)
    dn = k * h
    total = sum(D) + dn
    total = np.where(dn <= box + 1e-12, total, np.inf)
    idx = int(np.argmin(total))
    if not np.isfinite(total[idx]):
        raise NoConvergence("no feasible grid point; enlarge the box")
    d = tuple(float(x[idx]) for x in D) + (float(dn[idx]),)
    return float(total[idx]), d


def _np_hausdorff(X: np.ndarray, Y: np.ndarray) -> float:
    M = np.hypot(X[:, None, 0] - Y[None, :, 0], X[:, None, 1] - Y[None, :, 1])
    return float(max(M.min(axis=1).max(), M.min(axis=0).max()))
