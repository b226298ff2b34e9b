"""Randomised property suites shared by the property tests and the acceptance run.

Every suite runs CASES cases and returns a :class:`SuiteResult`; a suite
passes with zero violations. Results are cached so the acceptance summary
reuses what the individual tests computed within one session.
"""

from __future__ import annotations

import functools
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np

from fshs import Boundary, Config, FinitePoints, convex_hull, convexify_boundary, solve
from fshs.classification import check_far_point_theorem, check_pHP, classify_points, hp_set
from fshs.regions import ball_neighborhood, contains, hausdorff_distance
from fshs.stability import build_K_d_conv, conv_preserves_distance, necessary_condition

CASES = 1000
EXACT_TOL = 1e-9
REGION_TOL = 1e-5
POOL_SEED = 20261014


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    violations: int = 0
    examples: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str) -> None:
        self.violations += 1
        if len(self.examples) < 5:
            self.examples.append(msg)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.cases >= CASES

    def line(self) -> str:
        return (f"{self.name}: {self.cases} cases, {self.violations} violations "
                f"({self.seconds:.1f} s)")


def random_boundary(rng, n_range=(2, 4), m_range=(1, 4), box=1.0):
    n = int(rng.integers(*n_range))
    return Boundary.of([[tuple(rng.uniform(-box, box, 2)) for _ in range(int(rng.integers(*m_range)))]
                        for _ in range(n)])


def random_set(rng, lo=1, hi=6, box=1.0) -> FinitePoints:
    return FinitePoints(tuple(tuple(rng.uniform(-box, box, 2)) for _ in range(int(rng.integers(lo, hi)))))


# --- independent numpy oracles --------------------------------------------------

def np_hausdorff(A, B) -> float:
    X, Y = np.asarray(A, float), np.asarray(B, float)
    D = np.linalg.norm(X[:, None, :] - Y[None, :, :], axis=2)
    return float(max(D.min(axis=1).max(), D.min(axis=0).max()))


def np_polygon_distance(p, V) -> float:
    """Distance from p to the convex hull with CCW vertices V, from edges."""
    p, V = np.asarray(p, float), np.asarray(V, float)
    if len(V) == 1:
        return float(np.linalg.norm(p - V[0]))
    W = np.roll(V, -1, axis=0)
    E = W - V
    t = np.clip(np.einsum("ij,ij->i", p - V, E) / np.einsum("ij,ij->i", E, E), 0, 1)
    edge = float(np.min(np.linalg.norm(V + t[:, None] * E - p, axis=1)))
    if len(V) >= 3:
        cr = E[:, 0] * (p[1] - V[:, 1]) - E[:, 1] * (p[0] - V[:, 0])
        if np.all(cr >= 0):
            return 0.0
    return edge


def np_hull_hausdorff(P, Q) -> float:
    # both sides convex: the supremum of a convex function is at a vertex
    V, W = P.vertices, Q.vertices
    return max(max(np_polygon_distance(v, W) for v in V), max(np_polygon_distance(w, V) for w in W))


def implicit_excess(A: Boundary, d, x) -> float:
    """max_i (|x A_i| - d_i): nonpositive exactly on K_d, zero on its boundary."""
    return max(min(math.dist(x, a) for a in A.points(i)) - d[i] for i in range(A.n))


# --- the solved pool -------------------------------------------------------------

@functools.lru_cache(maxsize=1)
def solved_pool():
    """CASES small random boundaries with their solves, convexified solves and
    classifications, built once per session."""
    rng = np.random.default_rng(POOL_SEED)
    cfg = Config(starts=0)
    pool = []
    for _ in range(CASES):
        A = random_boundary(rng)
        C = convexify_boundary(A)
        r, rc = solve(A, cfg), solve(C, cfg)
        pool.append((A, r, C, rc, classify_points(A, r), classify_points(C, rc)))
    return tuple(pool)


# --- suites ------------------------------------------------------------------------

def suite_metric() -> SuiteResult:
    res = SuiteResult("metric axioms of d_H")
    rng = np.random.default_rng(101)
    for _ in range(CASES):
        A, B, C = random_set(rng), random_set(rng), random_set(rng)
        if rng.random() < 0.1:
            B = FinitePoints(tuple(reversed(A.points)) + A.points[:1])  # same set, other listing
        ab, ba = hausdorff_distance(A, B)[0], hausdorff_distance(B, A)[0]
        ac, bc = hausdorff_distance(A, C)[0], hausdorff_distance(B, C)[0]
        res.cases += 1
        if hausdorff_distance(A, A)[0] != 0:
            res.fail(f"d(A,A) != 0 for {A.points}")
        if abs(ab - ba) > EXACT_TOL:
            res.fail(f"asymmetric: {ab} vs {ba}")
        if ac > ab + bc + EXACT_TOL:
            res.fail(f"triangle: {ac} > {ab} + {bc}")
        if abs(ab - np_hausdorff(A.points, B.points)) > EXACT_TOL:
            res.fail(f"oracle mismatch {ab}")
        if (ab <= EXACT_TOL) != (set(A.points) == set(B.points)):
            res.fail(f"identity of indiscernibles: d = {ab}")
    return res


def suite_lm2() -> SuiteResult:
    res = SuiteResult("ball membership is a nearest-point test")
    rng = np.random.default_rng(102)
    while res.cases < CASES:
        A = random_set(rng)
        r = float(rng.uniform(0, 1))
        p = tuple(rng.uniform(-2, 2, 2))
        near = min(math.dist(p, a) for a in A.points)
        if abs(near - r) <= EXACT_TOL:
            continue  # on the sphere both answers are right
        res.cases += 1
        if contains(ball_neighborhood(A, r), p) != (near <= r):
            res.fail(f"p={p}, r={r}, |pA|={near}")
    return res


def suite_sum_nesting() -> SuiteResult:
    res = SuiteResult("B_s(B_r(A)) = B_(r+s)(A)")
    rng = np.random.default_rng(103)
    while res.cases < CASES:
        A = random_set(rng)
        use_hull = rng.random() < 0.5
        base = convex_hull(A) if use_hull else A
        r, s = float(rng.uniform(0, 0.6)), float(rng.uniform(0, 0.6))
        nested = ball_neighborhood(ball_neighborhood(base, r), s)
        direct = ball_neighborhood(base, r + s)
        p = tuple(rng.uniform(-2, 2, 2))
        far = (min(math.dist(p, a) for a in A.points) if not use_hull
               else np_polygon_distance(p, base.vertices))
        tol = REGION_TOL if use_hull else EXACT_TOL
        if abs(far - r - s) <= tol:
            continue
        res.cases += 1
        got = (contains(nested, p), contains(direct, p), far <= r + s)
        if len(set(got)) != 1:
            res.fail(f"p={p}, r={r}, s={s}, hull={use_hull}: {got}")
    return res


def suite_lipschitz() -> SuiteResult:
    res = SuiteResult("Conv is 1-Lipschitz")
    rng = np.random.default_rng(104)
    for _ in range(CASES):
        A, B = random_set(rng), random_set(rng)
        base = np_hausdorff(A.points, B.points)
        hull = hausdorff_distance(convex_hull(A), convex_hull(B))[0]
        res.cases += 1
        if hull > base + EXACT_TOL:
            res.fail(f"{hull} > {base}")
        if abs(hull - np_hull_hausdorff(convex_hull(A), convex_hull(B))) > EXACT_TOL:
            res.fail(f"hull distance {hull} disagrees with the vertex oracle")
    return res


def _savedist_pair(rng):
    kind = rng.integers(3)
    if kind == 0:
        return random_set(rng, 1, 7), random_set(rng, 1, 7)
    # a shape plus points inside its hull, against the bare shape shifted a little
    V = [tuple(rng.uniform(-1, 1, 2)) for _ in range(int(rng.integers(3, 6)))]
    w = rng.dirichlet(np.ones(len(V)), size=int(rng.integers(1, 3)))
    inner = [tuple(x @ np.asarray(V)) for x in w]
    shift = rng.normal(0, 0.05, 2)
    moved = [tuple(np.asarray(v) + shift) for v in V]
    return (FinitePoints(tuple(V + inner)), FinitePoints(tuple(moved))) if kind == 1 else \
        (FinitePoints(tuple(moved)), FinitePoints(tuple(V + inner)))


def suite_savedist() -> SuiteResult:
    res = SuiteResult("distance-preservation criterion vs direct comparison")
    rng = np.random.default_rng(105)
    drops = 0
    for _ in range(CASES):
        A, B = _savedist_pair(rng)
        v = conv_preserves_distance(A, B)
        r = np_hausdorff(A.points, B.points)
        rc = np_hull_hausdorff(convex_hull(A), convex_hull(B))
        direct = abs(rc - r) <= EXACT_TOL * max(1.0, r)
        drops += not direct
        res.cases += 1
        if v.preserved != direct:
            res.fail(f"criterion {v.preserved}, direct r={r} r_conv={rc}")
    if drops < CASES // 10:
        res.fail(f"only {drops} pairs change distance; the suite is not discriminating")
    return res


def suite_bconv() -> SuiteResult:
    res = SuiteResult("B_r(Conv K) and Conv B_r(K) share support values")
    rng = np.random.default_rng(106)
    cfg = Config(eps=REGION_TOL)
    for _ in range(CASES):
        K = random_set(rng, 1, 7)
        r = float(rng.uniform(0.01, 1))
        R = ball_neighborhood(convex_hull(K), r, cfg)
        res.cases += 1
        for phi in rng.uniform(0, 2 * math.pi, 8):
            u = (math.cos(phi), math.sin(phi))
            # the union of disks has support max_a <a,u> + r, and so does its hull
            truth = max(a[0] * u[0] + a[1] * u[1] for a in K.points) + r
            lo, hi = R.inner.support(u), R.outer.support(u)
            if not (lo - EXACT_TOL <= truth <= hi + EXACT_TOL and hi - lo <= REGION_TOL):
                res.fail(f"u={u}: inner {lo}, true {truth}, outer {hi}")
                break
    return res


def suite_kdconv_dh() -> SuiteResult:
    res = SuiteResult("Conv K_d inside K_d^Conv, d_H(Conv A_i, K_d^Conv) <= d_i")
    cfg = Config(eps=REGION_TOL)
    dirs = [(math.cos(t), math.sin(t)) for t in np.linspace(0, 2 * math.pi, 24, endpoint=False)]
    for A, r, C, *_ in solved_pool():
        res.cases += 1
        d = r.d.d
        samples = [c.support(u)[1] for c in r.K_d.cells for u in dirs]
        hull = convex_hull(samples)
        polys = C.compacts
        R = build_K_d_conv(A, d, cfg)
        for v in hull.vertices:
            excess = max(np_polygon_distance(v, P.vertices) - di for P, di in zip(polys, d))
            if excess > EXACT_TOL or not R.contains(v, REGION_TOL):
                res.fail(f"hull vertex {v} outside K_d^Conv by {excess}")
                break
        for c in necessary_condition(A, r):
            if c.dH_conv > c.d + REGION_TOL:
                res.fail(f"compact {c.index}: {c.dH_conv} > {c.d}")
    return res


def suite_conv_gap() -> SuiteResult:
    res = SuiteResult("S_A >= S_(A^Conv) - certified error")
    for A, r, C, rc, *_ in solved_pool():
        res.cases += 1
        cert = r.certified_error + rc.certified_error + 2 * A.n * EXACT_TOL
        if r.S < rc.S - cert:
            res.fail(f"S_A={r.S} < S_conv={rc.S} (cert {cert})")
    return res


def suite_classification() -> SuiteResult:
    res = SuiteResult("contact sets on the boundary, far points off hull interiors, flags agree")
    rng = np.random.default_rng(107)
    for A, r, C, rc, cls, cls_c in solved_pool():
        res.cases += 1
        d = r.d.d
        for p in cls.all():
            if p.nondense != p.discrete:
                res.fail(f"nondense {p.nondense} vs discrete {p.discrete} at {p.point}")
            if p.far and not p.nondense:
                res.fail(f"far but dense at {p.point}")
            if (math.dist(p.point, r.K_d.project(p.point)) >= d[p.compact] - EXACT_TOL) != p.far:
                res.fail(f"far flag disagrees with the distance at {p.point}")
            if p.far and d[p.compact] > 0:
                for q in p.contact_points:
                    g = implicit_excess(A, d, q)
                    if abs(g) > REGION_TOL:
                        res.fail(f"contact point {q} is {g} off the boundary of K_d")
        hp = hp_set(A, r, cls, "F")
        for i in range(A.n):
            if hp.is_empty(i) != (not cls.far(i)):
                res.fail(f"compact {i}: HP_d(F_i) empty {hp.is_empty(i)}, F_i size {len(cls.far(i))}")
        # strictly interior points of a convex compact are never far
        for i, P in enumerate(C.compacts):
            if len(P.vertices) < 3 or rc.d[i] <= EXACT_TOL:
                continue  # segments have no interior; with d_i = 0 every point is far
            V = np.asarray(P.vertices)
            for w in rng.dirichlet(np.full(len(V), 4.0), size=3):
                x = tuple(w @ V)
                if rc.K_d.distance(x) >= rc.d[i] - EXACT_TOL:
                    res.fail(f"interior point {x} of Conv A_{i + 1} is far")
        for p in cls_c.all():
            if p.far and rc.d[p.compact] > 0 and p.point not in C.compacts[p.compact].vertices:
                res.fail(f"far point {p.point} is not a hull vertex")
    return res


def suite_ms2() -> SuiteResult:
    res = SuiteResult("a discrete point exists at every tight optimum")
    for A, r, _, _, cls, _ in solved_pool():
        res.cases += 1
        if not r.tight:
            res.fail(f"solver returned a non-tight vector {r.d.d}")
        elif not check_far_point_theorem(A, r, cls).holds:
            res.fail(f"no discrete point at d = {r.d.d}")
    return res


def suite_php() -> SuiteResult:
    res = SuiteResult("contact condition on solved convex boundaries")
    for _, _, C, rc, _, cls_c in solved_pool():
        res.cases += 1
        bad = [v.index for v in check_pHP(C, rc, cls_c) if not v.holds]
        if bad:
            res.fail(f"fails for compacts {bad} at d = {rc.d.d}")
    return res


SUITES: Dict[str, Callable[[], SuiteResult]] = {
    "metric": suite_metric,
    "lm2": suite_lm2,
    "sum": suite_sum_nesting,
    "lipschitz": suite_lipschitz,
    "savedist": suite_savedist,
    "bconv": suite_bconv,
    "kdconv_dh": suite_kdconv_dh,
    "conv_gap": suite_conv_gap,
    "classification": suite_classification,
    "ms2": suite_ms2,
    "php": suite_php,
}


@functools.lru_cache(maxsize=None)
def run(name: str) -> SuiteResult:
    t0 = time.perf_counter()
    res = SUITES[name]()
    res.seconds = time.perf_counter() - t0
    return res
