import math

import numpy as np
import pytest

from fshs import Boundary, Config, build_K_d, check_solution_vector, grid_oracle, solve, total_deviation
from fshs.geometry import FinitePoints
from fshs.regions import hausdorff_distance
from fshs.steiner import NoConvergence, SolutionVector

from conftest import grid_points, implicit_K_d, random_boundary

TWO = Boundary.of([[(0, 0)], [(2, 0)]])


def test_types_validate():
    with pytest.raises(ValueError):
        SolutionVector((1.0, -0.1))
    with pytest.raises(ValueError):
        Boundary(())
    assert Boundary.of([[(0, 0)], [(1, 1)]]).names == ("A1", "A2")


def test_total_deviation_examples():
    A1 = Boundary.of([[(0, 0), (1, 0)]])
    assert total_deviation(A1, FinitePoints(((0, 0), (1, 0))))[0] == 0
    assert total_deviation(TWO, FinitePoints(((1, 0),)))[0] == 2


def test_build_K_d_examples():
    K = build_K_d(TWO, (1, 1))
    assert len(K.cells) == 1
    cell = K.cells[0]
    assert cell.support((1, 0))[0] == pytest.approx(1, abs=1e-9)
    assert cell.support((-1, 0))[0] == pytest.approx(-1, abs=1e-9)
    assert build_K_d(TWO, (0.4, 0.4)).empty
    A1 = Boundary.of([[(0, 0), (1, 0)]])
    K1 = build_K_d(A1, (0,))
    assert sorted(c.support((1, 0))[1] for c in K1.cells) == [(0.0, 0.0), (1.0, 0.0)]


def test_check_solution_vector_examples():
    r = check_solution_vector(TWO, (1, 1))
    assert r.feasible and r.residuals == pytest.approx((0, 0), abs=1e-9)
    assert not check_solution_vector(TWO, (1, 0.5)).feasible
    r = check_solution_vector(TWO, (1.5, 1.5))
    assert r.feasible
    # the nearest point of the lens to either singleton is at distance 0.5
    assert r.residuals == pytest.approx((-1.0, -1.0), abs=1e-9)
    assert r.non_tight == ()  # d equals d_H(A_i, K_d) = 1.5 on both sides
    r = check_solution_vector(Boundary.of([[(0, 0)], [(2, 0)], [(1, 5)]]), (3, 3, 5))
    assert r.feasible


def test_non_tight_is_flagged():
    # K_d = B_0.5((2, 0)), whose farthest point from the origin is at 2.5 < 3
    r = check_solution_vector(TWO, (3, 0.5))
    assert r.feasible and not r.tight
    assert r.non_tight == (0,)
    assert r.hausdorff == pytest.approx((2.5, 0.5), abs=1e-12)


def test_feasible_reports_cover_both_ways():
    rng = np.random.default_rng(4)
    for _ in range(30):
        A = random_boundary(rng)
        rep = solve(A, Config(starts=1))
        assert rep.feasible
        # A_i inside B_{d_i}(K_d) exactly on the finite points
        for i in range(A.n):
            for a in A.points(i):
                assert rep.K_d.distance(a) <= rep.d[i] + 1e-9
        # K_d inside B_{d_i}(A_i) on samples of its cells
        for c in rep.K_d.cells:
            for u in ((1, 0), (0, 1), (-1, 0), (0, -1), (0.6, 0.8)):
                x = c.support(u)[1]
                for i in range(A.n):
                    assert min(math.dist(x, a) for a in A.points(i)) <= rep.d[i] + 1e-9


def test_cell_union_equals_implicit_definition():
    rng = np.random.default_rng(6)
    for _ in range(20):
        A = random_boundary(rng)
        rep = solve(A, Config(starts=0))
        d = np.asarray(rep.d.d) + 0.05  # fatten so the grid sees interiors
        K = build_K_d(A, d)
        P = grid_points((-2, -2, 2, 2), 0.05)
        mask = implicit_K_d(A, d, P)
        got = np.array([K.contains(tuple(p), 1e-12) for p in P])
        assert np.array_equal(got, mask)


def test_solve_examples(hexagon_report):
    r = solve(Boundary.of([[(0, 0), (1, 1)]]))
    assert r.d.d == (0.0,) and r.S == 0
    r = solve(TWO)
    assert r.S == pytest.approx(2, abs=1e-9)
    assert r.d.d == pytest.approx((1, 1), abs=1e-9)
    assert len(hexagon_report.classes) == 3


def test_solve_is_deterministic(hexagon):
    a = solve(hexagon, Config(starts=3, seed=7))
    b = solve(hexagon, Config(starts=3, seed=7))
    assert a.d.d == b.d.d


def test_permutation_equivariance():
    rng = np.random.default_rng(8)
    for _ in range(8):
        A = random_boundary(rng, n_range=(3, 4))
        perm = list(rng.permutation(A.n))
        r = solve(A, Config(starts=2))
        rp = solve(A.permuted(perm), Config(starts=2))
        assert rp.S == pytest.approx(r.S, abs=1e-12)
        assert rp.d.d == pytest.approx(tuple(r.d[k] for k in perm), abs=1e-12)


def test_duplicated_compact_adds_its_own_tight_value():
    # a duplicate never lowers S and costs at most the duplicate's radius
    rng = np.random.default_rng(9)
    for _ in range(8):
        A = random_boundary(rng, n_range=(2, 3))
        r = solve(A, Config(starts=2))
        B = Boundary(A.compacts + (A.compacts[0],))
        rb = solve(B, Config(starts=2))
        assert rb.S >= r.S - 1e-9
        assert rb.S <= r.S + r.d[0] + 1e-9


def test_solve_is_tight(hexagon_report):
    for rep in hexagon_report.classes:
        assert rep.tight
        assert sum(rep.d) == pytest.approx(rep.S, abs=1e-12)


def test_tightness_means_hausdorff_distance(hexagon, hexagon_report):
    # d_i = d_H(A_i, K_d), with the K side computed by an independent route
    for i in range(3):
        v, err = hausdorff_distance(hexagon.compacts[i], hexagon_report.K_d)
        assert v == pytest.approx(hexagon_report.d[i], abs=1e-7 + err)


def test_grid_oracle_examples():
    S, d = grid_oracle(TWO, 3, 0.01)
    assert 2 <= S <= 2.06
    assert grid_oracle(Boundary.of([[(0, 0), (1, 0)]]), 1, 0.01) == (0.0, (0.0,))


def test_hexagon_grid_oracle(hexagon, hexagon_report):
    S_up, d = grid_oracle(hexagon, None, 0.005)
    assert hexagon_report.S <= S_up + 1e-9
    assert S_up - hexagon_report.S <= 3 * 0.005 * 2
    assert check_solution_vector(hexagon, d).feasible


def test_grid_oracle_matches_exhaustive_scan():
    # the oracle rounds the exact last-coordinate threshold up to the grid;
    # compare with scanning all grid vectors and testing feasibility exactly
    rng = np.random.default_rng(10)
    h = 0.05
    for _ in range(5):
        A = random_boundary(rng, n_range=(2, 3), m_range=(1, 3))
        box = 2.0
        S_up, _ = grid_oracle(A, box, h)
        best = math.inf
        ticks = np.arange(0, box + h / 2, h)
        for d1 in ticks:
            for d2 in ticks:
                if d1 + d2 >= best:
                    continue
                if check_solution_vector(A, (d1, d2), Config(tol=1e-12)).feasible:
                    best = d1 + d2
        assert S_up == pytest.approx(best, abs=1e-9)


def test_no_convergence_when_no_start_is_feasible(monkeypatch):
    import fshs.steiner as st
    monkeypatch.setattr(st._Objective, "feasible", lambda self, d: False)
    with pytest.raises(NoConvergence):
        solve(TWO)
