import math

import numpy as np
import pytest

from fshs import Config, solve
from fshs.scenario import builtin_hexagon

from property_suites import random_boundary  # noqa: F401  (re-exported for the tests)

HEX_C = (math.sqrt(5) - math.sqrt(4 * math.sqrt(5) - 7)) / 4


def grid_points(bbox, h):
    x0, y0, x1, y1 = bbox
    xs = np.arange(x0, x1 + h, h)
    ys = np.arange(y0, y1 + h, h)
    X, Y = np.meshgrid(xs, ys)
    return np.column_stack([X.ravel(), Y.ravel()])


def implicit_K_d(A, d, P):
    """Boolean mask of x with |x A_i| <= d_i for all i (the ground truth)."""
    ok = np.ones(len(P), bool)
    for i in range(A.n):
        pts = np.asarray(A.points(i))
        dd = np.min(np.linalg.norm(P[:, None, :] - pts[None, :, :], axis=2), axis=1)
        ok &= dd <= d[i]
    return ok


@pytest.fixture(scope="session")
def hexagon():
    return builtin_hexagon().to_boundary()


@pytest.fixture(scope="session")
def hexagon_report(hexagon):
    return solve(hexagon, Config())


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
