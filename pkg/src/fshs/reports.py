"""Assemble JSON report documents from solver, classifier and stability results."""

from __future__ import annotations

import time
from typing import Any, Dict, List, Optional

from . import __version__
from .classification import classify_points, hp_set
from .config import Config
from .regions import Indeterminate
from .scenario import (
    REPORT_VERSION,
    Scenario,
    classification_to_dict,
    stability_to_dict,
    steiner_to_dict,
)
from .stability import stability_verdict
from .steiner import SteinerReport, check_solution_vector, solve


def _config_dict(cfg: Config) -> Dict[str, Any]:
    return {"eps": cfg.eps, "tol": cfg.tol, "grid_h": cfg.grid_h, "starts": cfg.starts,
            "seed": cfg.seed, "n_dirs": cfg.n_dirs}


def class_document(A, rep: SteinerReport, cfg: Config) -> Dict[str, Any]:
    doc = steiner_to_dict(rep)
    try:
        cls = classify_points(A, rep, cfg)
    except Indeterminate as exc:
        doc["classification"] = None
        doc["hp_D"] = []
        doc["note"] = str(exc)
        return doc
    doc["classification"] = classification_to_dict(cls)
    doc["hp_D"] = [[float(p[0]), float(p[1])] for p in hp_set(A, rep, cls, "D", cfg).union]
    return doc


def _envelope(kind: str, sc: Scenario, cfg: Config, started: float) -> Dict[str, Any]:
    return {
        "version": REPORT_VERSION,
        "tool": f"fshs {__version__}",
        "kind": kind,
        "scenario": sc.to_dict(),
        "config": _config_dict(cfg),
        "classes": [],
        "oracle": None,
        "stability": None,
        "timing": {"seconds": 0.0},
        "_t0": started,
    }


def _finish(doc: Dict[str, Any]) -> Dict[str, Any]:
    doc["timing"]["seconds"] = float(time.perf_counter() - doc.pop("_t0"))
    return doc


def solve_document(sc: Scenario, cfg: Config) -> Dict[str, Any]:
    t0 = time.perf_counter()
    A = sc.to_boundary()
    rep = solve(A, cfg)
    doc = _envelope("solve", sc, cfg, t0)
    doc["classes"] = [class_document(A, r, cfg) for r in rep.classes or [rep]]
    if rep.oracle is not None:
        o = rep.oracle
        doc["oracle"] = {"S_upper": o.S_upper, "d": list(o.d), "h": o.h,
                         "lower_bound": o.lower_bound, "agrees": o.agrees}
    return _finish(doc)


def classify_document(sc: Scenario, d: List[float], cfg: Config) -> Dict[str, Any]:
    t0 = time.perf_counter()
    A = sc.to_boundary()
    rep = check_solution_vector(A, d, cfg)
    if not rep.feasible:
        raise ValueError("d is not feasible: K_d is empty or some compact is not covered "
                         f"(residuals {[round(r, 12) for r in rep.residuals]})")
    doc = _envelope("classify", sc, cfg, t0)
    doc["classes"] = [class_document(A, rep, cfg)]
    return _finish(doc)


def stability_document(sc: Scenario, cfg: Config) -> Dict[str, Any]:
    t0 = time.perf_counter()
    A = sc.to_boundary()
    st = stability_verdict(A, cfg)
    doc = _envelope("stability", sc, cfg, t0)
    doc["classes"] = [class_document(A, r, cfg) for r in st.steiner.classes or [st.steiner]]
    doc["stability"] = stability_to_dict(st)
    return _finish(doc)


def verdict_line(doc: Dict[str, Any]) -> str:
    """The one-line summary printed by the command line tool."""
    best: Optional[Dict[str, Any]] = doc["classes"][0] if doc["classes"] else None
    if doc["kind"] == "stability":
        s = doc["stability"]
        return (f"{s['verdict']}: S_A = {s['S_A']:.12g}, S_A^Conv = {s['S_A_conv']:.12g}, "
                f"gap = {s['gap']:.3g} (certified error {s['certified_error']:.3g})")
    d = ", ".join(f"{x:.10g}" for x in best["d"])
    if doc["kind"] == "classify":
        far = sum(p["far"] for row in (best["classification"] or {"points": []})["points"] for p in row)
        return (f"feasible: sum d = {best['S']:.12g}, {far} far point(s), "
                f"{len(best['hp_D'])} contact point(s) (certified error {best['certified_error']:.3g})")
    return (f"S_A = {best['S']:.12g} at d = ({d}), {len(doc['classes'])} class(es) "
            f"(certified error {best['certified_error']:.3g})")
