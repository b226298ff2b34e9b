"""SVG figures of a report: boundary, K_d, contact points, neighbourhoods."""

from __future__ import annotations

import math
from typing import Any, Dict, List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as PolygonPatch  # noqa: E402

from .geometry import ConvexPolygon, convex_hull  # noqa: E402
from .regions import ConvexCell, DiskIntersectionCell  # noqa: E402

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]
STYLE = {
    "svg.hashsalt": "fshs",
    "svg.fonttype": "none",
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.linewidth": 0.6,
}


def _cell_from_dict(c: Dict[str, Any]):
    atoms = [(ConvexPolygon(tuple(tuple(v) for v in a["vertices"])), a["r"]) for a in c["atoms"]]
    if all(len(P.vertices) == 1 for P, _ in atoms):
        return DiskIntersectionCell([(P.vertices[0], r) for P, r in atoms])
    return ConvexCell(atoms)


def _directions(k: int = 360):
    return [(math.cos(2 * math.pi * t / k), math.sin(2 * math.pi * t / k)) for t in range(k)]


def _outline(cell) -> List:
    """Support points in 360 directions, an inscribed outline of a convex cell."""
    out: List = []
    for u in _directions():
        p = cell.support(u)[1]
        if not out or math.dist(p, out[-1]) > 1e-12:
            out.append(p)
    return out


def _offset_outline(P: ConvexPolygon, r: float) -> List:
    """Boundary of the closed r-neighbourhood of a convex polygon."""
    return [(P.extreme(u)[0] + r * u[0], P.extreme(u)[1] + r * u[1]) for u in _directions()]


def render_svg(report: Dict[str, Any], path, show_neighbourhoods: bool = True, fmt: str = "svg") -> None:
    """Write a deterministic SVG for a report document."""
    boundary = report["scenario"]["boundary"]
    classes = report.get("classes") or []
    rep = classes[0] if classes else None
    pts_all = [tuple(p) for comp in boundary for p in comp["points"]]
    xs = [p[0] for p in pts_all]
    ys = [p[1] for p in pts_all]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.0, 5.0))
        if rep is not None:
            for c in rep["K_d"]:
                cell = _cell_from_dict(c)
                poly = _outline(cell)
                if len(poly) >= 3:
                    ax.add_patch(PolygonPatch(poly, closed=True, facecolor="0.15", edgecolor="0.15",
                                              linewidth=0.5, alpha=0.85, zorder=2))
                elif poly:
                    ax.plot([p[0] for p in poly], [p[1] for p in poly], "s", color="0.15",
                            markersize=3, zorder=2)
                xs += [p[0] for p in poly]
                ys += [p[1] for p in poly]
            if show_neighbourhoods:
                for k, comp in enumerate(boundary):
                    hull = convex_hull([tuple(p) for p in comp["points"]])
                    ring = _offset_outline(hull, rep["d"][k])
                    ring = ring + ring[:1]
                    ax.plot([p[0] for p in ring], [p[1] for p in ring], "--",
                            color=PALETTE[k % len(PALETTE)], linewidth=0.7, zorder=1)
                    xs += [p[0] for p in ring]
                    ys += [p[1] for p in ring]
            hp = rep.get("hp_D") or []
            if hp:
                ax.plot([p[0] for p in hp], [p[1] for p in hp], "o", markerfacecolor="white",
                        markeredgecolor="black", markersize=6, zorder=4, label="contact points")
        for k, comp in enumerate(boundary):
            col = PALETTE[k % len(PALETTE)]
            cp = [tuple(p) for p in comp["points"]]
            hull = convex_hull(cp)
            if len(hull.vertices) >= 2:
                ring = list(hull.vertices) + [hull.vertices[0]]
                ax.plot([p[0] for p in ring], [p[1] for p in ring], "-", color=col,
                        linewidth=0.8, alpha=0.6, zorder=3)
            ax.plot([p[0] for p in cp], [p[1] for p in cp], "o", color=col, markersize=4, zorder=5)
            lx = sum(p[0] for p in cp) / len(cp)
            ly = sum(p[1] for p in cp) / len(cp)
            ax.annotate(comp["name"], (lx, ly), textcoords="offset points", xytext=(6, 6),
                        color=col, zorder=6)
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1e-6)
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        half = 0.5 * span * 1.2  # 10% margin on each side
        ax.set_xlim(cx - half, cx + half)
        ax.set_ylim(cy - half, cy + half)
        ax.set_aspect("equal")
        ax.set_xticks([])
        ax.set_yticks([])
        if rep is not None:
            ax.set_title(f"S = {rep['S']:.10g}", fontsize=9)
        meta = {"Date": None, "Creator": None} if fmt == "svg" else None
        fig.savefig(path, format=fmt, metadata=meta)
        plt.close(fig)
