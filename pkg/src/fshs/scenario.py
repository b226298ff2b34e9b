"""Scenario files, report documents and their JSON form.

Reports are plain JSON-compatible dicts so they can be written, read back
and compared for equality. Floats are written with 17 significant digits,
which reproduces every double exactly; non-finite values use the
``Infinity``/``NaN`` tokens that Python's json module reads back.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .config import Config
from .geometry import FinitePoints

SCENARIO_VERSION = "1"
REPORT_VERSION = "1"
CONFIG_KEYS = {"eps": float, "grid_h": float, "starts": int, "seed": int, "n_dirs": int}


class ParseError(ValueError):
    """The file could not be read or is not JSON."""


class ValidationError(ValueError):
    """The document is JSON but violates the schema; ``errors`` lists every problem."""

    def __init__(self, errors: List[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


@dataclass
class Scenario:
    boundary: List[Tuple[str, List[Tuple[float, float]]]]
    config: Dict[str, Any] = field(default_factory=dict)
    version: str = SCENARIO_VERSION
    norm: str = "euclidean"

    def to_boundary(self):
        from .steiner import Boundary
        return Boundary.of([pts for _, pts in self.boundary], [name for name, _ in self.boundary])

    def to_config(self, base: Optional[Config] = None) -> Config:
        return (base or Config()).with_overrides(**self.config)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": self.version,
            "norm": self.norm,
            "boundary": [{"name": name, "points": [[float(x), float(y)] for x, y in pts]}
                         for name, pts in self.boundary],
            "config": dict(self.config),
        }


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def validate_scenario(doc: Any) -> Scenario:
    errors: List[str] = []
    if not isinstance(doc, dict):
        raise ValidationError(["top level must be an object"])
    version = doc.get("version", SCENARIO_VERSION)
    if not isinstance(version, str):
        errors.append("version must be a string")
    norm = doc.get("norm", "euclidean")
    if norm != "euclidean":
        errors.append(f"norm must be 'euclidean', got {norm!r}")
    boundary = doc.get("boundary")
    compacts: List[Tuple[str, List[Tuple[float, float]]]] = []
    if not isinstance(boundary, list) or not boundary:
        errors.append("boundary must be a nonempty list of compacts")
        boundary = []
    for k, comp in enumerate(boundary):
        where = f"boundary[{k}]"
        if not isinstance(comp, dict):
            errors.append(f"{where} must be an object")
            continue
        name = comp.get("name", f"A{k + 1}")
        if not isinstance(name, str):
            errors.append(f"{where}.name must be a string")
        pts = comp.get("points")
        if not isinstance(pts, list) or not pts:
            errors.append(f"{where}.points must be a nonempty list")
            continue
        good = []
        for m, p in enumerate(pts):
            if not (isinstance(p, list) and len(p) == 2 and all(_is_number(v) for v in p)):
                errors.append(f"{where}.points[{m}] must be [x, y] numbers")
                continue
            if not all(math.isfinite(v) for v in p):
                errors.append(f"{where}.points[{m}] is not finite: {p}")
                continue
            good.append((float(p[0]), float(p[1])))
        compacts.append((name if isinstance(name, str) else f"A{k + 1}", good))
    cfg = doc.get("config", {}) or {}
    clean: Dict[str, Any] = {}
    if not isinstance(cfg, dict):
        errors.append("config must be an object")
        cfg = {}
    for key, val in cfg.items():
        kind = CONFIG_KEYS.get(key)
        if kind is None:
            errors.append(f"config.{key} is not a known setting")
        elif kind is int and not (isinstance(val, int) and not isinstance(val, bool)):
            errors.append(f"config.{key} must be an integer")
        elif kind is float and not (_is_number(val) and math.isfinite(val) and val > 0):
            errors.append(f"config.{key} must be a positive finite number")
        else:
            clean[key] = val
    if clean:
        try:
            Config().with_overrides(**clean)
        except ValueError as exc:
            errors.append(f"config: {exc}")
    if errors:
        raise ValidationError(errors)
    return Scenario(compacts, clean, version, norm)


def _read_json(path) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def load_scenario(path) -> Scenario:
    return validate_scenario(_read_json(path))


def builtin_hexagon() -> Scenario:
    """Three pairs of adjacent vertices of the regular unit hexagon."""
    c, s = math.cos(math.pi / 3), math.sin(math.pi / 3)
    return Scenario([
        ("A1", [(-c, s), (c, s)]),
        ("A2", [(-c, -s), (-1.0, 0.0)]),
        ("A3", [(1.0, 0.0), (c, -s)]),
    ])


# --- JSON with exact floats ----------------------------------------------------------

def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"  # keep floats floats on the way back
    return s


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + dumps(v, indent, _level + 1) for v in obj) + "\n" + end + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [pad + json.dumps(str(k)) + ": " + dumps(v, indent, _level + 1) for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def save_json(doc: Any, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
        fh.write("\n")


def save_report(report: Dict[str, Any], path) -> None:
    save_json(report, path)


def load_report(path) -> Dict[str, Any]:
    doc = _read_json(path)
    errors = []
    if not isinstance(doc, dict):
        raise ValidationError(["report must be an object"])
    for key in ("version", "kind", "scenario"):
        if key not in doc:
            errors.append(f"report lacks '{key}'")
    if errors:
        raise ValidationError(errors)
    return doc


def load_compact(path) -> FinitePoints:
    """A point set from ``{"points": [...]}`` or a one-compact scenario."""
    doc = _read_json(path)
    if isinstance(doc, dict) and "points" in doc and "boundary" not in doc:
        doc = {"boundary": [{"name": doc.get("name", "A"), "points": doc["points"]}]}
    sc = validate_scenario(doc)
    if len(sc.boundary) != 1:
        raise ValidationError([f"{path}: expected exactly one compact, got {len(sc.boundary)}"])
    return FinitePoints(tuple(sc.boundary[0][1]), sc.boundary[0][0])


# --- report documents ------------------------------------------------------------------

def _pt(p) -> List[float]:
    return [float(p[0]), float(p[1])]


def cells_to_dict(K) -> List[Dict[str, Any]]:
    out = []
    for c in K.cells:
        atoms = [{"vertices": [_pt(v) for v in P.vertices], "r": float(r)} for P, r in c.atoms]
        out.append({"atoms": atoms, "provenance": [list(p) for p in c.provenance]})
    return out


def steiner_to_dict(rep) -> Dict[str, Any]:
    return {
        "d": [float(x) for x in rep.d],
        "S": float(rep.S),
        "feasible": bool(rep.feasible),
        "tight": bool(rep.tight),
        "residuals": [float(x) for x in rep.residuals],
        "hausdorff": [float(x) for x in rep.hausdorff],
        "certified_error": float(rep.certified_error),
        "K_d": cells_to_dict(rep.K_d),
    }


def classification_to_dict(cls) -> Dict[str, Any]:
    return {
        "points": [[{
            "compact": p.compact, "index": p.index, "point": _pt(p.point),
            "distance_to_Kd": float(p.distance_to_Kd), "far": p.far, "nondense": p.nondense,
            "discrete": p.discrete, "contact_points": [_pt(q) for q in p.contact_points],
        } for p in row] for row in cls.points],
    }


def stability_to_dict(st) -> Dict[str, Any]:
    ds = st.dstay
    return {
        "verdict": st.verdict,
        "direct": st.direct,
        "S_A": float(st.S_A),
        "S_A_conv": float(st.S_A_conv),
        "gap": float(st.gap),
        "certified_error": float(st.certified_error),
        "dstay": {"status": ds.status, "s": ds.s, "reason": ds.reason, "vacuous": ds.vacuous,
                  "hp_points": [_pt(p) for p in ds.hp_points], "kept": [_pt(p) for p in ds.kept],
                  "margins": [float(m) for m in ds.margins]},
        "necessary": [{"index": c.index, "d": float(c.d), "dH_conv": float(c.dH_conv), "equal": c.equal}
                      for c in st.necessary],
        "d_conv": [float(x) for x in st.steiner_conv.d],
        "notes": list(st.notes),
    }
