"""Tolerance and search settings shared by every stage of a computation."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    """All numeric knobs, threaded explicitly through the API.

    ``eps`` is the geometric approximation budget (region polygons, sampled
    sups), ``tol`` the comparison tolerance for exact predicates.
    """

    eps: float = 1e-6
    tol: float = 1e-9
    n_dirs: int = 64
    grid_h: float = 0.005
    starts: int = 12
    seed: int = 0
    oracle: bool = False
    proj_tol: float = 1e-10
    proj_max_iter: int = 10_000
    # margin for strict membership in open neighbourhoods, in units of tol
    open_margin: float = 10.0

    def __post_init__(self):
        for name in ("eps", "tol", "grid_h", "proj_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.n_dirs < 16:
            raise ValueError("n_dirs must be at least 16")
        if self.starts < 0:
            raise ValueError("starts must be non-negative")

    def with_overrides(self, **kwargs) -> "Config":
        known = {f.name for f in fields(self)}
        return replace(self, **{k: v for k, v in kwargs.items() if k in known and v is not None})


DEFAULT = Config()
