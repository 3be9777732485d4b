"""Report records shared by the inequality checkers and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import GridError

# Default acceptance tolerance: a margin passes when it is not more negative
# than tol_abs + tol_rel * scale, with scale = max(|lhs|, |rhs|).
TOL_ABS = 1e-12
TOL_REL = 1e-10

STATUS_OK = "ok"
STATUS_NUMERICAL_FAILURE = "numerical-failure"


def margin_passes(margin: float, lhs: float, rhs: float,
                  tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> bool:
    """Tolerance rule used by every checker."""
    if margin != margin:  # NaN never passes
        return False
    scale = max(abs(lhs), abs(rhs))
    if scale != scale or scale == float("inf"):
        scale = 0.0
    return margin >= -(tol_abs + tol_rel * scale)


@dataclass
class InequalityReport:
    """One verified inequality instance.

    margin is oriented so that the claimed inequality holds iff margin >= 0
    (up to tolerance).  err_estimate bounds the numerical uncertainty of the
    margin (series truncation plus first-order rounding).  status flips to
    "numerical-failure" when the evaluation was too ill-conditioned to trust,
    in which case passed is meaningless and recorded as False.
    """

    suite_id: str
    params_echo: dict[str, Any]
    z: float | str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    err_estimate: float
    status: str = STATUS_OK
    aux: dict[str, float] | None = None

    def params_json(self) -> str:
        return json.dumps(self.params_echo, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan for a parameter sweep.

    param_ranges maps a parameter name to an inclusive (lo, hi) interval;
    z_range is kept separate because several suites build per-instance
    sub-grids over it.  mode is "random" (uniform draws from a seeded PRNG)
    or "lattice" (evenly spaced values, index-aligned across parameters).
    """

    param_ranges: dict[str, tuple[float, float]] = field(default_factory=dict)
    z_range: tuple[float, float] | None = None
    samples: int = 100
    seed: int = 0
    mode: str = "random"

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise GridError(f"samples must be >= 1, got {self.samples}")
        if self.mode not in ("random", "lattice"):
            raise GridError(f"mode must be 'random' or 'lattice', got {self.mode!r}")
        for name, (lo, hi) in self.param_ranges.items():
            if not (lo <= hi):
                raise GridError(f"range for {name!r} is empty: ({lo}, {hi})")
        if self.z_range is not None and not (self.z_range[0] <= self.z_range[1]):
            raise GridError(f"z range is empty: {self.z_range}")

    def replace(self, **kw: Any) -> "GridSpec":
        data = {
            "param_ranges": dict(self.param_ranges),
            "z_range": self.z_range,
            "samples": self.samples,
            "seed": self.seed,
            "mode": self.mode,
        }
        data.update(kw)
        return GridSpec(**data)


def grid_from_json(obj: dict[str, Any]) -> GridSpec:
    """Build a GridSpec from a plain dict (parsed grid file).

    Recognized keys: "samples", "seed", "mode", "z" (two-element range) and
    any other name mapped to a two-element [lo, hi] range.
    """
    if not isinstance(obj, dict):
        raise GridError("grid file must contain a JSON object")
    try:
        samples = int(obj.get("samples", 100))
        seed = int(obj.get("seed", 0))
    except (TypeError, ValueError) as exc:
        raise GridError(f"samples and seed must be integers: {exc}") from None
    mode = str(obj.get("mode", "random"))
    z_range = None
    ranges: dict[str, tuple[float, float]] = {}
    for key, val in obj.items():
        if key in ("samples", "seed", "mode"):
            continue
        if (not isinstance(val, (list, tuple)) or len(val) != 2
                or not all(isinstance(v, (int, float)) for v in val)):
            raise GridError(f"range for {key!r} must be a [lo, hi] pair")
        if key == "z":
            z_range = (float(val[0]), float(val[1]))
        else:
            ranges[key] = (float(val[0]), float(val[1]))
    return GridSpec(param_ranges=ranges, z_range=z_range,
                    samples=samples, seed=seed, mode=mode)
