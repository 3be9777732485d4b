"""Sampled verification suites over parameter grids.

Each suite owns a deterministic sampler: a GridSpec (ranges, sample count,
seed, point-set mode) is expanded into unit-cube rows, every row is mapped
onto one admissible parameter instance, and the matching checker from
inequalities.py produces the report rows.  Samplers keep instances inside
the region where double precision can actually resolve the margins: the
convergence index eps is drawn directly and the last lower weight solved
from it, the argument is capped where the series magnitude would pass
exp(v_target), and the powered inequalities additionally cap their
exponents.  hp_margin() recomputes any report's margin with the mpmath
oracle for spot checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath as mp
import numpy as np

from .errors import GridError, NoConvergenceError, ParameterError
from .gammakit import gamma_ratio, log_gamma
from .inequalities import (
    chi_check,
    corollary3_2f2_check,
    kn_ratio,
    kn_value_and_bound,
    lazarevic_check,
    logconcavity_check,
    ratio_monotonicity_check,
    tail_turan_check,
    turan_alpha_check,
    turan_beta_check,
    wilker_check,
    xi_prime,
)
from .oracle import _hp_pfq_mpf, _hp_series
from .report import (
    GridSpec,
    InequalityReport,
    STATUS_NUMERICAL_FAILURE,
    TOL_ABS,
    TOL_REL,
)
from .series import _DEFAULT_CFG, EvalConfig, FoxWrightParams

__all__ = [
    "SuiteDef",
    "SUITES",
    "EXPLORERS",
    "run_suite",
    "run_explore",
    "hp_margin",
    "suite_ids",
    "explorer_ids",
]

_EPS_MIN = 0.05
_V_TARGET = 400.0
_V_MIN = 5.0
_GRID_POINTS = 20
_PQ_CYCLE = ((1, 1), (1, 2), (2, 2))
_TAIL_SHAPES = ((0, 1), (1, 1), (0, 2), (1, 2))


# ---------------------------------------------------------------------------
# Unit-cube point sets and range plumbing


class _Cursor:
    """Positional reader over one row of unit draws."""

    def __init__(self, row: np.ndarray) -> None:
        self._row = row
        self._at = 0

    def take(self) -> float:
        u = float(self._row[self._at])
        self._at += 1
        return u


def _unit_matrix(spec: GridSpec, dims: int, n: int) -> np.ndarray:
    if spec.mode == "random":
        return np.random.default_rng(spec.seed).random((n, dims))
    # Rank-1 lattice along the generalized golden-ratio direction, with a
    # seed-dependent rotation so different seeds give distinct point sets.
    phi = 2.0
    for _ in range(64):
        phi = (1.0 + phi) ** (1.0 / (dims + 1))
    alpha = np.array([phi ** -(d + 1) for d in range(dims)])
    rot = np.mod((spec.seed + 1) * 9973 * alpha, 1.0)
    idx = np.arange(1, n + 1, dtype=float).reshape(-1, 1)
    return np.mod(rot + idx * alpha, 1.0)


def _hi_open(u: float, rng: tuple[float, float]) -> float:
    """Map u in [0,1) onto (lo, hi], keeping clear of the low endpoint."""
    lo, hi = rng
    return hi - u * (hi - lo)


def _lo_closed(u: float, rng: tuple[float, float]) -> float:
    """Map u in [0,1) onto [lo, hi)."""
    lo, hi = rng
    return lo + u * (hi - lo)


def _resolve_ranges(sd: "SuiteDef", spec: GridSpec) -> dict:
    ranges = dict(sd.defaults)
    for name, pair in spec.param_ranges.items():
        if name not in sd.defaults:
            raise GridError(
                f"suite {sd.suite_id!r} has no range named {name!r}; "
                f"known: {sorted(sd.defaults)}")
        ranges[name] = (float(pair[0]), float(pair[1]))
    if spec.z_range is not None:
        ranges["z"] = (float(spec.z_range[0]), float(spec.z_range[1]))
    return ranges


# ---------------------------------------------------------------------------
# Admissible-instance draws


def _solve_weights(c: _Cursor, p: int, q: int,
                   wrange: tuple[float, float]) -> tuple[list, list, float]:
    """Weights for p upper and q lower pairs with eps kept >= 0.05.

    eps = 1 + sum(B) - sum(A) is drawn directly and the last lower weight
    solved from it; when even the largest admissible value cannot reach
    eps = 0.05 the upper weights are scaled down first.
    """
    wlo, whi = wrange
    aw = [_lo_closed(c.take(), wrange) for _ in range(p)]
    bw = [_lo_closed(c.take(), wrange) for _ in range(q - 1)]
    u_eps = c.take()
    sum_a, sum_b = math.fsum(aw), math.fsum(bw)
    hi_eps = 1.0 + sum_b + whi - sum_a
    if hi_eps < _EPS_MIN:
        scale = (1.0 + sum_b + whi - _EPS_MIN) / sum_a
        aw = [a * scale for a in aw]
        sum_a = math.fsum(aw)
        hi_eps = _EPS_MIN
    lo_eps = max(_EPS_MIN, 1.0 + sum_b + wlo - sum_a)
    eps = lo_eps + u_eps * max(hi_eps - lo_eps, 0.0)
    bw.append(max(eps - 1.0 + sum_a - sum_b, 0.0))
    return aw, bw, 1.0 + math.fsum(bw) - sum_a


def _z_cap(params: FoxWrightParams, eps: float, v_target: float) -> float:
    """Argument at which the series magnitude reaches about exp(v_target).

    Saddle-point estimate: log of the series grows like eps * k(z) with
    peak index k(z) = (z prod A^A / prod B^B)^(1/eps).
    """
    s = eps * math.log(v_target / eps)
    for _, w in params.lower:
        if w > 0.0:
            s += w * math.log(w)
    for _, w in params.upper:
        if w > 0.0:
            s -= w * math.log(w)
    return math.exp(min(s, 700.0))


def _draw_z(u: float, zrange: tuple[float, float], params: FoxWrightParams,
            eps: float, v_target: float = _V_TARGET) -> float:
    lo, hi = zrange
    eff = min(hi, _z_cap(params, eps, v_target))
    if eff <= lo:
        eff = hi
    return eff - u * (eff - lo)


def _sample_series(c: _Cursor, i: int, ranges: dict,
                   v_target: float = _V_TARGET
                   ) -> tuple[FoxWrightParams, float]:
    """General (p,q) instance cycling the shapes (1,1), (1,2), (2,2)."""
    p, q = _PQ_CYCLE[i % 3]
    avals = [_hi_open(c.take(), ranges["alpha"]) for _ in range(p)]
    bvals = [_hi_open(c.take(), ranges["beta"]) for _ in range(q)]
    aw, bw, eps = _solve_weights(c, p, q, ranges["weight"])
    params = FoxWrightParams(tuple(zip(avals, aw)), tuple(zip(bvals, bw)))
    return params, _draw_z(c.take(), ranges["z"], params, eps, v_target)


def _sample_tail_series(c: _Cursor, i: int, ranges: dict
                        ) -> tuple[FoxWrightParams, int, float]:
    """Instance with all upper weights 0, plus a tail index n."""
    p, q = _TAIL_SHAPES[i % 4]
    ups = tuple((_hi_open(c.take(), ranges["alpha"]), 0.0) for _ in range(p))
    lows = []
    for _ in range(q):
        b = _hi_open(c.take(), ranges["beta"])
        lows.append((b, _lo_closed(c.take(), ranges["weight"])))
    params = FoxWrightParams(ups, tuple(lows))
    nlo, nhi = ranges["n"]
    n = min(int(nlo + c.take() * (nhi - nlo + 1.0)), int(nhi))
    z = _draw_z(c.take(), ranges["z"], params, params.epsilon())
    return params, n, z


def _ordered_pair(c: _Cursor, arange: tuple[float, float],
                  brange: tuple[float, float]) -> tuple[float, float]:
    """Draw a from arange and b from brange with a >= b."""
    ua, ub = c.take(), c.take()
    alo, ahi = arange
    blo, bhi = brange
    a = ahi - ua * (ahi - alo)
    if a < blo:
        a = ahi - ua * (ahi - blo)
    b_top = min(bhi, a)
    return a, b_top - ub * (b_top - blo)


def _sub_grid(lo: float, hi: float) -> list[float]:
    return [lo + (hi - lo) * (j + 1) / _GRID_POINTS
            for j in range(_GRID_POINTS)]


# ---------------------------------------------------------------------------
# Per-suite builders


def _build_turan_alpha(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    params, z = _sample_series(c, i, ranges)
    return [turan_alpha_check(params, z, cfg, ta, tr)]


def _build_turan_beta(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    params, z = _sample_series(c, i, ranges)
    return [turan_beta_check(params, z, cfg, ta, tr)]


def _build_corollary3(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    b1 = _hi_open(c.take(), ranges["beta1"])
    b2 = _hi_open(c.take(), ranges["beta2"])
    ug, uz = c.take(), c.take()
    # two admissible families: a1 above both b2 and b1+1, or below both
    # b2 and b1-1 (keeping a1 > 0); fall back to the first when the
    # second has no room
    top = min(b2, b1 - 1.0)
    if i % 2 == 1 and top > 0.2:
        a1 = 0.05 + ug * (top - 0.15)
    else:
        a1 = max(b2, b1 + 1.0) + 0.05 + ug * 3.0
    lo, hi = ranges["z"]
    z = lo + uz * (hi - lo)
    return [corollary3_2f2_check(a1, b1, b2, z, cfg, ta, tr)]


def _build_ratio(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    params, zmax = _sample_series(c, i, ranges)
    slot = "beta" if i % 2 == 0 else "alpha"
    v1 = params.lower[0][0] if slot == "beta" else params.upper[0][0]
    v2 = v1 + 0.1 + 2.0 * c.take()
    grid = _sub_grid(ranges["z"][0], zmax)
    return [ratio_monotonicity_check(params, slot, v1, v2, grid,
                                     cfg, ta, tr)]


def _build_tail_turan(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    params, n, z = _sample_tail_series(c, i, ranges)
    return [tail_turan_check(params, n, z, cfg, ta, tr)]


def _build_kn(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    params, n, z = _sample_tail_series(c, i, ranges)
    if i % 5 == 0:
        grid = _sub_grid(ranges["z"][0], z)
        return [kn_value_and_bound(params, n, z_grid=grid, cfg=cfg,
                                   tol_abs=ta, tol_rel=tr)]
    return [kn_value_and_bound(params, n, z=z, cfg=cfg,
                               tol_abs=ta, tol_rel=tr)]


def _build_chi(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    a1, b2 = _ordered_pair(c, ranges["alpha1"], ranges["beta2"])
    B1 = _lo_closed(c.take(), ranges["B1"])
    g1 = _hi_open(c.take(), ranges["beta1"])
    g2 = _hi_open(c.take(), ranges["beta1"])
    lo_b, hi_b = min(g1, g2), max(g1, g2)
    if hi_b - lo_b < 0.1:
        hi_b = lo_b + 0.1
    grid = [lo_b + (hi_b - lo_b) * j / (_GRID_POINTS - 1.0)
            for j in range(_GRID_POINTS)]
    params = FoxWrightParams(((a1, 1.0),), ((lo_b, B1), (b2, 1.0)))
    z = _draw_z(c.take(), ranges["z"], params, 1.0 + B1)
    return [chi_check(a1, b2, B1, grid, z, cfg, ta, tr)]


def _powered_b1_cap(beta1: float, off: float, whi: float) -> float:
    """Largest B1 <= whi keeping the Lazarevic exponents within budget."""

    def load(b: float) -> float:
        e1 = gamma_ratio(beta1, b)
        e2 = e1 * (beta1 + b) / beta1
        return max(e1, e2, 1.0) * ((1.0 + b / beta1) * off + _V_MIN)

    if load(whi) <= 600.0:
        return whi
    lo, hi = 0.0, whi
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        if load(mid) <= 600.0:
            lo = mid
        else:
            hi = mid
    return lo


def _build_lazarevic(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    a1, b2 = _ordered_pair(c, ranges["alpha1"], ranges["beta2"])
    b1 = _hi_open(c.take(), ranges["beta1"])
    off = abs(log_gamma(a1) - log_gamma(b2))
    wlo, whi = ranges["B1"]
    cap_b = _powered_b1_cap(b1, off, whi)
    B1 = _lo_closed(c.take(), (min(wlo, cap_b), cap_b))
    e1 = gamma_ratio(b1, B1)
    e2 = e1 * (b1 + B1) / b1
    v_t = 600.0 / max(e1, e2, 1.0) - (1.0 + B1 / b1) * off
    v_t = max(min(_V_TARGET, v_t), _V_MIN)
    params = FoxWrightParams(((a1, 1.0),), ((b1, B1), (b2, 1.0)))
    z = _draw_z(c.take(), ranges["z"], params, 1.0 + B1, v_t)
    return [lazarevic_check(a1, b1, b2, B1, z, cfg, ta, tr)]


def _build_wilker(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    a1, b2 = _ordered_pair(c, ranges["alpha1"], ranges["beta2"])
    b1 = _hi_open(c.take(), ranges["beta1"])
    wlo, whi = ranges["B1"]
    cap_b = min(whi, b1 * 600.0 / (_V_MIN + 20.0))
    B1 = _lo_closed(c.take(), (min(wlo, cap_b), cap_b))
    v_t = max(_V_MIN, min(_V_TARGET, 600.0 / max(B1 / b1, 1.0) - 20.0))
    params = FoxWrightParams(((a1, 1.0),), ((b1, B1), (b2, 1.0)))
    z = _draw_z(c.take(), ranges["z"], params, 1.0 + B1, v_t)
    return [wilker_check(a1, b1, b2, B1, z, cfg, ta, tr)]


def _build_logconcave(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    variant = i % 4
    p = 2 if variant == 2 else 1
    b1 = _hi_open(c.take(), ranges["beta"])
    B1 = 1.0 if variant == 1 else _lo_closed(c.take(), ranges["B1"])
    ups, lows = [], [(b1, B1)]
    for _ in range(p):
        if variant == 3 and ranges["beta"][0] < 1.0:
            b = _hi_open(c.take(), (ranges["beta"][0],
                                    min(ranges["beta"][1], 1.0)))
            a = 1.0
        else:
            b = _hi_open(c.take(), ranges["beta"])
            a = b + _lo_closed(c.take(), ranges["gap"])
        ups.append((a, 1.0))
        lows.append((b, 1.0))
    params = FoxWrightParams(tuple(ups), tuple(lows))
    lo, hi = ranges["z"]
    eff = min(hi, _z_cap(params, 1.0 + B1, _V_TARGET))
    if eff <= lo:
        eff = hi
    za = lo + c.take() * (eff - lo)
    zb = lo + c.take() * (eff - lo)
    z1, z2 = min(za, zb), max(za, zb)
    if z2 - z1 < 1e-3:
        z2 = z1 + max(1e-3 * (eff - lo), 1e-6)
    return list(logconcavity_check(params, z1, z2, cfg, ta, tr))


# ---------------------------------------------------------------------------
# Exploratory probes for the two open questions


def _direction(values: Sequence[float]) -> tuple[str, float]:
    """Direction of a sequence under a relative step tolerance."""
    ups = downs = 0
    for a, b in zip(values, values[1:]):
        tol = 1e-9 * max(abs(a), abs(b), 1.0)
        if b - a > tol:
            ups += 1
        elif a - b > tol:
            downs += 1
    if ups and downs:
        direction = "mixed"
    elif ups:
        direction = "nondecreasing"
    elif downs:
        direction = "nonincreasing"
    else:
        direction = "constant"
    return direction, min(b - a for a, b in zip(values, values[1:]))


def _build_explore_kn(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    nlo, nhi = ranges["n"]
    if i % 2 == 0:
        params, n, z = _sample_tail_series(c, i // 2, ranges)
    else:
        params, z = _sample_series(c, i, ranges)
        n = min(int(nlo + c.take() * (nhi - nlo + 1.0)), int(nhi))
    proven = all(w == 0.0 for _, w in params.upper)
    grid = _sub_grid(ranges["z"][0], z)
    ks = [kn_ratio(params, n, v, cfg) for v in grid]
    direction, worst_step = _direction(ks)
    return [InequalityReport(
        suite_id="problem1-kn",
        params_echo={**params.to_json(), "n": n, "direction": direction},
        z=grid[-1],
        lhs=ks[0],
        rhs=ks[-1],
        margin=worst_step,
        passed=True,
        err_estimate=1e-9 * max(abs(k) for k in ks),
        aux={"k_values": ks, "proven_shape": proven},
    )]


def _build_explore_xi(u, i, ranges, cfg, ta, tr):
    c = _Cursor(u)
    variant = i % 3
    if variant == 0:
        a1, b2 = _ordered_pair(c, ranges["alpha"], ranges["beta"])
        b1 = _hi_open(c.take(), ranges["beta"])
        B1 = _lo_closed(c.take(), ranges["weight"])
        params = FoxWrightParams(((a1, 1.0),), ((b1, B1), (b2, 1.0)))
        eps = 1.0 + B1
    elif variant == 1:
        a1 = _hi_open(c.take(), ranges["alpha"])
        b1 = _hi_open(c.take(), ranges["beta"])
        aw, bw, eps = _solve_weights(c, 1, 1, ranges["weight"])
        params = FoxWrightParams(((a1, aw[0]),), ((b1, bw[0]),))
    else:
        avals = [_hi_open(c.take(), ranges["alpha"]) for _ in range(2)]
        bvals = [_hi_open(c.take(), ranges["beta"]) for _ in range(2)]
        aw, bw, eps = _solve_weights(c, 2, 2, ranges["weight"])
        params = FoxWrightParams(tuple(zip(avals, aw)), tuple(zip(bvals, bw)))
    z = _draw_z(c.take(), ranges["z"], params, eps)
    val = xi_prime(params, z, cfg)
    return [InequalityReport(
        suite_id="problem2-xi",
        params_echo=params.to_json(),
        z=z,
        lhs=val,
        rhs=0.0,
        margin=val,
        passed=True,
        err_estimate=abs(val) * 1e-10 + 1e-12,
        aux={"proven_shape": variant == 0},
    )]


# ---------------------------------------------------------------------------
# Range validation


def _make_validate(values: tuple = (), nonneg: tuple = (),
                   z: str = "nonneg", ordered: tuple | None = None):
    def validate(ranges: dict) -> None:
        for name in values:
            lo, hi = ranges[name]
            if lo < 0.0 or not hi > 0.0:
                raise GridError(
                    f"range {name!r} must lie within (0, inf), "
                    f"got ({lo!r}, {hi!r})")
        for name in nonneg:
            lo, _ = ranges[name]
            if lo < 0.0:
                raise GridError(f"range {name!r} must be >= 0, got lo={lo!r}")
        zlo, zhi = ranges["z"]
        if z == "nonneg" and zlo < 0.0:
            raise GridError(f"this suite needs z >= 0, got ({zlo!r}, {zhi!r})")
        if z == "neg" and (zlo >= 0.0 or zhi > 0.0):
            raise GridError(f"this suite needs z < 0, got ({zlo!r}, {zhi!r})")
        if ordered is not None:
            big, small = ordered
            if ranges[big][1] < ranges[small][0]:
                raise GridError(
                    f"no draw can satisfy {big} >= {small}: "
                    f"{big} range {ranges[big]!r} lies entirely below "
                    f"{small} range {ranges[small]!r}")
    return validate


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class SuiteDef:
    """One named suite: sampling dimensions, defaults, builder, validator."""

    suite_id: str
    dims: int
    rows_per_instance: int
    defaults: dict
    build: Callable
    validate: Callable | None = None


_SERIES_RANGES = {"alpha": (0.1, 5.0), "beta": (0.1, 5.0),
                  "weight": (0.0, 3.0), "z": (0.0, 20.0)}
_TAIL_RANGES = {**_SERIES_RANGES, "n": (0.0, 6.0)}
_POWERED_RANGES = {"alpha1": (0.1, 5.0), "beta1": (0.1, 5.0),
                   "beta2": (0.1, 5.0), "B1": (0.0, 3.0), "z": (0.0, 20.0)}

_V_SERIES = _make_validate(values=("alpha", "beta"), nonneg=("weight",))
_V_TAIL = _make_validate(values=("alpha", "beta"), nonneg=("weight", "n"))
_V_POWERED = _make_validate(values=("alpha1", "beta1", "beta2"),
                            nonneg=("B1",), ordered=("alpha1", "beta2"))

SUITES = {sd.suite_id: sd for sd in (
    SuiteDef("turan-alpha", 9, 1, _SERIES_RANGES, _build_turan_alpha,
             _V_SERIES),
    SuiteDef("turan-beta", 9, 1, _SERIES_RANGES, _build_turan_beta,
             _V_SERIES),
    SuiteDef("corollary3-2f2", 4, 1,
             {"beta1": (0.1, 5.0), "beta2": (0.1, 5.0), "z": (-6.0, 0.0)},
             _build_corollary3,
             _make_validate(values=("beta1", "beta2"), z="neg")),
    SuiteDef("ratio-monotone", 10, 1, _SERIES_RANGES, _build_ratio,
             _V_SERIES),
    SuiteDef("tail-turan", 7, 1, _TAIL_RANGES, _build_tail_turan, _V_TAIL),
    SuiteDef("kn-bound", 7, 1, _TAIL_RANGES, _build_kn, _V_TAIL),
    SuiteDef("chi", 6, 1, _POWERED_RANGES, _build_chi, _V_POWERED),
    SuiteDef("lazarevic", 5, 1, _POWERED_RANGES, _build_lazarevic,
             _V_POWERED),
    SuiteDef("wilker", 5, 1, _POWERED_RANGES, _build_wilker, _V_POWERED),
    SuiteDef("logconcave", 8, 3,
             {"beta": (0.1, 5.0), "B1": (0.0, 3.0), "gap": (0.0, 3.0),
              "z": (0.0, 20.0)},
             _build_logconcave,
             _make_validate(values=("beta",), nonneg=("B1", "gap"))),
)}

EXPLORERS = {sd.suite_id: sd for sd in (
    SuiteDef("problem1-kn", 10, 1, _TAIL_RANGES, _build_explore_kn, _V_TAIL),
    SuiteDef("problem2-xi", 9, 1, _SERIES_RANGES, _build_explore_xi,
             _V_SERIES),
)}


def suite_ids() -> list[str]:
    return sorted(SUITES)


def explorer_ids() -> list[str]:
    return sorted(EXPLORERS)


def _failure_row(suite_id: str, kind: str, msg: str) -> InequalityReport:
    nan = float("nan")
    return InequalityReport(
        suite_id=suite_id,
        params_echo={"error": kind},
        z=nan, lhs=nan, rhs=nan, margin=nan,
        passed=False,
        err_estimate=nan,
        status=STATUS_NUMERICAL_FAILURE,
        aux={"message": msg},
    )


def _run(sd: SuiteDef, spec: GridSpec | None, cfg: EvalConfig,
         tol_abs: float, tol_rel: float) -> list[InequalityReport]:
    spec = spec if spec is not None else GridSpec()
    ranges = _resolve_ranges(sd, spec)
    if sd.validate is not None:
        sd.validate(ranges)
    n_inst = -(-spec.samples // sd.rows_per_instance)
    u = _unit_matrix(spec, sd.dims, n_inst)
    out: list[InequalityReport] = []
    for i in range(n_inst):
        try:
            rows = sd.build(u[i], i, ranges, cfg, tol_abs, tol_rel)
        except (NoConvergenceError, OverflowError) as exc:
            rows = [_failure_row(sd.suite_id, type(exc).__name__, str(exc))]
        out.extend(rows)
    del out[spec.samples:]
    return out


def run_suite(suite_id: str, spec: GridSpec | None = None,
              cfg: EvalConfig = _DEFAULT_CFG, tol_abs: float = TOL_ABS,
              tol_rel: float = TOL_REL) -> list[InequalityReport]:
    """Run one verification suite; deterministic in the GridSpec."""
    sd = SUITES.get(suite_id)
    if sd is None:
        raise ParameterError(
            f"unknown suite {suite_id!r}; known: " + ", ".join(suite_ids()))
    return _run(sd, spec, cfg, tol_abs, tol_rel)


def run_explore(suite_id: str, spec: GridSpec | None = None,
                cfg: EvalConfig = _DEFAULT_CFG) -> list[InequalityReport]:
    """Run one exploratory probe; rows report findings, never failures."""
    sd = EXPLORERS.get(suite_id)
    if sd is None:
        raise ParameterError(
            f"unknown probe {suite_id!r}; known: " + ", ".join(explorer_ids()))
    return _run(sd, spec, cfg, TOL_ABS, TOL_REL)


# ---------------------------------------------------------------------------
# Oracle spot checks: recompute a report's margin in high precision


def _hp_value(params: FoxWrightParams, z, rel_stop, start: int = 0):
    val, _, _ = _hp_series(params, z, rel_stop, start)
    return val


def _hp_turan_alpha(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    a1 = params.upper[0][0]
    z = report.z

    def s(v):
        return _hp_value(params.with_upper_value(0, v), z, rs)

    return s(a1) * s(a1 + 2.0) - s(a1 + 1.0) ** 2


def _hp_turan_beta(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    b1 = params.lower[0][0]
    z = report.z

    def s(v):
        return _hp_value(params.with_lower_value(0, v), z, rs)

    return (s(b1) * s(b1 + 2.0)
            - mp.mpf(b1) / (b1 + 1.0) * s(b1 + 1.0) ** 2)


def _hp_corollary3(report: InequalityReport, rs):
    e = report.params_echo
    a1, b1, b2 = mp.mpf(e["alpha1"]), mp.mpf(e["beta1"]), mp.mpf(e["beta2"])
    z = report.z
    f = b2 * (1 + a1 - b1) / (a1 - b2)
    g = b2 * (a1 - b1 - 1) / (a1 - b2)
    h = b2 * (a1 - b1) / (a1 - b2)

    def pfq(u1, u2, l1, l2):
        return _hp_pfq_mpf((u1, u2), (l1, l2), z)[0]

    return (pfq(b1 - a1 - 1, f + 1, b1, f)
            * pfq(b1 - a1 + 1, g + 1, b1 + 2, g)
            - pfq(b1 - a1, h + 1, b1 + 1, h) ** 2)


def _hp_ratio(report: InequalityReport, rs):
    e = report.params_echo
    base = FoxWrightParams.from_json(e)
    slot, vs, vb = e["slot"], e["v_small"], e["v_big"]
    if slot == "beta":
        p_small = base.with_lower_value(0, vs)
        p_big = base.with_lower_value(0, vb)
    else:
        p_small = base.with_upper_value(0, vs)
        p_big = base.with_upper_value(0, vb)

    def ratio(z):
        if slot == "beta":
            return _hp_value(p_big, z, rs) / _hp_value(p_small, z, rs)
        return _hp_value(p_small, z, rs) / _hp_value(p_big, z, rs)

    z = report.z
    if report.aux["worst_kind"] == "ratio-step":
        return ratio(report.aux["worst_z_prev"]) - ratio(z)
    ds = _hp_value(p_small.shifted(), z, rs)
    db = _hp_value(p_big.shifted(), z, rs)
    es = _hp_value(p_small, z, rs)
    eb = _hp_value(p_big, z, rs)
    if slot == "beta":
        return ds * eb - db * es
    return db * es - ds * eb


def _hp_tail_turan(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    n = report.params_echo["n"]
    z = report.z

    def t(m):
        return _hp_value(params, z, rs, start=m + 1)

    return t(n + 1) ** 2 - t(n) * t(n + 2)


def _hp_kn(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    n = report.params_echo["n"]

    def k(z):
        t0 = _hp_value(params, z, rs, start=n + 1)
        t1 = _hp_value(params, z, rs, start=n + 2)
        t2 = _hp_value(params, z, rs, start=n + 3)
        return t0 * t2 / t1 ** 2

    if report.aux["worst_kind"] == "step":
        return k(report.z) - k(report.aux["worst_z_prev"])
    c = mp.mpf(n + 2) / (n + 3)
    for b, w in params.lower:
        c *= mp.gamma(b + (n + 2) * w) ** 2 / (
            mp.gamma(b + (n + 1) * w) * mp.gamma(b + (n + 3) * w))
    return k(report.z) - c


def _hp_chi_value(a1, b2, B1, v, z, rs):
    num = FoxWrightParams(((a1 + 1.0, 1.0),),
                          ((v + B1, B1), (b2 + 1.0, 1.0)))
    den = FoxWrightParams(((a1, 1.0),), ((v, B1), (b2, 1.0)))
    return (mp.gamma(v + B1) * _hp_value(num, z, rs)
            / (mp.gamma(v) * _hp_value(den, z, rs)))


def _hp_omega(a1, b2, B1, v, z, rs):
    a1, b2, B1, v, z = map(mp.mpf, (a1, b2, B1, v, z))
    c = v + B1
    total = mp.mpf(0)
    streak = 0
    for k in range(1, 3001):
        block = mp.mpf(0)
        for j in range((k - 1) // 2 + 1):
            term = (mp.gamma(a1 + j) * mp.gamma(a1 + k - j)
                    / (mp.factorial(j) * mp.factorial(k - j)
                       * mp.gamma(c + j * B1) * mp.gamma(c + (k - j) * B1)
                       * mp.gamma(b2 + j) * mp.gamma(b2 + k - j)))
            term *= ((k - 2 * j) * (a1 - b2)
                     * (mp.digamma(c + (k - j) * B1) - mp.digamma(c + j * B1))
                     / ((b2 + k - j) * (b2 + j)))
            block += term * mp.power(z, k)
        total += block
        if abs(block) <= rs * (abs(total) + mp.mpf("1e-300")):
            streak += 1
            if streak >= 3:
                return total
        else:
            streak = 0
    raise NoConvergenceError("high-precision omega did not settle")


def _hp_chi(report: InequalityReport, rs):
    e, aux = report.params_echo, report.aux
    a1, b2, B1 = e["alpha1"], e["beta2"], e["B1"]
    z = report.z
    if aux["worst_kind"] == "chi-step":
        return (_hp_chi_value(a1, b2, B1, aux["worst_beta1"], z, rs)
                - _hp_chi_value(a1, b2, B1, aux["worst_beta1_prev"], z, rs))
    return _hp_omega(a1, b2, B1, aux["worst_beta1"], z, rs)


def _hp_tilde_pair(a1, b1, b2, B1, z, rs):
    u_params = FoxWrightParams(((a1, 1.0),), ((b1 + 1.0, B1), (b2, 1.0)))
    v_params = FoxWrightParams(((a1, 1.0),), ((b1, B1), (b2, 1.0)))
    u = mp.gamma(b1 + 1.0) * _hp_value(u_params, z, rs)
    v = mp.gamma(b1) * _hp_value(v_params, z, rs)
    return u, v


def _hp_lazarevic(report: InequalityReport, rs):
    e = report.params_echo
    a1, b1, b2, B1 = e["alpha1"], e["beta1"], e["beta2"], e["B1"]
    u, v = _hp_tilde_pair(a1, b1, b2, B1, report.z, rs)
    e1 = mp.gamma(mp.mpf(b1) + B1) / mp.gamma(b1)
    e2 = e1 * (mp.mpf(b1) + B1) / b1
    scale = (mp.gamma(a1) / mp.gamma(b2)) ** (mp.mpf(B1) / b1)
    return u ** e2 - (scale * v) ** e1


def _hp_wilker(report: InequalityReport, rs):
    e = report.params_echo
    a1, b2 = e.get("alpha1", 1.0), e.get("beta2", 1.0)
    b1, B1 = e["beta1"], e["B1"]
    u, v = _hp_tilde_pair(a1, b1, b2, B1, report.z, rs)
    power = (mp.gamma(b2) / mp.gamma(a1) * u) ** (mp.mpf(B1) / b1)
    return u / v + power - 2


def _hp_logconcave_f(params: FoxWrightParams, z, rs):
    t0 = mp.mpf(1)
    for a, _ in params.upper:
        t0 *= mp.gamma(a)
    for b, _ in params.lower:
        t0 /= mp.gamma(b)
    return _hp_value(params, z, rs) / t0


def _hp_logconcave_c(params: FoxWrightParams):
    b1, w1 = params.lower[0]
    c = mp.gamma(b1) / mp.gamma(mp.mpf(b1) + w1)
    for i, (a, _) in enumerate(params.upper):
        c *= mp.mpf(a) / params.lower[i + 1][0]
    return c


def _hp_logconcave_mid(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    z1, z2 = report.aux["z1"], report.aux["z2"]
    zm = (mp.mpf(z1) + z2) / 2
    return (_hp_logconcave_f(params, zm, rs)
            - mp.sqrt(_hp_logconcave_f(params, z1, rs)
                      * _hp_logconcave_f(params, z2, rs)))


def _hp_logconcave_exp(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    zm = (mp.mpf(report.aux["z1"]) + report.aux["z2"]) / 2
    return (mp.exp(_hp_logconcave_c(params) * zm)
            - _hp_logconcave_f(params, zm, rs))


def _hp_logconcave_deriv(report: InequalityReport, rs):
    params = FoxWrightParams.from_json(report.params_echo)
    zm = (mp.mpf(report.aux["z1"]) + report.aux["z2"]) / 2
    return (_hp_logconcave_c(params) * _hp_value(params, zm, rs)
            - _hp_value(params.shifted(), zm, rs))


_HP = {
    "turan-alpha": _hp_turan_alpha,
    "turan-beta": _hp_turan_beta,
    "corollary3-2f2": _hp_corollary3,
    "ratio-monotone": _hp_ratio,
    "tail-turan": _hp_tail_turan,
    "kn-bound": _hp_kn,
    "chi": _hp_chi,
    "lazarevic": _hp_lazarevic,
    "wilker": _hp_wilker,
    "wilker-wright": _hp_wilker,
    "logconcave:midpoint": _hp_logconcave_mid,
    "logconcave:expbound": _hp_logconcave_exp,
    "logconcave:deriv": _hp_logconcave_deriv,
}


def hp_margin(report: InequalityReport, digits: int = 30) -> float:
    """Recompute a report's margin with the independent oracle.

    Worst-comparison suites (ratio-monotone, kn-bound, chi) are recomputed
    at the comparison the report singled out, using the echoed grid
    neighbors.  Raises ParameterError for rows with no oracle recipe
    (exploratory probes, failure rows).
    """
    if report.status != "ok":
        raise ParameterError("cannot oracle-check a failure row")
    fn = _HP.get(report.suite_id)
    if fn is None:
        raise ParameterError(
            f"no oracle margin recipe for suite {report.suite_id!r}")
    digits = int(digits)
    with mp.workdps(digits + 10):
        return float(fn(report, mp.mpf(10) ** (-digits)))
