"""Checkers for the functional inequalities of the Fox-Wright family.

Each checker evaluates both sides of one inequality at concrete parameters
and returns an InequalityReport carrying the margin (lhs - rhs, oriented so
nonnegative means the inequality holds), an error estimate for the computed
margin, and enough echo data to reproduce the comparison.  Products and
powers are formed in log space so an overflowing side yields an honest
+-inf margin instead of an exception.
"""

from __future__ import annotations

import math
from dataclasses import replace
from typing import Sequence

from .errors import (
    DomainError,
    GridError,
    ParameterError,
    SingularTransformError,
)
from .functions import HypergeometricParams, bessel_norm, pFq, pfq_direct
from .gammakit import digamma, gamma_ratio, log_gamma
from .report import (
    STATUS_NUMERICAL_FAILURE,
    TOL_ABS,
    TOL_REL,
    InequalityReport,
    margin_passes,
)
from .series import (
    _DEFAULT_CFG,
    _exp_or_inf,
    EvalConfig,
    EvalResult,
    FoxWrightParams,
    TailSpec,
    evaluate,
    evaluate_normalized,
    evaluate_tail,
    evaluate_tilde,
    log_term,
)

__all__ = [
    "turan_alpha_check",
    "turan_beta_check",
    "corollary3_2f2_check",
    "ratio_monotonicity_check",
    "tail_turan_check",
    "kn_ratio",
    "kn_value_and_bound",
    "chi_check",
    "lazarevic_check",
    "lazarevic_bessel_check",
    "wilker_check",
    "wilker_bessel_check",
    "wilker_wright_check",
    "logconcavity_check",
    "xi_prime",
]

# relative rounding error charged per unit of condition number
_ROUND_REL = 1e-14

_CONDITION_LIMIT = 1e6


def _log_cfg(cfg: EvalConfig) -> EvalConfig:
    return cfg if cfg.log_mode else replace(cfg, log_mode=True)


def _diff_of_exp(la: float, lb: float) -> float:
    """exp(la) - exp(lb) with inf - inf resolved by comparing the logs."""
    m = _exp_or_inf(la) - _exp_or_inf(lb)
    if math.isnan(m):
        if la > lb:
            return math.inf
        if la < lb:
            return -math.inf
        return 0.0
    return m


def _abs_err(res: EvalResult) -> float:
    """Absolute error estimate: truncation tail plus condition-scaled rounding."""
    mag = _exp_or_inf(res.log_magnitude) if res.sign != 0 else 0.0
    return res.tail_bound + _ROUND_REL * res.condition_estimate * mag


def _rel_err(res: EvalResult) -> float:
    if res.sign == 0:
        return math.inf if res.tail_bound > 0.0 else 0.0
    mag = _exp_or_inf(res.log_magnitude)
    if math.isinf(mag):
        return _ROUND_REL * res.condition_estimate
    return _abs_err(res) / mag


def _product_err(x: EvalResult, y: EvalResult) -> float:
    """Error of value(x) * value(y) by the usual first-order rule."""
    mx = _exp_or_inf(x.log_magnitude) if x.sign != 0 else 0.0
    my = _exp_or_inf(y.log_magnitude) if y.sign != 0 else 0.0
    err = mx * _abs_err(y) + my * _abs_err(x)
    return 0.0 if math.isnan(err) else err


def _check_grid(values: Sequence[float], what: str, minimum: int = 2) -> None:
    if len(values) < minimum:
        raise GridError(f"{what} needs at least {minimum} points, got {len(values)}")
    for a, b in zip(values, values[1:]):
        if not b > a:
            raise GridError(f"{what} must be strictly increasing, got {a!r} >= {b!r}")
    for v in values:
        if not math.isfinite(v):
            raise GridError(f"{what} contains a non-finite value {v!r}")


def _worst_comparison(comparisons: list[dict]) -> dict:
    def key(c: dict) -> float:
        m = c["margin"]
        return -math.inf if math.isnan(m) else m

    return min(comparisons, key=key)


# ---------------------------------------------------------------------------
# Turan inequalities in the parameters


def turan_alpha_check(params: FoxWrightParams, z: float,
                      cfg: EvalConfig = _DEFAULT_CFG,
                      tol_abs: float = TOL_ABS,
                      tol_rel: float = TOL_REL) -> InequalityReport:
    """Turan inequality in the first upper parameter.

    margin = Psi[a1] * Psi[a1+2] - Psi[a1+1]^2 >= 0 at fixed z >= 0, where
    Psi[v] denotes the series with the first upper value replaced by v.
    When every weight equals 1 the same margin is recomputed in normalized
    pFq form and echoed in aux.
    """
    if not params.upper:
        raise ParameterError("needs at least one upper parameter pair")
    if z < 0.0:
        raise DomainError(f"defined for z >= 0, got z={z!r}")
    cfg = _log_cfg(cfg)
    a1 = params.upper[0][0]
    r0 = evaluate(params, z, cfg)
    r1 = evaluate(params.with_upper_value(0, a1 + 1.0), z, cfg)
    r2 = evaluate(params.with_upper_value(0, a1 + 2.0), z, cfg)
    la = r0.log_magnitude + r2.log_magnitude
    lb = 2.0 * r1.log_magnitude
    margin = _diff_of_exp(la, lb)
    lhs, rhs = _exp_or_inf(la), _exp_or_inf(lb)
    m1 = _exp_or_inf(r1.log_magnitude)
    err = _product_err(r0, r2) + 2.0 * m1 * _abs_err(r1)

    aux = None
    all_unit = all(w == 1.0 for _, w in params.upper + params.lower)
    if all_unit and len(params.upper) <= len(params.lower):
        hyper = [
            pFq(HypergeometricParams(
                (v,) + tuple(a for a, _ in params.upper[1:]),
                tuple(b for b, _ in params.lower)), z, cfg)
            for v in (a1, a1 + 1.0, a1 + 2.0)
        ]
        aux = {"pfq_margin": hyper[0].value * hyper[2].value
               - a1 / (a1 + 1.0) * hyper[1].value ** 2}

    return InequalityReport(
        suite_id="turan-alpha",
        params_echo=params.to_json(),
        z=float(z),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=margin_passes(margin, lhs, rhs, tol_abs, tol_rel),
        err_estimate=err,
        aux=aux,
    )


def turan_beta_check(params: FoxWrightParams, z: float,
                     cfg: EvalConfig = _DEFAULT_CFG,
                     tol_abs: float = TOL_ABS,
                     tol_rel: float = TOL_REL) -> InequalityReport:
    """Turan inequality in the first lower parameter.

    margin = Psi[b1] * Psi[b1+2] - b1/(b1+1) * Psi[b1+1]^2 >= 0 at z >= 0,
    with equality at z = 0.
    """
    if not params.lower:
        raise ParameterError("needs at least one lower parameter pair")
    if z < 0.0:
        raise DomainError(f"defined for z >= 0, got z={z!r}")
    cfg = _log_cfg(cfg)
    b1 = params.lower[0][0]
    r0 = evaluate(params, z, cfg)
    r1 = evaluate(params.with_lower_value(0, b1 + 1.0), z, cfg)
    r2 = evaluate(params.with_lower_value(0, b1 + 2.0), z, cfg)
    la = r0.log_magnitude + r2.log_magnitude
    lb = math.log(b1 / (b1 + 1.0)) + 2.0 * r1.log_magnitude
    margin = _diff_of_exp(la, lb)
    lhs, rhs = _exp_or_inf(la), _exp_or_inf(lb)
    m1 = _exp_or_inf(r1.log_magnitude)
    err = _product_err(r0, r2) + 2.0 * (b1 / (b1 + 1.0)) * m1 * _abs_err(r1)
    return InequalityReport(
        suite_id="turan-beta",
        params_echo=params.to_json(),
        z=float(z),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=margin_passes(margin, lhs, rhs, tol_abs, tol_rel),
        err_estimate=err,
    )


# ---------------------------------------------------------------------------
# Transformed 2F2 Turan product at negative argument


def corollary3_2f2_check(alpha1: float, beta1: float, beta2: float, z: float,
                         cfg: EvalConfig = _DEFAULT_CFG,
                         tol_abs: float = TOL_ABS,
                         tol_rel: float = TOL_REL) -> InequalityReport:
    """Turan-type product inequality for the transformed 2F2 family at z < 0.

    With f = b2(1+a1-b1)/(a1-b2), g = b2(a1-b1-1)/(a1-b2), and
    h = b2(a1-b1)/(a1-b2), all required positive:

        F(b1-a1-1, f+1; b1, f; z) * F(b1-a1+1, g+1; b1+2, g; z)
            >= F(b1-a1, h+1; b1+1, h; z)^2.

    The alternating sums lose accuracy as |z| grows; when the worst
    condition estimate exceeds 1e6 the report is marked numerical-failure
    instead of pass/fail.
    """
    if not (beta1 > 0.0 and beta2 > 0.0):
        raise ParameterError(
            f"beta1 and beta2 must be positive, got {beta1!r}, {beta2!r}")
    if alpha1 == beta2:
        raise SingularTransformError(
            "transform pivot alpha1 - beta2 vanishes; parameters undefined")
    if not z < 0.0:
        raise DomainError(f"defined for z < 0, got z={z!r}")
    piv = alpha1 - beta2
    f = beta2 * (1.0 + alpha1 - beta1) / piv
    g = beta2 * (alpha1 - beta1 - 1.0) / piv
    h = beta2 * (alpha1 - beta1) / piv
    bad = [(n, v) for n, v in (("f", f), ("g", g), ("h", h)) if not v > 0.0]
    if bad:
        raise ParameterError(
            "derived lower parameters must be positive: "
            + ", ".join(f"{n} = {v:.6g}" for n, v in bad))
    F1 = pfq_direct((beta1 - alpha1 - 1.0, f + 1.0), (beta1, f), z, cfg)
    F2 = pfq_direct((beta1 - alpha1 + 1.0, g + 1.0), (beta1 + 2.0, g), z, cfg)
    F3 = pfq_direct((beta1 - alpha1, h + 1.0), (beta1 + 1.0, h), z, cfg)
    cond = max(F1.condition_estimate, F2.condition_estimate,
               F3.condition_estimate)
    lhs = F1.value * F2.value
    rhs = F3.value ** 2
    margin = lhs - rhs
    err = _product_err(F1, F2) + 2.0 * abs(F3.value) * _abs_err(F3)
    report = InequalityReport(
        suite_id="corollary3-2f2",
        params_echo={"alpha1": alpha1, "beta1": beta1, "beta2": beta2},
        z=float(z),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=False,
        err_estimate=err,
        aux={"f": f, "g": g, "h": h, "condition": cond},
    )
    if cond > _CONDITION_LIMIT:
        report.status = STATUS_NUMERICAL_FAILURE
        return report
    report.passed = margin_passes(margin, lhs, rhs, tol_abs, tol_rel)
    return report


# ---------------------------------------------------------------------------
# Ratio monotonicity in z between two parameter values


def ratio_monotonicity_check(params: FoxWrightParams, slot: str,
                             v1: float, v2: float,
                             z_grid: Sequence[float],
                             cfg: EvalConfig = _DEFAULT_CFG,
                             tol_abs: float = TOL_ABS,
                             tol_rel: float = TOL_REL) -> InequalityReport:
    """Monotone decay of the ratio between two members of the family.

    ``slot`` picks which first parameter value varies: "beta" compares
    R(z) = Psi[v_big] / Psi[v_small] (nonincreasing in z), "alpha" compares
    R(z) = Psi[v_small] / Psi[v_big].  Both the discrete steps along the
    grid and the derivative cross-product at every grid point are checked;
    the report carries the worst comparison.
    """
    if slot not in ("alpha", "beta"):
        raise ParameterError(f"slot must be 'alpha' or 'beta', got {slot!r}")
    if v1 == v2:
        raise ParameterError("the two parameter values must differ")
    if slot == "alpha" and not params.upper:
        raise ParameterError("slot 'alpha' needs at least one upper pair")
    if slot == "beta" and not params.lower:
        raise ParameterError("slot 'beta' needs at least one lower pair")
    _check_grid(z_grid, "z grid")
    if z_grid[0] < 0.0:
        raise DomainError(f"defined for z >= 0, got z={z_grid[0]!r}")

    vs, vb = sorted((v1, v2))
    if slot == "beta":
        p_small = params.with_lower_value(0, vs)
        p_big = params.with_lower_value(0, vb)
    else:
        p_small = params.with_upper_value(0, vs)
        p_big = params.with_upper_value(0, vb)

    cfg = _log_cfg(cfg)
    es = [evaluate(p_small, z, cfg) for z in z_grid]
    eb = [evaluate(p_big, z, cfg) for z in z_grid]
    ds = [evaluate(p_small.shifted(), z, cfg) for z in z_grid]
    db = [evaluate(p_big.shifted(), z, cfg) for z in z_grid]

    if slot == "beta":
        lr = [b.log_magnitude - s.log_magnitude for s, b in zip(es, eb)]
    else:
        lr = [s.log_magnitude - b.log_magnitude for s, b in zip(es, eb)]
    ratios = [_exp_or_inf(v) for v in lr]
    rel = [_rel_err(s) + _rel_err(b) for s, b in zip(es, eb)]

    comparisons = []
    for i in range(len(z_grid) - 1):
        comparisons.append({
            "kind": "ratio-step",
            "z": float(z_grid[i + 1]),
            "z_prev": float(z_grid[i]),
            "lhs": ratios[i],
            "rhs": ratios[i + 1],
            "margin": _diff_of_exp(lr[i], lr[i + 1]),
            "err": ratios[i] * rel[i] + ratios[i + 1] * rel[i + 1],
        })
    for i, z in enumerate(z_grid):
        if slot == "beta":
            la = ds[i].log_magnitude + eb[i].log_magnitude
            lb = db[i].log_magnitude + es[i].log_magnitude
            ea = _product_err(ds[i], eb[i])
            ebr = _product_err(db[i], es[i])
        else:
            la = db[i].log_magnitude + es[i].log_magnitude
            lb = ds[i].log_magnitude + eb[i].log_magnitude
            ea = _product_err(db[i], es[i])
            ebr = _product_err(ds[i], eb[i])
        comparisons.append({
            "kind": "cross",
            "z": float(z),
            "lhs": _exp_or_inf(la),
            "rhs": _exp_or_inf(lb),
            "margin": _diff_of_exp(la, lb),
            "err": ea + ebr,
        })

    passed = all(
        margin_passes(c["margin"], c["lhs"], c["rhs"], tol_abs, tol_rel)
        for c in comparisons)
    worst = _worst_comparison(comparisons)
    return InequalityReport(
        suite_id="ratio-monotone",
        params_echo={**params.to_json(), "slot": slot,
                     "v_small": vs, "v_big": vb},
        z=worst["z"],
        lhs=worst["lhs"],
        rhs=worst["rhs"],
        margin=worst["margin"],
        passed=passed,
        err_estimate=worst["err"],
        aux={"worst_kind": worst["kind"], "worst_z_prev": worst.get("z_prev"),
             "ratio_first": ratios[0], "ratio_last": ratios[-1],
             "n_comparisons": len(comparisons)},
    )


# ---------------------------------------------------------------------------
# Tail Turan and the K_n lower bound


def _require_constant_upper(params: FoxWrightParams, what: str) -> None:
    if any(w != 0.0 for _, w in params.upper):
        raise ParameterError(
            f"{what} requires every upper weight to be 0 "
            "(constant gamma factors); got "
            + repr([w for _, w in params.upper]))


def tail_turan_check(params: FoxWrightParams, n: int, z: float,
                     cfg: EvalConfig = _DEFAULT_CFG,
                     tol_abs: float = TOL_ABS,
                     tol_rel: float = TOL_REL) -> InequalityReport:
    """Turan inequality for series tails: T_{n+1}^2 >= T_n * T_{n+2}.

    T_m is the tail summed from index m+1 on.  Only shapes whose upper
    weights are all zero are in scope.
    """
    _require_constant_upper(params, "tail Turan")
    if n < 0:
        raise ParameterError(f"tail index must be >= 0, got {n}")
    if not z > 0.0:
        raise DomainError(f"defined for z > 0, got z={z!r}")
    cfg = _log_cfg(cfg)
    t1 = evaluate_tail(params, TailSpec(n + 1), z, cfg)
    l1 = t1.log_magnitude
    # T_n = T_{n+1} + t_{n+1} and T_{n+2} = T_{n+1} - t_{n+2}, so the
    # squared-minus-product margin collapses to
    #     T_{n+1} t_{n+2} - T_{n+1} t_{n+1} + t_{n+1} t_{n+2},
    # which never cancels the dominant T^2 scale.
    lt1 = log_term(params, z, n + 1)
    lt2 = log_term(params, z, n + 2)
    ea = _exp_or_inf(l1 + lt2)
    eb = _exp_or_inf(l1 + lt1)
    ec = _exp_or_inf(lt1 + lt2)
    margin = (ea + ec) - eb
    if math.isnan(margin):
        margin = math.inf if max(l1 + lt2, lt1 + lt2) >= l1 + lt1 else -math.inf
    err = (ea + eb) * (_rel_err(t1) + 2e-15) + ec * 3e-15
    lhs = _exp_or_inf(2.0 * l1)
    rhs = lhs - margin
    if math.isnan(rhs):
        rhs = lhs
    return InequalityReport(
        suite_id="tail-turan",
        params_echo={**params.to_json(), "n": n},
        z=float(z),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=margin_passes(margin, lhs, rhs, tol_abs, tol_rel),
        err_estimate=err,
    )


def _kn_with_err(params: FoxWrightParams, n: int, z: float,
                 cfg: EvalConfig) -> tuple[float, float]:
    # K_n = (T_n / T_{n+1}) (T_{n+2} / T_{n+1}) = (1 + a)(1 - b) with
    # a = t_{n+1}/T_{n+1} and b = t_{n+2}/T_{n+1}.  For b near 1 the
    # complement 1 - b is formed from a direct T_{n+2} evaluation instead.
    t1 = evaluate_tail(params, TailSpec(n + 1), z, cfg)
    l1 = t1.log_magnitude
    a = _exp_or_inf(log_term(params, z, n + 1) - l1)
    b = _exp_or_inf(log_term(params, z, n + 2) - l1)
    rel = 2.0 * _rel_err(t1) + 2e-14
    if b > 0.5:
        t2 = evaluate_tail(params, TailSpec(n + 2), z, cfg)
        factor = _exp_or_inf(t2.log_magnitude - l1)
        rel += _rel_err(t2)
    else:
        factor = 1.0 - b
        rel += 2.0 * b * (_rel_err(t1) + 1e-15)
    k = (1.0 + a) * factor
    return k, k * rel


def kn_ratio(params: FoxWrightParams, n: int, z: float,
             cfg: EvalConfig = _DEFAULT_CFG) -> float:
    """Tail ratio K_n = T_n * T_{n+2} / T_{n+1}^2 without any shape gate.

    Exploratory helper: unlike kn_value_and_bound it accepts nonzero upper
    weights, where no proven bound is available.
    """
    if n < 0:
        raise ParameterError(f"tail index must be >= 0, got {n}")
    if not z > 0.0:
        raise DomainError(f"defined for z > 0, got z={z!r}")
    k, _ = _kn_with_err(params, n, z, _log_cfg(cfg))
    return k


def kn_value_and_bound(params: FoxWrightParams, n: int,
                       z: float | None = None,
                       z_grid: Sequence[float] | None = None,
                       cfg: EvalConfig = _DEFAULT_CFG,
                       tol_abs: float = TOL_ABS,
                       tol_rel: float = TOL_REL) -> InequalityReport:
    """Lower bound and monotonicity of the tail ratio K_n.

    K_n(z) = T_n T_{n+2} / T_{n+1}^2 is nondecreasing in z > 0 and bounded
    below by its z -> 0 limit

        C = (n+2)/(n+3) * prod_j G(b_j+(n+2)B_j)^2
                          / (G(b_j+(n+1)B_j) G(b_j+(n+3)B_j)).

    Pass a single z to check K_n(z) >= C, or a strictly increasing z_grid
    to additionally check the steps; exactly one of the two.
    """
    _require_constant_upper(params, "the K_n bound")
    if n < 0:
        raise ParameterError(f"tail index must be >= 0, got {n}")
    if (z is None) == (z_grid is None):
        raise ParameterError("pass exactly one of z or z_grid")
    cfg = _log_cfg(cfg)

    log_c = math.log((n + 2.0) / (n + 3.0))
    for b, w in params.lower:
        log_c += (2.0 * log_gamma(b + (n + 2) * w)
                  - log_gamma(b + (n + 1) * w)
                  - log_gamma(b + (n + 3) * w))
    c_bound = math.exp(log_c)

    zs = [float(z)] if z_grid is None else [float(v) for v in z_grid]
    if z_grid is not None:
        _check_grid(zs, "z grid")
    for v in zs:
        if not v > 0.0:
            raise DomainError(f"defined for z > 0, got z={v!r}")

    kvals, kerrs = [], []
    for v in zs:
        k, e = _kn_with_err(params, n, v, cfg)
        kvals.append(k)
        kerrs.append(e)

    comparisons = [{
        "kind": "bound",
        "z": v,
        "lhs": kvals[i],
        "rhs": c_bound,
        "margin": kvals[i] - c_bound,
        "err": kerrs[i] + _ROUND_REL * c_bound,
    } for i, v in enumerate(zs)]
    for i in range(len(zs) - 1):
        comparisons.append({
            "kind": "step",
            "z": zs[i + 1],
            "z_prev": zs[i],
            "lhs": kvals[i + 1],
            "rhs": kvals[i],
            "margin": kvals[i + 1] - kvals[i],
            "err": kerrs[i] + kerrs[i + 1],
        })

    passed = all(
        margin_passes(c["margin"], c["lhs"], c["rhs"], tol_abs, tol_rel)
        for c in comparisons)
    worst = _worst_comparison(comparisons)
    aux = {"bound": c_bound, "worst_kind": worst["kind"],
           "worst_z_prev": worst.get("z_prev")}
    if z_grid is not None:
        aux["k_values"] = kvals
    return InequalityReport(
        suite_id="kn-bound",
        params_echo={**params.to_json(), "n": n},
        z=worst["z"],
        lhs=worst["lhs"],
        rhs=worst["rhs"],
        margin=worst["margin"],
        passed=passed,
        err_estimate=worst["err"],
        aux=aux,
    )


# ---------------------------------------------------------------------------
# The chi ratio: monotonicity in the first lower parameter


def _tilde_pair(alpha1: float, beta1: float, beta2: float, B1: float,
                z: float, cfg: EvalConfig) -> tuple[EvalResult, EvalResult]:
    """(numerator, denominator) evaluations of the chi ratio at beta1."""
    den = evaluate_tilde(FoxWrightParams(
        upper=((alpha1, 1.0),),
        lower=((beta1, B1), (beta2, 1.0))), z, cfg)
    num = evaluate_tilde(FoxWrightParams(
        upper=((alpha1 + 1.0, 1.0),),
        lower=((beta1 + B1, B1), (beta2 + 1.0, 1.0))), z, cfg)
    return num, den


def _omega(alpha1: float, beta1: float, beta2: float, B1: float,
           z: float, k_max: int) -> tuple[float, float]:
    """Positivity witness for the chi derivative in beta1.

    Every summand is nonnegative when alpha1 >= beta2 and B1 >= 0, so a
    nonnegative truncated sum certifies nothing by accident: a negative
    value can only come from an implementation bug.  Returns (value,
    truncation estimate from the last index block).
    """
    if B1 == 0.0 or alpha1 == beta2:
        return 0.0, 0.0
    c = beta1 + B1
    lnz = math.log(z)
    lg_a = [log_gamma(alpha1 + i) for i in range(k_max + 1)]
    lg_f = [0.0] * (k_max + 1)
    for i in range(2, k_max + 1):
        lg_f[i] = lg_f[i - 1] + math.log(i)
    lg_c = [log_gamma(c + i * B1) for i in range(k_max + 1)]
    lg_b = [log_gamma(beta2 + i) for i in range(k_max + 1)]
    psi_c = [digamma(c + i * B1) for i in range(k_max + 1)]

    total = 0.0
    last_block = 0.0
    for k in range(1, k_max + 1):
        block = 0.0
        for j in range(0, (k - 1) // 2 + 1):
            e = (lg_a[j] + lg_a[k - j] - lg_f[j] - lg_f[k - j]
                 - lg_c[j] - lg_c[k - j] - lg_b[j] - lg_b[k - j]
                 + k * lnz)
            block += (_exp_or_inf(e) * (k - 2 * j) * (alpha1 - beta2)
                      * (psi_c[k - j] - psi_c[j])
                      / ((beta2 + k - j) * (beta2 + j)))
        total += block
        last_block = block
    return total, last_block


def chi_check(alpha1: float, beta2: float, B1: float,
              beta1_grid: Sequence[float], z: float,
              cfg: EvalConfig = _DEFAULT_CFG,
              tol_abs: float = TOL_ABS,
              tol_rel: float = TOL_REL) -> InequalityReport:
    """Monotonicity of the chi ratio in beta1, with its series witness.

    chi(b1) is the ratio of the shifted to the unshifted normalized series;
    it must be nondecreasing along beta1_grid, and the double-series
    witness Omega(b1) for the sign of the derivative must be nonnegative
    at every grid point.  Requires alpha1 >= beta2 > 0 and z > 0.
    """
    if not (beta2 > 0.0 and alpha1 >= beta2):
        raise DomainError(
            f"needs alpha1 >= beta2 > 0, got alpha1={alpha1!r}, beta2={beta2!r}")
    if B1 < 0.0:
        raise ParameterError(f"B1 must be >= 0, got {B1!r}")
    if not z > 0.0:
        raise DomainError(f"defined for z > 0, got z={z!r}")
    _check_grid(beta1_grid, "beta1 grid")
    if not beta1_grid[0] > 0.0:
        raise GridError(f"beta1 grid must be positive, got {beta1_grid[0]!r}")

    cfg = _log_cfg(cfg)
    chi_vals, chi_rel, omega_vals, omega_errs = [], [], [], []
    for b1 in beta1_grid:
        num, den = _tilde_pair(alpha1, b1, beta2, B1, z, cfg)
        chi_vals.append(_exp_or_inf(num.log_magnitude - den.log_magnitude))
        chi_rel.append(_rel_err(num) + _rel_err(den))
        om, om_err = _omega(alpha1, b1, beta2, B1, z, den.terms_used + 10)
        omega_vals.append(om)
        omega_errs.append(om_err + _ROUND_REL * abs(om))

    comparisons = []
    for i in range(len(beta1_grid) - 1):
        comparisons.append({
            "kind": "chi-step",
            "where": float(beta1_grid[i + 1]),
            "where_prev": float(beta1_grid[i]),
            "lhs": chi_vals[i + 1],
            "rhs": chi_vals[i],
            "margin": chi_vals[i + 1] - chi_vals[i],
            "err": chi_vals[i] * chi_rel[i] + chi_vals[i + 1] * chi_rel[i + 1],
        })
    for i, b1 in enumerate(beta1_grid):
        comparisons.append({
            "kind": "omega",
            "where": float(b1),
            "lhs": omega_vals[i],
            "rhs": 0.0,
            "margin": omega_vals[i],
            "err": omega_errs[i],
        })

    passed = all(
        margin_passes(c["margin"], c["lhs"], c["rhs"], tol_abs, tol_rel)
        for c in comparisons)
    worst = _worst_comparison(comparisons)
    return InequalityReport(
        suite_id="chi",
        params_echo={"alpha1": alpha1, "beta2": beta2, "B1": B1,
                     "beta1_grid": [float(v) for v in beta1_grid]},
        z=float(z),
        lhs=worst["lhs"],
        rhs=worst["rhs"],
        margin=worst["margin"],
        passed=passed,
        err_estimate=worst["err"],
        aux={"worst_kind": worst["kind"], "worst_beta1": worst["where"],
             "worst_beta1_prev": worst.get("where_prev"),
             "chi_values": chi_vals, "omega_values": omega_vals},
    )


# ---------------------------------------------------------------------------
# Lazarevic and Wilker inequalities


def _check_powered_params(alpha1: float, beta1: float, beta2: float,
                          B1: float) -> None:
    if not (beta2 > 0.0 and alpha1 >= beta2):
        raise DomainError(
            f"needs alpha1 >= beta2 > 0, got alpha1={alpha1!r}, beta2={beta2!r}")
    if not beta1 > 0.0:
        raise ParameterError(f"beta1 must be positive, got {beta1!r}")
    if B1 < 0.0:
        raise ParameterError(f"B1 must be >= 0, got {B1!r}")


def _shifted_tilde_pair(alpha1: float, beta1: float, beta2: float, B1: float,
                        z: float, cfg: EvalConfig) -> tuple[EvalResult, EvalResult]:
    """Evaluations at first lower value beta1+1 (U) and beta1 (V)."""
    u = evaluate_tilde(FoxWrightParams(
        upper=((alpha1, 1.0),),
        lower=((beta1 + 1.0, B1), (beta2, 1.0))), z, cfg)
    v = evaluate_tilde(FoxWrightParams(
        upper=((alpha1, 1.0),),
        lower=((beta1, B1), (beta2, 1.0))), z, cfg)
    return u, v


def lazarevic_check(alpha1: float, beta1: float, beta2: float, B1: float,
                    z: float, cfg: EvalConfig = _DEFAULT_CFG,
                    tol_abs: float = TOL_ABS,
                    tol_rel: float = TOL_REL) -> InequalityReport:
    """Lazarevic-type power inequality, tight at z = 0.

    margin = U^{e2} - [(G(a1)/G(b2))^{B1/b1} V]^{e1} with U, V the
    normalized series at first lower value b1+1 and b1, e1 =
    G(b1+B1)/G(b1), e2 = e1 (b1+B1)/b1.  Requires a1 >= b2 > 0, z >= 0.
    """
    _check_powered_params(alpha1, beta1, beta2, B1)
    if z < 0.0:
        raise DomainError(f"defined for z >= 0, got z={z!r}")
    cfg = _log_cfg(cfg)
    u, v = _shifted_tilde_pair(alpha1, beta1, beta2, B1, z, cfg)
    e1 = gamma_ratio(beta1, B1)
    e2 = e1 * (beta1 + B1) / beta1
    lu = e2 * u.log_magnitude
    lv = e1 * ((B1 / beta1) * (log_gamma(alpha1) - log_gamma(beta2))
               + v.log_magnitude)
    margin = _diff_of_exp(lu, lv)
    lhs, rhs = _exp_or_inf(lu), _exp_or_inf(lv)
    err = lhs * e2 * _rel_err(u) + rhs * e1 * _rel_err(v)
    if math.isnan(err):
        err = math.inf
    return InequalityReport(
        suite_id="lazarevic",
        params_echo={"alpha1": alpha1, "beta1": beta1, "beta2": beta2,
                     "B1": B1},
        z=float(z),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=margin_passes(margin, lhs, rhs, tol_abs, tol_rel),
        err_estimate=err,
        aux={"e1": e1, "e2": e2},
    )


def lazarevic_bessel_check(nu: float, z: float,
                           cfg: EvalConfig = _DEFAULT_CFG,
                           tol_abs: float = TOL_ABS,
                           tol_rel: float = TOL_REL) -> InequalityReport:
    """Lazarevic inequality for the normalized Bessel function.

    margin = I[nu+1](z)^{(nu+2)/(nu+1)} - I[nu](z) >= 0, where I[v] is the
    normalized Bessel function (equal to 1 at z = 0).
    """
    cfg = _log_cfg(cfg)
    r1 = bessel_norm(nu + 1.0, z, cfg)
    r0 = bessel_norm(nu, z, cfg)
    e = (nu + 2.0) / (nu + 1.0)
    la = e * r1.log_magnitude
    margin = _diff_of_exp(la, r0.log_magnitude)
    lhs, rhs = _exp_or_inf(la), _exp_or_inf(r0.log_magnitude)
    err = lhs * e * _rel_err(r1) + _abs_err(r0)
    if math.isnan(err):
        err = math.inf
    return InequalityReport(
        suite_id="lazarevic-bessel",
        params_echo={"nu": nu},
        z=float(z),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=margin_passes(margin, lhs, rhs, tol_abs, tol_rel),
        err_estimate=err,
    )


def _wilker_core(alpha1: float, beta1: float, beta2: float, B1: float,
                 z: float, cfg: EvalConfig, tol_abs: float, tol_rel: float,
                 suite_id: str, params_echo: dict) -> InequalityReport:
    cfg = _log_cfg(cfg)
    u, v = _shifted_tilde_pair(alpha1, beta1, beta2, B1, z, cfg)
    t1 = _exp_or_inf(u.log_magnitude - v.log_magnitude)
    lt2 = (B1 / beta1) * (log_gamma(beta2) - log_gamma(alpha1)
                          + u.log_magnitude)
    t2 = _exp_or_inf(lt2)
    lhs = t1 + t2
    margin = lhs - 2.0
    err = t1 * (_rel_err(u) + _rel_err(v)) + t2 * (B1 / beta1) * _rel_err(u)
    if math.isnan(err):
        err = math.inf
    return InequalityReport(
        suite_id=suite_id,
        params_echo=params_echo,
        z=float(z),
        lhs=lhs,
        rhs=2.0,
        margin=margin,
        passed=margin_passes(margin, lhs, 2.0, tol_abs, tol_rel),
        err_estimate=err,
        aux={"ratio_term": t1, "power_term": t2},
    )


def wilker_check(alpha1: float, beta1: float, beta2: float, B1: float,
                 z: float, cfg: EvalConfig = _DEFAULT_CFG,
                 tol_abs: float = TOL_ABS,
                 tol_rel: float = TOL_REL) -> InequalityReport:
    """Wilker-type inequality, tight at z = 0.

    margin = U/V + [(G(b2)/G(a1)) U]^{B1/b1} - 2 >= 0 with U, V as in the
    Lazarevic checker.  Requires a1 >= b2 > 0, z >= 0.
    """
    _check_powered_params(alpha1, beta1, beta2, B1)
    if z < 0.0:
        raise DomainError(f"defined for z >= 0, got z={z!r}")
    return _wilker_core(alpha1, beta1, beta2, B1, z, cfg, tol_abs, tol_rel,
                        "wilker",
                        {"alpha1": alpha1, "beta1": beta1, "beta2": beta2,
                         "B1": B1})


def wilker_bessel_check(nu: float, z: float,
                        cfg: EvalConfig = _DEFAULT_CFG,
                        tol_abs: float = TOL_ABS,
                        tol_rel: float = TOL_REL) -> InequalityReport:
    """Wilker inequality for the normalized Bessel function.

    margin = I[nu+1]/I[nu] + I[nu+1]^{1/(nu+1)} - 2 >= 0.
    """
    cfg = _log_cfg(cfg)
    r1 = bessel_norm(nu + 1.0, z, cfg)
    r0 = bessel_norm(nu, z, cfg)
    t1 = _exp_or_inf(r1.log_magnitude - r0.log_magnitude)
    t2 = _exp_or_inf(r1.log_magnitude / (nu + 1.0))
    lhs = t1 + t2
    margin = lhs - 2.0
    err = (t1 * (_rel_err(r1) + _rel_err(r0))
           + t2 * _rel_err(r1) / (nu + 1.0))
    if math.isnan(err):
        err = math.inf
    return InequalityReport(
        suite_id="wilker-bessel",
        params_echo={"nu": nu},
        z=float(z),
        lhs=lhs,
        rhs=2.0,
        margin=margin,
        passed=margin_passes(margin, lhs, 2.0, tol_abs, tol_rel),
        err_estimate=err,
        aux={"ratio_term": t1, "power_term": t2},
    )


def wilker_wright_check(B1: float, beta1: float, z: float,
                        cfg: EvalConfig = _DEFAULT_CFG,
                        tol_abs: float = TOL_ABS,
                        tol_rel: float = TOL_REL) -> InequalityReport:
    """Wilker inequality specialized to the normalized Wright function.

    Setting the upper value equal to the second lower value cancels their
    gamma factors and the general form collapses to W[B1, b1].
    """
    if not beta1 > 0.0:
        raise ParameterError(f"beta1 must be positive, got {beta1!r}")
    if B1 < 0.0:
        raise ParameterError(f"B1 must be >= 0, got {B1!r}")
    if z < 0.0:
        raise DomainError(f"defined for z >= 0, got z={z!r}")
    return _wilker_core(1.0, beta1, 1.0, B1, z, cfg, tol_abs, tol_rel,
                        "wilker-wright", {"B1": B1, "beta1": beta1})


# ---------------------------------------------------------------------------
# Log-concavity in z


def logconcavity_check(params: FoxWrightParams, z1: float, z2: float,
                       cfg: EvalConfig = _DEFAULT_CFG,
                       tol_abs: float = TOL_ABS,
                       tol_rel: float = TOL_REL
                       ) -> tuple[InequalityReport, ...]:
    """Three log-concavity consequences for one (z1, z2) pair.

    Shape: one more lower pair than upper pairs, all upper weights 1, all
    lower weights after the first equal 1, and each upper value at least
    the matching later lower value.  With f the normalized series, zm the
    midpoint, and c = f'(0):

      midpoint:  f(zm) >= sqrt(f(z1) f(z2))
      expbound:  exp(c zm) >= f(zm)
      deriv:     c Psi(zm) >= Psi'(zm)   (unnormalized)
    """
    p, q = len(params.upper), len(params.lower)
    if q != p + 1 or p < 1:
        raise ParameterError(
            f"shape must have one more lower pair than upper pairs "
            f"(p >= 1), got p={p}, q={q}")
    for a, w in params.upper:
        if w != 1.0:
            raise ParameterError(f"upper weights must all be 1, got {w!r}")
    for b, w in params.lower[1:]:
        if w != 1.0:
            raise ParameterError(
                f"lower weights after the first must be 1, got {w!r}")
    for i, (a, _) in enumerate(params.upper):
        b = params.lower[i + 1][0]
        if a < b:
            raise DomainError(
                f"needs upper value {a!r} >= paired lower value {b!r}")
    if z1 < 0.0 or z2 < 0.0:
        raise DomainError(
            f"defined for z >= 0, got z1={z1!r}, z2={z2!r}")
    if z2 < z1:
        # the midpoint comparison is symmetric; equal points degenerate
        # to the equality case rather than an error
        z1, z2 = z2, z1

    cfg = _log_cfg(cfg)
    zm = 0.5 * (z1 + z2)
    f1 = evaluate_normalized(params, z1, cfg)
    f2 = evaluate_normalized(params, z2, cfg)
    fm = evaluate_normalized(params, zm, cfg)

    b1, w1 = params.lower[0]
    log_c = log_gamma(b1) - log_gamma(b1 + w1)
    for i, (a, _) in enumerate(params.upper):
        log_c += math.log(a / params.lower[i + 1][0])
    c = math.exp(log_c)
    echo = params.to_json()
    aux = {"z1": float(z1), "z2": float(z2), "c": c}

    def report(suite_id: str, la: float, lb: float, err: float) -> InequalityReport:
        margin = _diff_of_exp(la, lb)
        lhs, rhs = _exp_or_inf(la), _exp_or_inf(lb)
        return InequalityReport(
            suite_id=suite_id,
            params_echo=echo,
            z=zm,
            lhs=lhs,
            rhs=rhs,
            margin=margin,
            passed=margin_passes(margin, lhs, rhs, tol_abs, tol_rel),
            err_estimate=err,
            aux=aux,
        )

    geo = 0.5 * (f1.log_magnitude + f2.log_magnitude)
    mid = report("logconcave:midpoint", fm.log_magnitude, geo,
                 _abs_err(fm) + 0.5 * _exp_or_inf(geo)
                 * (_rel_err(f1) + _rel_err(f2)))

    exb = report("logconcave:expbound", c * zm, fm.log_magnitude,
                 _abs_err(fm) + _ROUND_REL * _exp_or_inf(c * zm))

    psi_m = evaluate(params, zm, cfg)
    dpsi_m = evaluate(params.shifted(), zm, cfg)
    der = report("logconcave:deriv", log_c + psi_m.log_magnitude,
                 dpsi_m.log_magnitude,
                 c * _abs_err(psi_m) + _abs_err(dpsi_m))
    return mid, exb, der


# ---------------------------------------------------------------------------
# Exploratory probe for the open chi-difference question


def xi_prime(params: FoxWrightParams, z: float,
             cfg: EvalConfig = _DEFAULT_CFG) -> float:
    """Derivative of the chi-difference functional in the first lower value.

    Computes (G(b1)/G(b1+B1)) * (chi(b1+1) - chi(b1)) for the general
    shape, where chi(v) is the ratio of the fully shifted normalized
    series to the unshifted one at first lower value v.  No sign is
    guaranteed outside the proven two-lower family; this is the probe the
    explore command samples.
    """
    if not params.lower:
        raise ParameterError("needs at least one lower parameter pair")
    if not z > 0.0:
        raise DomainError(f"defined for z > 0, got z={z!r}")
    cfg = _log_cfg(cfg)
    b1, w1 = params.lower[0]
    rest = params.lower[1:]
    up_shift = tuple((a + wa, wa) for a, wa in params.upper)
    rest_shift = tuple((b + wb, wb) for b, wb in rest)

    def chi_at(v: float) -> float:
        num = evaluate_tilde(FoxWrightParams(
            up_shift, ((v + w1, w1),) + rest_shift), z, cfg)
        den = evaluate_tilde(FoxWrightParams(
            params.upper, ((v, w1),) + rest), z, cfg)
        return _exp_or_inf(num.log_magnitude - den.log_magnitude)

    return math.exp(log_gamma(b1) - log_gamma(b1 + w1)) * (chi_at(b1 + 1.0)
                                                           - chi_at(b1))
