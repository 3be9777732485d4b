"""Named special functions of the family.

Generalized hypergeometric pFq, the 2n-parameter Mittag-Leffler function,
the Wright function (plain and normalized), and the normalized Bessel
function, all as thin reductions over the series engine; plus the Kummer
2F2 transform pair and the Mittag-Leffler derivative identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DivergentSeriesError,
    DomainError,
    ParameterError,
    SingularTransformError,
)
from .report import TOL_ABS, InequalityReport
from .series import (
    EvalConfig,
    EvalResult,
    FoxWrightParams,
    _DEFAULT_CFG,
    _LOG_DOUBLE_MAX,
    _exp_or_inf,
    derivative,
    evaluate,
    evaluate_normalized,
    evaluate_tilde,
)

__all__ = [
    "HypergeometricParams",
    "MittagLefflerParams",
    "pFq",
    "pfq_direct",
    "mittag_leffler",
    "wright",
    "bessel_norm",
    "kummer_2f2_pair",
    "ml_derivative_identity_check",
]


@dataclass(frozen=True)
class HypergeometricParams:
    """Plain pFq parameters: all entries positive, weights implicitly 1."""

    upper: tuple[float, ...] = ()
    lower: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        up = tuple(float(a) for a in self.upper)
        low = tuple(float(b) for b in self.lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", low)
        for v in up + low:
            if not (v > 0.0 and math.isfinite(v)):
                raise ParameterError(f"pFq parameters must be positive, got {v}")


@dataclass(frozen=True)
class MittagLefflerParams:
    """(B_j, beta_j) pairs of the 2n-parameter Mittag-Leffler function.

    All beta_j > 0, all B_j >= 0, and at least one B_j nonzero (otherwise
    every term repeats the same gamma product and the series diverges).
    """

    pairs: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        pairs = tuple((float(w), float(b)) for w, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ParameterError("need at least one (B, beta) pair")
        for w, b in pairs:
            if not (b > 0.0 and math.isfinite(b)):
                raise ParameterError(f"beta must be positive, got {b}")
            if not (w >= 0.0 and math.isfinite(w)):
                raise ParameterError(f"B must be >= 0, got {w}")
        if not any(w > 0.0 for w, _ in pairs):
            raise ParameterError("at least one B_j must be nonzero")

    def as_foxwright(self) -> FoxWrightParams:
        return FoxWrightParams(
            upper=((1.0, 1.0),),
            lower=tuple((b, w) for w, b in self.pairs),
        )


def pfq_direct(upper: tuple[float, ...], lower: tuple[float, ...], z: float,
               cfg: EvalConfig = _DEFAULT_CFG) -> EvalResult:
    """Direct pFq summation via the Pochhammer term recurrence.

    Unlike the Fox-Wright route this accepts arbitrary real upper
    parameters (negative values make the series terminate or alternate),
    which the transformed 2F2 family requires.  Lower parameters must be
    positive.  Convergence gate: p <= q, or p = q + 1 with |z| < 1.
    """
    upper = tuple(float(a) for a in upper)
    lower = tuple(float(b) for b in lower)
    p, q = len(upper), len(lower)
    for b in lower:
        if not (b > 0.0 and math.isfinite(b)):
            raise ParameterError(f"pFq lower parameters must be positive, got {b}")
    if p > q + 1:
        raise DivergentSeriesError(f"pFq with p={p} > q+1={q + 1} diverges")
    if p == q + 1 and abs(z) >= 1.0:
        raise DivergentSeriesError(
            f"pFq with p = q+1 needs |z| < 1, got z={z!r}")

    term = 1.0
    total = 0.0
    comp = 0.0
    total_abs = 0.0
    ratio = math.inf
    streak = 0
    k = 0
    for k in range(cfg.max_terms):
        x = term
        s = total + x
        if abs(total) >= abs(x):
            comp += (total - s) + x
        else:
            comp += (x - s) + total
        total = s
        total_abs += abs(x)

        num = 1.0
        for a in upper:
            num *= a + k
        den = float(k + 1)
        for b in lower:
            den *= b + k
        nxt = term * (num / den) * z
        if math.isinf(nxt) or math.isnan(nxt):
            raise OverflowError(
                f"pFq term at k={k + 1} left the double range (z={z!r})")
        ratio = abs(nxt / term) if term != 0.0 else 0.0
        term = nxt

        partial = abs(total + comp)
        if k > 0 and abs(term) <= cfg.rel_tol * partial:
            streak += 1
        else:
            streak = 0
        if streak >= 3 and ratio < 1.0:
            break
    else:
        raise DivergentSeriesError(
            f"pFq stop rule did not fire within {cfg.max_terms} terms (z={z!r})")

    # for p = q+1 the term ratio tends to |z| from below/above; take the
    # more conservative of the last observed ratio and |z|
    r_eff = max(ratio, abs(z)) if p == q + 1 else ratio
    tail = abs(term) * r_eff / (1.0 - r_eff) if r_eff < 1.0 else abs(term)
    grand = total + comp
    if grand == 0.0:
        cond = 1.0 if total_abs == 0.0 else math.inf
        return EvalResult(0.0, k + 1, tail, cond, -math.inf, 0)
    return EvalResult(grand, k + 1, tail, total_abs / abs(grand),
                      math.log(abs(grand)), 1 if grand > 0.0 else -1)


def pFq(hp: HypergeometricParams, z: float,
        cfg: EvalConfig = _DEFAULT_CFG) -> EvalResult:
    """Generalized hypergeometric series sum_k [prod (a)_k / prod (b)_k] z^k/k!.

    For p <= q this routes through the Fox-Wright engine with all weights 1
    (the ratio of the two definitions is prod Gamma(b) / prod Gamma(a), i.e.
    the normalized evaluation); the boundary case p = q + 1 converges only
    for |z| < 1 and is summed directly.
    """
    p, q = len(hp.upper), len(hp.lower)
    if p > q + 1:
        raise DivergentSeriesError(f"pFq with p={p} > q+1={q + 1} diverges")
    if p == q + 1:
        return pfq_direct(hp.upper, hp.lower, z, cfg)
    params = FoxWrightParams(
        upper=tuple((a, 1.0) for a in hp.upper),
        lower=tuple((b, 1.0) for b in hp.lower),
    )
    return evaluate_normalized(params, z, cfg)


def mittag_leffler(mlp: MittagLefflerParams, z: float,
                   cfg: EvalConfig = _DEFAULT_CFG) -> EvalResult:
    """2n-parameter Mittag-Leffler sum_k z^k / prod_j Gamma(beta_j + k*B_j)."""
    return evaluate(mlp.as_foxwright(), z, cfg)


def wright(B1: float, beta1: float, z: float, normalized: bool = False,
           cfg: EvalConfig = _DEFAULT_CFG) -> EvalResult:
    """Wright function sum_k z^k / (k! Gamma(beta1 + k*B1)).

    With ``normalized`` the result is scaled by Gamma(beta1) so it equals 1
    at z = 0.
    """
    params = FoxWrightParams(upper=(), lower=((beta1, B1),))
    if normalized:
        return evaluate_tilde(params, z, cfg)
    return evaluate(params, z, cfg)


def bessel_norm(nu: float, z: float, cfg: EvalConfig = _DEFAULT_CFG) -> EvalResult:
    """Normalized Bessel function Gamma(nu+1) sum_k (z^2/4)^k / (k! Gamma(nu+1+k)).

    Reduces to cosh z at nu = -1/2 and sinh(z)/z at nu = 1/2; equals 1 at
    z = 0 for every nu.
    """
    if not nu > -1.0:
        raise DomainError(f"normalized Bessel needs nu > -1, got {nu}")
    return wright(1.0, nu + 1.0, z * z / 4.0, normalized=True, cfg=cfg)


def _scale_result(res: EvalResult, log_factor: float,
                  log_mode: bool) -> EvalResult:
    """Multiply an evaluation by exp(log_factor), staying in log space."""
    if res.sign == 0:
        return res
    log_mag = res.log_magnitude + log_factor
    if log_mag > _LOG_DOUBLE_MAX and not log_mode:
        raise OverflowError(
            f"scaled value has log-magnitude {log_mag:.6g}, beyond double range")
    return EvalResult(
        value=res.sign * _exp_or_inf(log_mag),
        terms_used=res.terms_used,
        tail_bound=res.tail_bound * _exp_or_inf(log_factor),
        condition_estimate=res.condition_estimate,
        log_magnitude=log_mag,
        sign=res.sign,
    )


def kummer_2f2_pair(a: float, b: float, c: float, z: float,
                    cfg: EvalConfig = _DEFAULT_CFG) -> tuple[EvalResult, EvalResult]:
    """The 2F2 transform pair: both components evaluate the same function.

    Returns (2F2(a, c+1; b, c; z),  e^z * 2F2(b-a-1, f1+1; b, f1; -z)) with
    f1 = c(1 + a - b)/(a - c).  The two must agree wherever the transform
    is defined; disagreement signals an engine bug, which is what the tests
    use it for.
    """
    if a == c:
        raise SingularTransformError(
            "transform pivot a - c vanishes; the pair is undefined at a = c")
    if not (b > 0.0 and c > 0.0):
        raise ParameterError(f"lower parameters must be positive, got b={b}, c={c}")
    f1 = c * (1.0 + a - b) / (a - c)
    if not f1 > 0.0:
        raise ParameterError(
            f"transformed lower parameter f1 = c(1+a-b)/(a-c) = {f1:.6g} "
            "must be positive")
    lhs = pfq_direct((a, c + 1.0), (b, c), z, cfg)
    rhs = pfq_direct((b - a - 1.0, f1 + 1.0), (b, f1), -z, cfg)
    return lhs, _scale_result(rhs, z, cfg.log_mode)


def ml_derivative_identity_check(B: float, beta: float, z: float,
                                 cfg: EvalConfig = _DEFAULT_CFG,
                                 tol_rel: float = 1e-10) -> InequalityReport:
    """Check d/dz E_{B,beta}(z) = (E_{B,beta-1}(z) - (beta-1) E_{B,beta}(z)) / (B z).

    The left side goes through the parameter-shift derivative, the right
    side re-expresses it through the contiguous function, so the two sides
    exercise different code paths.
    """
    if not beta > 1.0:
        raise DomainError(f"identity needs beta > 1, got {beta}")
    if z == 0.0:
        raise DomainError("identity divides by z; z = 0 rejected")
    if not B > 0.0:
        raise ParameterError(f"identity needs B > 0, got {B}")
    params = FoxWrightParams(upper=((1.0, 1.0),), lower=((beta, B),))
    lhs_res = derivative(params, z, cfg)
    e_here = evaluate(params, z, cfg)
    e_down = evaluate(params.with_lower_value(0, beta - 1.0), z, cfg)
    rhs = (e_down.value - (beta - 1.0) * e_here.value) / (B * z)
    lhs = lhs_res.value
    dev = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    tol = TOL_ABS + tol_rel * scale
    return InequalityReport(
        suite_id="ml-derivative-identity",
        params_echo={"B": B, "beta": beta},
        z=z,
        lhs=lhs,
        rhs=rhs,
        margin=tol - dev,
        passed=dev <= tol,
        err_estimate=lhs_res.tail_bound + (e_down.tail_bound
                                           + abs(beta - 1.0) * e_here.tail_bound)
        / abs(B * z),
    )
