"""High-precision reference oracle.

Every series here is recomputed from scratch in mpmath arbitrary-precision
arithmetic: terms are direct gamma products, accumulation is plain mpf
addition (no running-scale or compensation tricks), and the stop rule is a
geometric tail estimate against the requested digit count.  Nothing is
shared with the double-precision engine, so agreement between the two is
meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath as mp

from .errors import (
    ConvergenceError,
    DivergentSeriesError,
    DomainError,
    LengthError,
    NoConvergenceError,
)
from .series import FoxWrightParams, epsilon

__all__ = [
    "hp_eval",
    "hp_pfq",
    "MonotoneVerdict",
    "seq_ratio_monotone",
    "series_ratio_monotone_check",
    "finite_difference",
]

_MAX_TERMS = 100_000


def _check_digits(digits: int) -> int:
    digits = int(digits)
    if not 30 <= digits <= 200:
        raise DomainError(f"digits must lie in [30, 200], got {digits}")
    return digits


def _hp_series(params: FoxWrightParams, z, rel_stop, start: int = 0):
    """Sum the raw series in the active mp context.

    Returns (value, tail_estimate, terms_used).  Terms are formed directly:
    prod Gamma(alpha + k A) / prod Gamma(beta + k B) * z^k / k!.
    """
    z = mp.mpf(z)
    total = mp.mpf(0)
    prev = None
    tail = mp.mpf(0)
    streak = 0
    terms = 0
    for k in range(start, start + _MAX_TERMS):
        t = mp.power(z, k) / mp.factorial(k)
        # arguments formed in mpf arithmetic: a + k*w rounded to a double
        # would shift the term log by psi(x) * ulp, ~1e-12 for late terms
        for a, wa in params.upper:
            t *= mp.gamma(mp.mpf(a) + k * mp.mpf(wa))
        for b, wb in params.lower:
            t /= mp.gamma(mp.mpf(b) + k * mp.mpf(wb))
        total += t
        terms += 1
        if prev is None:
            ratio = mp.inf
        elif prev == 0:
            ratio = mp.inf if t != 0 else mp.mpf(0)
        else:
            ratio = abs(t) / abs(prev)
        prev = t
        if ratio < 1:
            tail = abs(t) * ratio / (1 - ratio)
            if tail <= rel_stop * abs(total):
                streak += 1
            else:
                streak = 0
            if streak >= 3:
                return total, tail, terms
        else:
            streak = 0
    raise NoConvergenceError(
        f"oracle stop rule did not fire within {_MAX_TERMS} terms "
        f"(start={start}, z={mp.nstr(z, 8)})")


def hp_eval(params: FoxWrightParams, z, digits: int = 30,
            start: int = 0) -> tuple[str, str]:
    """Evaluate the series to ``digits`` significant digits.

    Returns decimal strings (value, tail_estimate); the extra working
    precision (digits + 10) keeps the printed digits trustworthy.  ``start``
    sums the tail from that index onward instead of the whole series.
    """
    digits = _check_digits(digits)
    if epsilon(params) <= 0.0:
        raise DivergentSeriesError(
            f"divergent series: epsilon = {epsilon(params):.6g} <= 0")
    with mp.workdps(digits + 10):
        value, tail, _ = _hp_series(params, z, mp.mpf(10) ** (-digits), start)
        return mp.nstr(value, digits), mp.nstr(tail, 10)


def _hp_pfq_mpf(upper: Sequence[float], lower: Sequence[float], z):
    """pFq by Pochhammer recurrence in the active mp context.

    Accepts arbitrary real upper parameters (terminating series included).
    Returns (value, tail_estimate, terms_used).
    """
    z = mp.mpf(z)
    rel_stop = mp.mpf(10) ** (-(mp.mp.dps - 10))
    term = mp.mpf(1)
    total = mp.mpf(0)
    streak = 0
    for k in range(_MAX_TERMS):
        total += term
        num = mp.mpf(1)
        for a in upper:
            num *= mp.mpf(a) + k
        den = mp.mpf(k + 1)
        for b in lower:
            den *= mp.mpf(b) + k
        nxt = term * num / den * z
        ratio = abs(nxt) / abs(term) if term != 0 else mp.mpf(0)
        term = nxt
        if ratio < 1:
            tail = abs(term) * ratio / (1 - ratio) if ratio > 0 else abs(term)
            if tail <= rel_stop * abs(total) or term == 0:
                streak += 1
            else:
                streak = 0
            if streak >= 3:
                return total, tail, k + 1
        else:
            streak = 0
    raise NoConvergenceError(
        f"oracle pFq stop rule did not fire within {_MAX_TERMS} terms "
        f"(z={mp.nstr(z, 8)})")


def hp_pfq(upper: Sequence[float], lower: Sequence[float], z,
           digits: int = 30) -> tuple[str, str]:
    """High-precision pFq with arbitrary real upper parameters."""
    digits = _check_digits(digits)
    p, q = len(upper), len(lower)
    if p > q + 1:
        raise DivergentSeriesError(f"pFq with p={p} > q+1={q + 1} diverges")
    if p == q + 1 and abs(z) >= 1.0:
        raise DivergentSeriesError(f"pFq with p = q+1 needs |z| < 1, got z={z!r}")
    with mp.workdps(digits + 10):
        value, tail, _ = _hp_pfq_mpf(upper, lower, z)
        return mp.nstr(value, digits), mp.nstr(tail, 10)


@dataclass(frozen=True)
class MonotoneVerdict:
    """Direction summary of a finite sequence.

    ``direction`` is one of "nondecreasing", "nonincreasing", "constant",
    "mixed"; truthiness means the steps never disagree in sign.
    ``worst_violation`` is the largest step against the majority direction
    (0.0 when there is none).
    """

    direction: str
    n_increases: int
    n_decreases: int
    worst_violation: float

    def __bool__(self) -> bool:
        return self.direction != "mixed"


def seq_ratio_monotone(values: Sequence) -> MonotoneVerdict:
    """Classify a sequence of at least three values by step direction."""
    if len(values) < 3:
        raise LengthError(
            f"need at least 3 values to judge monotonicity, got {len(values)}")
    ups = downs = 0
    worst_up = worst_down = mp.mpf(0)
    for a, b in zip(values, values[1:]):
        d = mp.mpf(b) - mp.mpf(a)
        if d > 0:
            ups += 1
            worst_up = max(worst_up, d)
        elif d < 0:
            downs += 1
            worst_down = max(worst_down, -d)
    if ups and downs:
        worst = worst_down if ups >= downs else worst_up
        return MonotoneVerdict("mixed", ups, downs, float(worst))
    if ups:
        return MonotoneVerdict("nondecreasing", ups, 0, 0.0)
    if downs:
        return MonotoneVerdict("nonincreasing", 0, downs, 0.0)
    return MonotoneVerdict("constant", 0, 0, 0.0)


def series_ratio_monotone_check(num_params: FoxWrightParams,
                                den_params: FoxWrightParams,
                                z_grid: Sequence[float],
                                digits: int = 30) -> MonotoneVerdict:
    """Judge monotonicity of the ratio of two series along a z grid.

    Both series are summed at high precision; if either truncation tail
    fails to drop below 1e-15 of its partial sum the ratio cannot be
    certified and ConvergenceError is raised.
    """
    digits = _check_digits(digits)
    for p in (num_params, den_params):
        if epsilon(p) <= 0.0:
            raise DivergentSeriesError(
                f"divergent series: epsilon = {epsilon(p):.6g} <= 0")
    rel_stop = mp.mpf(10) ** (-digits)
    ratios = []
    with mp.workdps(digits + 10):
        for z in z_grid:
            num, num_tail, _ = _hp_series(num_params, z, rel_stop)
            den, den_tail, _ = _hp_series(den_params, z, rel_stop)
            for val, tail in ((num, num_tail), (den, den_tail)):
                if abs(tail) > mp.mpf("1e-15") * abs(val):
                    raise ConvergenceError(
                        f"series tail {mp.nstr(tail, 5)} too large relative to "
                        f"partial sum {mp.nstr(val, 5)} at z={z!r}")
            ratios.append(num / den)
        return seq_ratio_monotone(ratios)


def finite_difference(f: Callable, z, h):
    """Central difference (f(z+h) - f(z-h)) / (2h)."""
    return (f(z + h) - f(z - h)) / (2 * h)
