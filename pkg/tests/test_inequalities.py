"""Inequality checkers: margins, domains, anchors, oracle agreement."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxwright import (
    DomainError,
    FoxWrightParams,
    GridError,
    ParameterError,
    chi_check,
    corollary3_2f2_check,
    kn_ratio,
    kn_value_and_bound,
    lazarevic_bessel_check,
    lazarevic_check,
    logconcavity_check,
    ratio_monotonicity_check,
    tail_turan_check,
    turan_alpha_check,
    turan_beta_check,
    wilker_bessel_check,
    wilker_check,
    wilker_wright_check,
    xi_prime,
)
from foxwright.suites import hp_margin

P1 = FoxWrightParams(upper=((1.3, 0.7), (2.1, 1.4)),
                     lower=((0.9, 1.1), (1.7, 0.8)))
Q1 = FoxWrightParams(upper=(), lower=((1.0, 1.0),))

# I0(2)*I2(2) - I1(2)^2/2, from 40-digit Bessel values
TURAN_BETA_Q1_Z1 = 0.3054539537760246
# hyperbolic margins at z = 1: sinh^3 - cosh and sinh^2 + tanh - 2
LAZ_HYPERBOLIC_Z1 = 0.0799872018043806
WIL_HYPERBOLIC_Z1 = 0.1426920014975806


def _hp_agrees(rep, digits=30, loose=1.0):
    hp = hp_margin(rep, digits=digits)
    if math.isinf(rep.margin) or math.isinf(hp):
        return rep.margin == hp
    scale = max(abs(rep.lhs), abs(rep.rhs), 1e-300)
    tol = loose * max(1e-8 * scale, 50.0 * rep.err_estimate, 1e-12)
    return abs(hp - rep.margin) <= tol


def test_turan_alpha_basic():
    rep = turan_alpha_check(P1, 2.0)
    assert rep.passed and rep.margin >= 0.0
    assert rep.suite_id == "turan-alpha"
    assert _hp_agrees(rep)


def test_turan_beta_basic_and_oracle():
    rep = turan_beta_check(P1, 2.0)
    assert rep.passed and rep.margin >= 0.0
    assert _hp_agrees(rep)


def test_turan_beta_frozen_bessel_margin():
    rep = turan_beta_check(Q1, 1.0)
    assert abs(rep.margin - TURAN_BETA_Q1_Z1) <= 1e-12


def test_turan_beta_margin_vanishes_at_zero():
    # the beta1/(beta1+1) constant is exactly the z -> 0 equality case
    for params in (P1, Q1, FoxWrightParams(upper=((2.0, 1.0),),
                                           lower=((1.5, 1.0), (0.7, 2.0)))):
        assert abs(turan_beta_check(params, 0.0).margin) <= 1e-14
        if params.upper:
            rep = turan_alpha_check(params, 0.0)
            assert rep.passed and rep.margin >= 0.0


def test_turan_rejects_negative_z():
    with pytest.raises(DomainError):
        turan_beta_check(P1, -0.5)
    with pytest.raises(DomainError):
        turan_alpha_check(P1, -0.5)


def test_corollary3_passes_and_agrees():
    rep = corollary3_2f2_check(3.0, 1.8, 1.1, -2.0)
    assert rep.passed
    assert rep.suite_id == "corollary3-2f2"
    assert set(rep.params_echo) == {"alpha1", "beta1", "beta2"}
    assert _hp_agrees(rep)
    with pytest.raises(DomainError):
        corollary3_2f2_check(3.0, 1.8, 1.1, 0.5)


def test_ratio_monotonicity_check():
    grid = [0.5 * (k + 1) for k in range(10)]
    rep = ratio_monotonicity_check(P1, "beta", 1.1, 2.3, grid)
    assert rep.passed
    assert rep.aux["n_comparisons"] >= len(grid)
    assert rep.aux["ratio_first"] >= rep.aux["ratio_last"]
    assert _hp_agrees(rep)
    rep2 = ratio_monotonicity_check(P1, "alpha", 0.9, 1.7, grid)
    assert rep2.passed
    with pytest.raises(ParameterError):
        ratio_monotonicity_check(P1, "gamma", 1.0, 2.0, grid)
    with pytest.raises(GridError):
        ratio_monotonicity_check(P1, "beta", 1.0, 2.0, [1.0])


def test_tail_turan_closed_form_exp():
    # empty parameters, n = 0, z = 1: the tails are e-1, e-2, e-2.5
    rep = tail_turan_check(FoxWrightParams(), 0, 1.0)
    closed = (math.e - 2.0) ** 2 - (math.e - 1.0) * (math.e - 2.5)
    assert abs(rep.margin - closed) <= 1e-14
    assert rep.passed


def test_tail_turan_large_z_stays_stable():
    # margins here are astronomically large; the log-space identity must
    # not produce a spurious sign flip
    rep = tail_turan_check(FoxWrightParams(), 0, 800.0)
    assert rep.passed and rep.margin > 0.0
    rep2 = tail_turan_check(FoxWrightParams(upper=(), lower=((1.4, 0.6),)),
                            3, 500.0)
    assert rep2.passed and rep2.margin > 0.0


def test_tail_turan_oracle_agreement():
    rep = tail_turan_check(FoxWrightParams(upper=((1.2, 0.0),),
                                           lower=((0.8, 1.0),)), 2, 3.0)
    assert rep.passed
    assert _hp_agrees(rep)


def test_tail_turan_rejects_varying_upper():
    with pytest.raises(ParameterError):
        tail_turan_check(P1, 0, 1.0)


def test_kn_sharp_constant():
    assert abs(kn_ratio(Q1, 0, 1e-6) - 4.0 / 9.0) <= 1e-4


def test_kn_value_and_bound_grid():
    grid = [10.0 * (i + 1) / 50 for i in range(50)]
    rep = kn_value_and_bound(Q1, 0, z_grid=grid)
    assert rep.passed
    assert abs(rep.aux["bound"] - 4.0 / 9.0) <= 1e-12
    ks = rep.aux["k_values"]
    assert len(ks) == 50
    for a, b in zip(ks, ks[1:]):
        assert b >= a - (1e-12 + 1e-9 * abs(a))
    assert _hp_agrees(rep)


def test_kn_large_z_limit():
    # K_n -> 1 from below as z grows; the two-regime evaluation must keep
    # the value finite and monotone through the crossover
    ks = [kn_ratio(Q1, 0, z) for z in (1.0, 10.0, 100.0, 1000.0, 2000.0)]
    for a, b in zip(ks, ks[1:]):
        assert b >= a - 1e-11
    assert ks[-1] <= 1.0 + 1e-9


def test_kn_requires_constant_upper():
    with pytest.raises(ParameterError):
        kn_value_and_bound(FoxWrightParams(((1.0, 0.5),), ((1.0, 1.0),)), 0, z=1.0)
    # exploratory ratio has no such gate
    assert kn_ratio(FoxWrightParams(((1.0, 0.5),), ((1.0, 1.0),)), 0, 1.0) > 0.0
    with pytest.raises(DomainError):
        kn_ratio(Q1, 0, 0.0)
    with pytest.raises(ParameterError):
        kn_ratio(Q1, -1, 1.0)


def test_chi_check_fields_and_oracle():
    grid = [1.0 + 0.15 * k for k in range(12)]
    rep = chi_check(2.4, 0.8, 1.3, grid, 2.0)
    assert rep.passed
    assert len(rep.aux["chi_values"]) == 12
    assert len(rep.aux["omega_values"]) == 12
    assert all(w >= -1e-12 for w in rep.aux["omega_values"])
    assert _hp_agrees(rep)
    with pytest.raises(GridError):
        chi_check(2.4, 0.8, 1.3, [1.0], 2.0)


def test_lazarevic_margin_and_tightness():
    rep = lazarevic_check(2.5, 1.3, 0.9, 1.2, 2.0)
    assert rep.passed and rep.margin >= 0.0
    assert _hp_agrees(rep)
    # tight at z -> 0
    assert abs(lazarevic_check(2.5, 1.3, 0.9, 1.2, 1e-8).margin) <= 1e-6
    with pytest.raises(DomainError):
        lazarevic_check(0.5, 1.3, 2.0, 1.2, 1.0)


def test_lazarevic_bessel_hyperbolic_anchor():
    # nu = -1/2 reduces to cosh z <= (sinh z / z)^3
    rep = lazarevic_bessel_check(-0.5, 1.0)
    assert abs(rep.margin - LAZ_HYPERBOLIC_Z1) <= 1e-9
    assert rep.passed
    assert lazarevic_bessel_check(0.5, 1.0).passed


def test_wilker_margin_and_tightness():
    rep = wilker_check(2.5, 1.3, 0.9, 1.2, 2.0)
    assert rep.passed and rep.margin >= 0.0
    assert _hp_agrees(rep)
    assert abs(wilker_check(2.5, 1.3, 0.9, 1.2, 1e-8).margin) <= 1e-6


def test_wilker_bessel_hyperbolic_anchor():
    rep = wilker_bessel_check(-0.5, 1.0)
    assert abs(rep.margin - WIL_HYPERBOLIC_Z1) <= 1e-9
    assert rep.passed
    assert wilker_bessel_check(1.5, 2.0).passed


def test_wilker_wright():
    rep = wilker_wright_check(1.4, 2.1, 3.0)
    assert rep.passed and rep.margin >= 0.0
    assert rep.suite_id == "wilker-wright"
    assert _hp_agrees(rep)


def test_logconcavity_triple():
    params = FoxWrightParams(upper=((1.6, 1.0),),
                             lower=((1.2, 1.3), (0.9, 1.0)))
    reps = logconcavity_check(params, 0.8, 2.4)
    assert [r.suite_id for r in reps] == [
        "logconcave:midpoint", "logconcave:expbound", "logconcave:deriv"]
    for r in reps:
        assert r.passed, (r.suite_id, r.margin)
        assert _hp_agrees(r)
    assert reps[0].aux["z1"] == 0.8 and reps[0].aux["z2"] == 2.4


def test_logconcavity_shape_guards():
    with pytest.raises(ParameterError):
        # upper weight must be 1
        logconcavity_check(FoxWrightParams(((1.6, 0.5),),
                                           ((1.2, 1.3), (0.9, 1.0))), 0.5, 1.5)
    # equal points degenerate to the equality case of the midpoint bound
    mid, exb, der = logconcavity_check(
        FoxWrightParams(((1.6, 1.0),), ((1.2, 1.3), (0.9, 1.0))), 2.0, 2.0)
    assert mid.passed and abs(mid.margin) <= 1e-14 * abs(mid.lhs)
    with pytest.raises(DomainError):
        logconcavity_check(FoxWrightParams(((1.6, 1.0),),
                                           ((1.2, 1.3), (0.9, 1.0))), -1.0, 2.0)


def test_xi_prime_nonnegative_on_proven_shape():
    # one upper pair, one lower pair, unit weights, alpha1 >= beta2
    vals = [xi_prime(FoxWrightParams(((2.0, 1.0),), ((1.2, 1.0),)), z)
            for z in (0.2, 1.5, 4.0)]
    assert all(v >= -1e-12 for v in vals)


@given(st.floats(min_value=0.3, max_value=4.0),
       st.floats(min_value=0.3, max_value=4.0),
       st.floats(min_value=0.0, max_value=6.0))
@settings(max_examples=60, deadline=None)
def test_turan_beta_property(beta1, beta2, z):
    params = FoxWrightParams(upper=(), lower=((beta1, 1.0), (beta2, 0.7)))
    rep = turan_beta_check(params, z)
    assert rep.passed, (beta1, beta2, z, rep.margin)


@given(st.floats(min_value=0.5, max_value=3.5),
       st.floats(min_value=0.5, max_value=3.0),
       st.floats(min_value=0.1, max_value=2.5),
       st.floats(min_value=0.0, max_value=5.0))
@settings(max_examples=40, deadline=None)
def test_lazarevic_property(alpha1, beta1, b1, z):
    beta2 = min(alpha1, 0.9)  # keep alpha1 >= beta2
    rep = lazarevic_check(alpha1, beta1, beta2, b1, z)
    assert rep.passed, (alpha1, beta1, beta2, b1, z, rep.margin)
