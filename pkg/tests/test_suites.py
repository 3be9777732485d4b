"""Suite runner: sampling, determinism, validation, oracle recomputation."""

import json
import math

import pytest

from foxwright import (
    GridError,
    GridSpec,
    ParameterError,
    grid_from_json,
    margin_passes,
)
from foxwright.report import STATUS_OK
from foxwright.suites import (
    EXPLORERS,
    SUITES,
    explorer_ids,
    hp_margin,
    run_explore,
    run_suite,
    suite_ids,
)

ALL_SUITES = suite_ids()


def test_registry_contents():
    assert ALL_SUITES == sorted(SUITES)
    assert set(ALL_SUITES) == {
        "turan-alpha", "turan-beta", "corollary3-2f2", "ratio-monotone",
        "tail-turan", "kn-bound", "chi", "lazarevic", "wilker", "logconcave",
    }
    assert explorer_ids() == sorted(EXPLORERS) == ["problem1-kn", "problem2-xi"]


@pytest.mark.parametrize("suite", ALL_SUITES)
def test_small_run_all_pass(suite):
    rows = run_suite(suite, GridSpec(samples=8, seed=11))
    assert len(rows) == 8
    for r in rows:
        assert r.status == STATUS_OK
        assert r.passed, (suite, r.z, r.margin)
        assert r.suite_id.startswith(suite)
        json.loads(r.params_json())  # echo must serialize cleanly


def test_logconcave_emits_subsuite_ids():
    rows = run_suite("logconcave", GridSpec(samples=9, seed=4))
    ids = {r.suite_id for r in rows}
    assert ids == {"logconcave:midpoint", "logconcave:expbound",
                   "logconcave:deriv"}


def test_determinism_and_seed_sensitivity():
    a = run_suite("turan-alpha", GridSpec(samples=12, seed=7))
    b = run_suite("turan-alpha", GridSpec(samples=12, seed=7))
    assert [(r.params_json(), r.z, r.margin) for r in a] == \
           [(r.params_json(), r.z, r.margin) for r in b]
    c = run_suite("turan-alpha", GridSpec(samples=12, seed=8))
    assert [(r.params_json(), r.z) for r in a] != \
           [(r.params_json(), r.z) for r in c]


def test_lattice_mode_runs_deterministically():
    spec = GridSpec(samples=6, seed=3, mode="lattice")
    a = run_suite("wilker", spec)
    b = run_suite("wilker", spec)
    assert all(x.margin == y.margin for x, y in zip(a, b))
    assert all(r.passed for r in a)


def test_unknown_suite_and_explorer():
    with pytest.raises(ParameterError):
        run_suite("no-such-suite", GridSpec(samples=2))
    with pytest.raises(ParameterError):
        run_explore("no-such-probe", GridSpec(samples=2))


def test_unknown_range_name_rejected():
    spec = GridSpec(param_ranges={"bogus": (0.1, 1.0)}, samples=3)
    with pytest.raises(GridError):
        run_suite("turan-beta", spec)


def test_impossible_lazarevic_ranges_rejected():
    spec = GridSpec(param_ranges={"alpha1": (0.2, 0.8),
                                  "beta2": (2.0, 4.0)}, samples=3)
    with pytest.raises(GridError):
        run_suite("lazarevic", spec)


def test_sign_constrained_z_ranges():
    with pytest.raises(GridError):
        run_suite("turan-beta", GridSpec(z_range=(-2.0, 1.0), samples=3))
    with pytest.raises(GridError):
        # this family lives at z < 0
        run_suite("corollary3-2f2", GridSpec(z_range=(1.0, 2.0), samples=3))


def test_grid_from_json():
    spec = grid_from_json({"alpha1": [0.5, 2.0], "z": [0.1, 3.0],
                           "samples": 17, "seed": 5, "mode": "lattice"})
    assert spec.samples == 17 and spec.seed == 5 and spec.mode == "lattice"
    assert spec.param_ranges["alpha1"] == (0.5, 2.0)
    assert spec.z_range == (0.1, 3.0)
    with pytest.raises(GridError):
        grid_from_json({"alpha1": [2.0]})
    with pytest.raises(GridError):
        grid_from_json({"samples": "many"})


def test_custom_ranges_are_respected():
    spec = GridSpec(param_ranges={"beta": (1.0, 1.0), "weight": (1.0, 1.0),
                                  "n": (0.0, 0.0)},
                    z_range=(1e-8, 1e-5), samples=5, seed=3)
    rows = run_suite("kn-bound", spec)
    for r in rows:
        assert r.params_echo["n"] == 0
        for b, w in r.params_echo["lower"]:
            assert b == 1.0 and w == 1.0
    # with q = 1, beta = B = 1, n = 0 the sharp bound is 4/9
    assert abs(rows[0].aux["bound"] - 4.0 / 9.0) <= 1e-12


@pytest.mark.parametrize("suite", ALL_SUITES)
def test_hp_margin_agrees(suite):
    rows = run_suite(suite, GridSpec(samples=3, seed=23))
    for r in rows:
        hp = hp_margin(r, digits=30)
        if math.isinf(r.margin) or math.isinf(hp):
            assert r.margin == hp
            continue
        scale = max(abs(r.lhs), abs(r.rhs), 1e-300)
        tol = max(1e-8 * scale, 50.0 * r.err_estimate, 1e-12)
        assert abs(hp - r.margin) <= tol, (suite, r.z, r.margin, hp)


def test_hp_margin_rejects_unknown_rows():
    rows = run_explore("problem1-kn", GridSpec(samples=1, seed=1))
    with pytest.raises(ParameterError):
        hp_margin(rows[0])


def test_explore_problem1():
    rows = run_explore("problem1-kn", GridSpec(samples=10, seed=9))
    assert len(rows) == 10
    for i, r in enumerate(rows):
        assert r.passed  # observations never fail
        assert len(r.aux["k_values"]) == 20
        assert r.params_echo["direction"] in (
            "nondecreasing", "nonincreasing", "constant", "mixed")
        if r.aux["proven_shape"]:
            # zero upper weights: the ratio is proven monotone there, so
            # the grid must come out nondecreasing
            assert r.params_echo["direction"] == "nondecreasing"


def test_explore_problem2():
    rows = run_explore("problem2-xi", GridSpec(samples=9, seed=5))
    for r in rows:
        assert r.passed
        assert r.rhs == 0.0
        if r.aux["proven_shape"]:
            assert r.margin >= -1e-12


def test_margin_passes_scale_logic():
    assert margin_passes(-1e-13, 1.0, 1.0, 1e-12, 1e-10)
    assert not margin_passes(-1e-6, 1.0, 1.0, 1e-12, 1e-10)
    # huge scale buys proportional slack
    assert margin_passes(-0.5, 1e12, 1e12, 1e-12, 1e-10)
    assert not margin_passes(math.nan, 1.0, 1.0, 1e-12, 1e-10)
    assert not margin_passes(-1.0, math.inf, 1.0, 1e-12, 1e-10)
