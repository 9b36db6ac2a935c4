import numpy as np
import pytest

from ppsim.classical import (
    apply_local_noise,
    best_bob,
    distance,
    search_feasibility,
    source_table,
    target_table,
)
from ppsim.errors import ParameterError

FAST = {"top_k": 4, "restarts": 1, "grid_step": 0.25}


@pytest.mark.parametrize("p", [0.2, 0.5])
def test_total_variation_reaches_floor(p):
    report = search_feasibility(p, metric="tv", seed=0, **FAST)
    assert 0.9 * p / 4 <= report.distance <= 1.01 * p / 4
    assert report.distance >= report.marginal_floor - 1e-9
    assert not report.exhausted


def test_reported_model_reproduces_distance():
    report = search_feasibility(0.5, metric="tv", seed=0, **FAST)
    out = apply_local_noise(source_table(), report.model)
    found = distance(out.values, target_table(0.5), "tv")
    assert found == pytest.approx(report.distance, abs=1e-12)
    assert report.model.alpha == 1.0 and report.model.beta == 1.0


def test_l2_stays_away_from_zero():
    report = search_feasibility(0.5, metric="l2", seed=0, **FAST)
    assert report.distance >= report.marginal_floor - 1e-9
    assert report.marginal_floor == pytest.approx(0.5 / 8)


def test_best_bob_identity_point():
    # Alice keeps her bit, so the noiseless table is reachable at p = 0
    value, w = best_bob((1.0, 0.0), source_table(), target_table(0.0), "tv")
    assert value == pytest.approx(0, abs=1e-9)
    assert np.allclose(w.reshape(2, 4).sum(axis=1), 1)


def test_budget_exhaustion():
    report = search_feasibility(0.5, budget=5, seed=0, **FAST)
    assert report.exhausted
    assert report.evaluations == 5
    assert report.budget == 5


def test_deterministic():
    first = search_feasibility(0.3, seed=7, **FAST)
    second = search_feasibility(0.3, seed=7, **FAST)
    assert first.to_dict() == second.to_dict()


@pytest.mark.parametrize(
    "kwargs",
    [
        {"metric": "kl"},  # unknown metric
        {"budget": 0},  # empty budget
        {"p": 1.5},  # out of range
    ],
)
def test_search_rejects(kwargs):
    args = {"p": 0.5, **kwargs}
    with pytest.raises(ParameterError):
        search_feasibility(**args)


@pytest.mark.slow
def test_default_search():
    report = search_feasibility(0.5)
    assert report.distance == pytest.approx(0.125, rel=0.01)
    assert report.metric == "tv"


@pytest.mark.parametrize("p", [1e-4, 0.01])
def test_small_damping_respects_floor(p):
    report = search_feasibility(p, metric="tv", seed=0, **FAST)
    assert report.distance >= report.marginal_floor - 1e-15
    assert report.distance == pytest.approx(p / 4, rel=1e-3)


@pytest.mark.parametrize("p", [0.0, 1.0])
def test_search_accepts_closed_interval(p):
    report = search_feasibility(p, metric="tv", seed=0, **FAST)
    assert report.distance == pytest.approx(p / 4, abs=1e-9)


def test_search_parameter_message():
    with pytest.raises(ParameterError, match=r"p in \[0, 1\]"):
        search_feasibility(-0.5)
