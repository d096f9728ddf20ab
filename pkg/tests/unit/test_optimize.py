import statistics

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optbench.api.config import DEParams
from optbench.config import check_manifest
from optbench.exceptions import DimensionMismatch, OutOfBounds
from optbench.functions import SUPPRESS, evaluate
from optbench.optimize import (
    Budget,
    BudgetExhausted,
    CountingObjective,
    default_threshold,
    differential_evolution,
    nelder_mead,
    random_search,
    run_suite,
)
from optbench.optimize.suite import RESULT_COLUMNS, SUMMARY_COLUMNS
from optbench.registry import lookup


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(0)
    with pytest.raises(ValueError):
        Budget(-5)


def test_counting_objective_enforces_budget():
    objective = CountingObjective("sphere", 2, Budget(2))
    objective(np.array([1.0, 1.0]))
    objective(np.array([0.5, 0.5]))
    with pytest.raises(BudgetExhausted):
        objective(np.array([0.0, 0.0]))
    assert objective.evaluations == 2
    assert objective.best_value == 0.5
    with pytest.raises(DimensionMismatch):
        CountingObjective("beale", 3, Budget(10))


def test_random_search_single_evaluation():
    result = random_search("sphere", 2, Budget(1), seed=4)
    assert result.evaluations_used == 1
    assert result.trajectory == [(1, result.best_value)]
    assert lookup("sphere").bounds.contains(result.best_point)


def test_same_seed_same_run():
    a = random_search("ackley-1", 3, Budget(200), seed=9)
    b = random_search("ackley-1", 3, Budget(200), seed=9)
    assert a.as_dict() == b.as_dict()
    c = random_search("ackley-1", 3, Budget(200), seed=10)
    assert c.best_point != a.best_point
    d1 = differential_evolution("adjiman", 2, Budget(300), seed=1)
    d2 = differential_evolution("adjiman", 2, Budget(300), seed=1)
    assert d1.as_dict() == d2.as_dict()


def test_stochastic_score_is_noise_free():
    result = random_search("quartic", 2, Budget(50), seed=2)
    assert result.score == evaluate("quartic", result.best_point, SUPPRESS)
    assert result.score <= result.best_value


def test_nelder_mead_start_must_be_in_box():
    with pytest.raises(OutOfBounds):
        nelder_mead("beale", (10, 10), Budget(100))
    with pytest.raises(DimensionMismatch):
        nelder_mead("beale", (1, 1, 1), Budget(100))


def test_nelder_mead_beale():
    result = nelder_mead("beale", (2, 2), Budget(2000))
    assert result.best_value <= 1e-6
    assert result.evaluations_used <= 2000
    assert result.best_point == pytest.approx((3, 0.5), abs=1e-2)


def test_nelder_mead_rosenbrock():
    result = nelder_mead("rosenbrock", (-1.2, 1), Budget(5000))
    assert result.best_value <= 1e-6
    assert not result.aborted


def test_nelder_mead_aborts_on_domain_error():
    # rump is undefined on x2 = 0; a simplex started there fails on its first evaluation
    result = nelder_mead("rump", (1, 0), Budget(100))
    assert result.aborted
    assert result.evaluations_used == 1
    assert "undefined" in result.note


def test_differential_evolution_initialisation():
    spec = lookup("adjiman")
    result = differential_evolution(spec, 2, Budget(20), seed=3)
    assert result.evaluations_used == 20
    assert spec.bounds.contains(result.best_point)
    with pytest.raises(ValueError):
        differential_evolution(spec, 2, Budget(19))
    with pytest.raises(ValueError):
        differential_evolution(spec, 2, Budget(30), params=DEParams(population_factor=20))


def test_differential_evolution_stays_in_box():
    spec = lookup("adjiman")
    result = differential_evolution(spec, 2, Budget(600), seed=0)
    assert spec.bounds.contains(result.best_point)
    assert result.evaluations_used == 600


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=300), st.integers(min_value=0, max_value=1000))
def test_budget_and_trajectory(budget, seed):
    result = random_search("sphere", 2, Budget(budget), seed=seed)
    assert result.evaluations_used == budget
    values = [v for _, v in result.trajectory]
    assert values == sorted(values, reverse=True)
    assert result.trajectory[-1] == (budget, result.best_value)


def test_default_threshold():
    assert default_threshold(lookup("beale"), 2) == pytest.approx(1e-3)
    assert default_threshold(lookup("egg-holder"), 2) is None
    assert default_threshold(lookup("rump"), 2) is None


def test_run_suite_cross_product():
    manifest = check_manifest(
        {"functions": ["sphere", "beale"], "optimizers": ["random_search"], "budget": 50, "seeds": [0, 1, 2], "thresholds": {"sphere": 100, "beale": 1e-9}}
    )
    report = run_suite(manifest)
    assert len(report.runs) == 6
    assert [(r.result.function.index, r.result.seed) for r in report.runs] == [(137, 0), (137, 1), (137, 2), (10, 0), (10, 1), (10, 2)]
    assert all(r.result.evaluations_used == 50 for r in report.runs)
    assert [r.success for r in report.runs[:3]] == [True] * 3
    assert [r.success for r in report.runs[3:]] == [False] * 3

    summary = report.summary()
    assert list(summary.columns) == SUMMARY_COLUMNS
    assert summary["runs"].tolist() == [3, 3]
    assert summary["success_rate"].tolist() == [1.0, 0.0]
    lines = report.results_csv().split("\n")
    assert lines[0] == ",".join(RESULT_COLUMNS)
    assert lines[1].startswith("137,random_search,2,0,")
    assert lines[1].endswith(",50,true")
    assert report.results_json() == run_suite(manifest, workers=3).results_json()


def test_run_suite_dimensions():
    manifest = check_manifest({"functions": ["sphere", "beale"], "optimizers": ["de"], "dimensions": [2, 3], "budget": 60})
    report = run_suite(manifest)
    assert [(r.result.function.index, r.result.dimension) for r in report.runs] == [(137, 2), (137, 3), (10, 2)]


def test_run_suite_skips_dimensions_a_function_rejects():
    manifest = check_manifest({"functions": ["powell-singular", "sphere"], "optimizers": ["random_search"], "dimensions": [4, 5], "budget": 10})
    report = run_suite(manifest)
    assert [(r.result.function.index, r.result.dimension) for r in report.runs] == [(91, 4), (137, 4), (137, 5)]


def test_run_suite_empty_manifest():
    report = run_suite(check_manifest({}))
    assert report.runs == []
    assert report.summary().empty
    assert report.summary_csv() == ",".join(SUMMARY_COLUMNS) + "\n"
    assert report.results_csv() == ",".join(RESULT_COLUMNS) + "\n"


@pytest.mark.integration
def test_differential_evolution_solves_sphere():
    manifest = check_manifest({"functions": ["sphere"], "optimizers": ["differential_evolution"], "budget": 2000, "seeds": list(range(20))})
    report = run_suite(manifest)
    assert all(r.success for r in report.runs)


@pytest.mark.integration
def test_differential_evolution_beats_random_search():
    manifest = check_manifest(
        {"functions": ["ackley-1", "griewank"], "optimizers": ["random_search", "de"], "dimensions": [5], "budget": 3000, "seeds": list(range(20))}
    )
    summary = run_suite(manifest, workers=4).summary()
    for fn in summary["fn"].unique():
        rows = summary[summary["fn"] == fn].set_index("optimizer")
        assert rows.loc["differential_evolution", "median_best"] < rows.loc["random_search", "median_best"]


@pytest.mark.integration
def test_nelder_mead_spread_over_seeds():
    manifest = check_manifest({"functions": ["booth"], "optimizers": ["nelder-mead"], "budget": 1000, "seeds": list(range(20))})
    report = run_suite(manifest)
    assert statistics.median(r.result.score for r in report.runs) < 1e-6


@pytest.mark.integration
def test_differential_evolution_ackley_reaches_target():
    scores = [differential_evolution("ackley-1", 2, Budget(20000), seed=seed).score for seed in range(20)]
    assert sum(score <= 1e-3 for score in scores) >= 18


@pytest.mark.integration
def test_random_search_sphere_median():
    scores = [random_search("sphere", 2, Budget(5000), seed=seed).score for seed in range(20)]
    assert statistics.median(scores) <= 0.05
