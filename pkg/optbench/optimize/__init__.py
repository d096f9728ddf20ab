from optbench.optimize.budget import Budget, BudgetExhausted, CountingObjective, RunResult
from optbench.optimize.differential_evolution import differential_evolution
from optbench.optimize.nelder_mead import nelder_mead, simplex_search
from optbench.optimize.random_search import random_search
from optbench.optimize.suite import SuiteReport, SuiteRun, default_threshold, run_suite

__all__ = [
    "Budget",
    "BudgetExhausted",
    "CountingObjective",
    "RunResult",
    "differential_evolution",
    "nelder_mead",
    "simplex_search",
    "random_search",
    "SuiteReport",
    "SuiteRun",
    "default_threshold",
    "run_suite",
]
