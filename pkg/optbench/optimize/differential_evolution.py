import numpy as np

from optbench.api.config import DEParams
from optbench.functions import FunctionKey
from optbench.functions.base import EvalContext
from optbench.optimize.budget import Budget, BudgetExhausted, CountingObjective, RunResult
from optbench.registry import lookup


def _reflect(v: np.ndarray, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    v = np.where(v < lower, 2 * lower - v, v)
    v = np.where(v > upper, 2 * upper - v, v)
    return np.clip(v, lower, upper)


def differential_evolution(key: FunctionKey, dimension: int, budget: Budget, seed: int = 0, params: DEParams = DEParams()) -> RunResult:
    """DE/rand/1/bin with NP = population_factor * D; mutants leaving the box are reflected back in."""
    spec = lookup(key)
    objective = CountingObjective(spec, dimension, budget, seed=seed)
    pop_size = max(4, params.population_factor * dimension)
    if budget.max_evaluations < pop_size:
        raise ValueError(f"Differential evolution needs a budget of at least NP={pop_size} evaluations, got {budget.max_evaluations}")
    lower, upper = spec.bounds.arrays(dimension)
    rng = EvalContext(seed).generator()

    population = rng.uniform(lower, upper, size=(pop_size, dimension))
    fitness = np.array([objective(p) for p in population])
    try:
        while True:
            for i in range(pop_size):
                candidates = [j for j in range(pop_size) if j != i]
                r1, r2, r3 = rng.choice(candidates, size=3, replace=False)
                mutant = _reflect(population[r1] + params.f * (population[r2] - population[r3]), lower, upper)
                cross = rng.random(dimension) < params.cr
                cross[rng.integers(dimension)] = True
                trial = np.where(cross, mutant, population[i])
                f_trial = objective(trial)
                if f_trial <= fitness[i]:
                    population[i], fitness[i] = trial, f_trial
    except BudgetExhausted:
        pass
    return RunResult.from_objective(objective, "differential_evolution", seed)
