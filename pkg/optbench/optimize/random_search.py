from optbench.functions import FunctionKey
from optbench.functions.base import EvalContext
from optbench.optimize.budget import Budget, CountingObjective, RunResult
from optbench.registry import lookup


def random_search(key: FunctionKey, dimension: int, budget: Budget, seed: int = 0) -> RunResult:
    """Uniform in-box sampling; keeps the best point seen."""
    spec = lookup(key)
    objective = CountingObjective(spec, dimension, budget, seed=seed)
    lower, upper = spec.bounds.arrays(dimension)
    rng = EvalContext(seed).generator()
    while objective.remaining > 0:
        objective(rng.uniform(lower, upper))
    return RunResult.from_objective(objective, "random_search", seed)
