from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from optbench.api.config import NelderMeadParams
from optbench.exceptions import DomainError, OutOfBounds
from optbench.functions import FunctionKey, as_point
from optbench.optimize.budget import Budget, BudgetExhausted, CountingObjective, RunResult
from optbench.registry import lookup


def simplex_search(
    f: Callable[[np.ndarray], float],
    start: Sequence[float],
    lower: np.ndarray,
    upper: np.ndarray,
    params: NelderMeadParams = NelderMeadParams(),
    max_iterations: Optional[int] = None,
) -> Tuple[np.ndarray, float, int]:
    """Box-clamped Nelder-Mead from ``start``. Returns (best point, best value, iterations).

    Every trial point is clipped to [lower, upper]. The initial simplex steps
    ``initial_scale * (upper - lower)`` along each axis, inward when ``start`` sits on the upper bound.
    Stops after ``max_iterations``, when the simplex diameter drops below ``min_diameter``,
    or when ``f`` raises (the exception propagates to the caller).
    """
    x0 = np.clip(np.asarray(start, dtype=float), lower, upper)
    n = x0.size
    step = params.initial_scale * (upper - lower)
    simplex = [x0]
    for i in range(n):
        v = x0.copy()
        v[i] = x0[i] + step[i] if x0[i] + step[i] <= upper[i] else x0[i] - step[i]
        simplex.append(np.clip(v, lower, upper))
    simplex = np.array(simplex)
    values = np.array([f(v) for v in simplex])

    iteration = 0
    while max_iterations is None or iteration < max_iterations:
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        diameter = np.max(np.linalg.norm(simplex[1:] - simplex[0], axis=1))
        if diameter < params.min_diameter:
            break
        iteration += 1

        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        reflected = np.clip(centroid + params.alpha * (centroid - worst), lower, upper)
        f_reflected = f(reflected)
        if values[0] <= f_reflected < values[-2]:
            simplex[-1], values[-1] = reflected, f_reflected
            continue
        if f_reflected < values[0]:
            expanded = np.clip(centroid + params.gamma * (reflected - centroid), lower, upper)
            f_expanded = f(expanded)
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
            continue
        if f_reflected < values[-1]:
            contracted = np.clip(centroid + params.rho * (reflected - centroid), lower, upper)
            f_contracted = f(contracted)
            if f_contracted <= f_reflected:
                simplex[-1], values[-1] = contracted, f_contracted
                continue
        else:
            contracted = np.clip(centroid + params.rho * (worst - centroid), lower, upper)
            f_contracted = f(contracted)
            if f_contracted < values[-1]:
                simplex[-1], values[-1] = contracted, f_contracted
                continue
        # shrink towards the best vertex
        for i in range(1, n + 1):
            simplex[i] = simplex[0] + params.sigma * (simplex[i] - simplex[0])
            values[i] = f(simplex[i])

    best = int(np.argmin(values))
    return simplex[best].copy(), float(values[best]), iteration


def nelder_mead(
    key: FunctionKey,
    start: Sequence[float],
    budget: Budget,
    params: NelderMeadParams = NelderMeadParams(),
    seed: int = 0,
) -> RunResult:
    """Run the simplex method under a hard evaluation budget. A DomainError aborts the run with a partial result."""
    spec = lookup(key)
    x0 = as_point(start)
    spec.check_dimension(x0.size)
    if not spec.bounds.contains(x0):
        raise OutOfBounds(f"Start point {x0.tolist()} lies outside the box of f{spec.index} {spec.display_name}")
    lower, upper = spec.bounds.arrays(x0.size)
    objective = CountingObjective(spec, x0.size, budget, seed=seed, domain_errors="raise")
    try:
        simplex_search(objective, x0, lower, upper, params)
    except BudgetExhausted:
        pass
    except DomainError as e:
        return RunResult.from_objective(objective, "nelder_mead", seed, aborted=True, note=str(e))
    return RunResult.from_objective(objective, "nelder_mead", seed)
