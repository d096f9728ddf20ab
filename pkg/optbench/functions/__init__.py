"""Evaluators for the 175 catalog formulas.

``evaluate`` is the only way other modules reach a formula: it checks the
dimension rule, supplies random draws for the two stochastic entries, merges
overridable formula parameters and maps floating point trouble to
``DomainError``.
"""

import math
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np

from optbench.exceptions import DomainError
from optbench.functions.base import SUPPRESS, EvalContext, NoisePolicy
from optbench.registry import FunctionId, FunctionSpec, lookup

FunctionKey = Union[FunctionId, FunctionSpec, str, int]


def all_specs() -> List[FunctionSpec]:
    from optbench.functions import ackley_csendes, cube_jennrich, langerman_quadratic, quartic_schaffer, sphere_zirilli

    specs: List[FunctionSpec] = []
    for module in (ackley_csendes, cube_jennrich, langerman_quadratic, quartic_schaffer, sphere_zirilli):
        specs.extend(module.SPECS)
    return specs


def as_point(x: Sequence[float]) -> np.ndarray:
    point = np.array(x, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(point)):
        raise DomainError(f"Point {list(x)} has non-finite coordinates")
    return point


def _parameters(spec: FunctionSpec, params: Optional[Mapping[str, float]]) -> Dict[str, float]:
    merged = dict(spec.parameters)
    for name, value in (params or {}).items():
        if name not in merged:
            raise ValueError(f"f{spec.index} {spec.display_name} has no parameter {name!r} (known: {', '.join(merged) or 'none'})")
        merged[name] = value
    return merged


def _draws(spec: FunctionSpec, dimension: int, ctx: EvalContext, stream: Optional[int]) -> np.ndarray:
    count = dimension if spec.noise_per_coordinate else 1
    if ctx.noise_policy == NoisePolicy.suppress:
        return np.full(count, spec.noise_fill)
    return ctx.generator(stream).random(count)


def _evaluate(spec: FunctionSpec, x, ctx: EvalContext, params, stream: Optional[int]) -> float:
    point = as_point(x)
    spec.check_dimension(point.size)
    kwargs = _parameters(spec, params)
    with np.errstate(all="ignore"):
        try:
            if spec.stochastic:
                value = spec.evaluator(point, _draws(spec, point.size, ctx, stream), **kwargs)
            else:
                value = spec.evaluator(point, **kwargs)
            value = float(value)
        except (ZeroDivisionError, ValueError, OverflowError) as e:
            raise DomainError(f"f{spec.index} {spec.display_name} is undefined at {point.tolist()}: {e}") from e
    if math.isnan(value):
        raise DomainError(f"f{spec.index} {spec.display_name} is undefined at {point.tolist()}")
    return value


def evaluate(
    key: FunctionKey,
    x: Sequence[float],
    ctx: EvalContext = SUPPRESS,
    params: Optional[Mapping[str, float]] = None,
    stream: Optional[int] = None,
) -> float:
    """Formula value at ``x``. Outside-the-box points are allowed; +/-inf is returned as is.

    ``stream`` selects the sub-seed (ctx.seed, stream) for sampled noise; None uses ctx.seed alone.
    """
    return _evaluate(lookup(key), x, ctx, params, stream=stream)


def evaluate_batch(
    key: FunctionKey,
    xs: Sequence[Sequence[float]],
    ctx: EvalContext = SUPPRESS,
    params: Optional[Mapping[str, float]] = None,
    errors: str = "raise",
) -> List[float]:
    """Evaluate each point in order; stochastic draws restart per point from the sub-seed (ctx.seed, position).

    ``errors="nan"`` records a ``DomainError`` as nan for that element instead of raising.
    """
    if errors not in ("raise", "nan"):
        raise ValueError(f"Invalid errors mode {errors!r} (expected raise or nan)")
    spec = lookup(key)
    values = []
    for i, x in enumerate(xs):
        try:
            values.append(_evaluate(spec, x, ctx, params, stream=i))
        except DomainError:
            if errors == "raise":
                raise
            values.append(float("nan"))
    return values


__all__ = ["EvalContext", "NoisePolicy", "SUPPRESS", "all_specs", "as_point", "evaluate", "evaluate_batch"]
