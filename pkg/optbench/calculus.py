"""Finite-difference gradients, projected stationarity and the empirical separability probe."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from optbench.api.config import ProbeConfig
from optbench.exceptions import DomainError, NonFiniteResult
from optbench.functions import SUPPRESS, FunctionKey, as_point, evaluate
from optbench.functions.base import EvalContext
from optbench.registry import FunctionSpec, lookup
from optbench.utils import logger


class FDKind(Enum):
    central = "central"
    forward = "forward"


@dataclass(frozen=True)
class FDScheme:
    """Difference scheme. ``step=None`` means 1e-6 * max(1, |x_i|) per coordinate."""

    kind: FDKind = FDKind.central
    step: Optional[float] = None

    def __post_init__(self):
        if self.step is not None and not self.step > 0:
            raise ValueError(f"Finite-difference step must be positive, got {self.step}")

    def steps(self, x: np.ndarray) -> np.ndarray:
        if self.step is None:
            return 1e-6 * np.maximum(1.0, np.abs(x))
        return np.full(x.size, float(self.step))


CENTRAL = FDScheme()


def _at_bounds(spec: FunctionSpec, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    lo, hi = spec.bounds.arrays(x.size)
    atol = 1e-12 * np.maximum(1.0, hi - lo)
    return x <= lo + atol, x >= hi - atol


def _probe(spec: FunctionSpec, params) -> Callable[[np.ndarray], float]:
    def f(x: np.ndarray) -> float:
        value = evaluate(spec, x, SUPPRESS, params)
        if not math.isfinite(value):
            raise NonFiniteResult(f"f{spec.index} is {value} at {x.tolist()} during finite differencing")
        return value

    return f


def fd_gradient(key: FunctionKey, x: Sequence[float], scheme: FDScheme = CENTRAL, params=None) -> np.ndarray:
    """Gradient estimate. Central unless a central probe would leave the box; then one-sided, stepping inward.

    Stochastic entries are differenced with their noise suppressed.
    """
    spec = lookup(key)
    point = as_point(x)
    spec.check_dimension(point.size)
    f = _probe(spec, params)
    at_lower, at_upper = _at_bounds(spec, point)
    h = scheme.steps(point)
    f0 = f(point) if scheme.kind == FDKind.forward or np.any(at_lower | at_upper) else None
    grad = np.zeros(point.size)
    for i in range(point.size):
        e = np.zeros(point.size)
        e[i] = h[i]
        if scheme.kind == FDKind.central and not (at_lower[i] or at_upper[i]):
            grad[i] = (f(point + e) - f(point - e)) / (2 * h[i])
        elif at_upper[i]:
            grad[i] = (f0 - f(point - e)) / h[i]
        else:
            grad[i] = (f(point + e) - f0) / h[i]
    return grad


def stationarity_residual(key: FunctionKey, x: Sequence[float], scheme: FDScheme = CENTRAL, params=None) -> float:
    """Norm of the finite-difference gradient projected onto the box's feasible directions at ``x``."""
    spec = lookup(key)
    point = as_point(x)
    grad = fd_gradient(spec, point, scheme, params)
    at_lower, at_upper = _at_bounds(spec, point)
    # on a bound only descent directions pointing into the box count
    projected = np.where(at_lower, np.minimum(grad, 0.0), grad)
    projected = np.where(at_upper, np.maximum(projected, 0.0), projected)
    return float(np.linalg.norm(projected))


class ProbeVerdict(Enum):
    additively_separable = "AdditivelySeparable"
    non_separable = "NonSeparable"
    inconclusive = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SeparabilityVerdict:
    verdict: ProbeVerdict
    evidence: float  # largest scaled interaction residual seen
    samples: int  # samples that evaluated cleanly

    def as_dict(self):
        return {"verdict": self.verdict.value, "evidence": self.evidence, "samples": self.samples}


def separability_probe(
    key: FunctionKey,
    dimension: Optional[int] = None,
    samples: Optional[int] = None,
    seed: int = 0,
    tolerance: Optional[float] = None,
    config: ProbeConfig = ProbeConfig(),
) -> SeparabilityVerdict:
    """Empirical test of additive separability.

    For random in-box points and random coordinate pairs (i, j) the mixed difference
    |f(x+di+dj) - f(x+di) - f(x+dj) + f(x)| must stay within tolerance * max(1, |f|)
    at every sample for the function to count as additively separable.
    """
    spec = lookup(key)
    dim = spec.dimension.default if dimension is None else int(dimension)
    spec.check_dimension(dim)
    samples = config.samples if samples is None else int(samples)
    tolerance = config.tolerance if tolerance is None else float(tolerance)
    if samples < config.min_samples:
        raise ValueError(f"The separability probe needs at least {config.min_samples} samples, got {samples}")
    if dim < 2:
        raise ValueError("The separability probe needs at least two coordinates")

    lo, hi = spec.bounds.arrays(dim)
    delta = config.perturbation * (hi - lo)
    if not np.all(np.isfinite(delta)) or np.any(delta <= 0):
        raise DomainError(f"f{spec.index} box cannot be sampled")
    rng = EvalContext(seed).generator()
    f = lambda p: evaluate(spec, p, SUPPRESS)

    evidence, valid = 0.0, 0
    for _ in range(samples):
        x = rng.uniform(lo, hi - delta)
        i, j = rng.choice(dim, size=2, replace=False)
        di, dj = np.zeros(dim), np.zeros(dim)
        di[i], dj[j] = delta[i], delta[j]
        try:
            values = (f(x + di + dj), f(x + di), f(x + dj), f(x))
        except DomainError:
            continue
        if not all(math.isfinite(v) for v in values):
            continue
        valid += 1
        scale = max(1.0, *(abs(v) for v in values))
        residual = abs(values[0] - values[1] - values[2] + values[3]) / scale
        evidence = max(evidence, residual)

    if valid < config.min_samples:
        verdict = ProbeVerdict.inconclusive
    elif evidence <= tolerance:
        verdict = ProbeVerdict.additively_separable
    else:
        verdict = ProbeVerdict.non_separable
    logger.fs.debug(f"separability probe f{spec.index} D={dim} seed={seed}: {verdict.value} evidence={evidence:.3e} ({valid}/{samples})")
    return SeparabilityVerdict(verdict, evidence, valid)
