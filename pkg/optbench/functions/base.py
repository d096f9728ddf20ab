"""Shared machinery for the function catalog: evaluation context, declaration helpers, ordered reductions."""

import itertools
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from optbench.registry import (
    Bounds,
    DimensionRule,
    FunctionId,
    FunctionSpec,
    KnownOptimum,
    OptimumStatus,
    PropertyFlags,
    Vector,
)

UINT64_MAX = 2**64 - 1


class NoisePolicy(Enum):
    sample = "sample"
    suppress = "suppress"

    @staticmethod
    def from_str(value: str) -> "NoisePolicy":
        try:
            return NoisePolicy(value.strip().lower())
        except ValueError:
            raise ValueError(f"Invalid noise policy {value!r} (expected sample or suppress)")


@dataclass(frozen=True)
class EvalContext:
    """Randomness for stochastic formulas. PCG64 seeded through SeedSequence; one draw per term in index order."""

    seed: int = 0
    noise_policy: NoisePolicy = NoisePolicy.suppress

    def __post_init__(self):
        if not 0 <= int(self.seed) <= UINT64_MAX:
            raise ValueError(f"Seed {self.seed} outside the unsigned 64-bit range")

    def generator(self, index: Optional[int] = None) -> np.random.Generator:
        if index is None:
            seq = np.random.SeedSequence(int(self.seed))
        else:
            seq = np.random.SeedSequence(int(self.seed), spawn_key=(int(index),))
        return np.random.Generator(np.random.PCG64(seq))


SUPPRESS = EvalContext()


def osum(terms) -> float:
    """Left-to-right sum in index order."""
    arr = np.asarray(terms, dtype=np.float64)
    if arr.size == 0:
        return 0.0
    return float(np.cumsum(arr)[-1])


def oprod(terms) -> float:
    """Left-to-right product in index order."""
    arr = np.asarray(terms, dtype=np.float64)
    if arr.size == 0:
        return 1.0
    return float(np.cumprod(arr)[-1])


# optimum constructors; tiers follow how the value was printed


def _optimum(value, tolerance, points=(), pattern=None, value_rule=None, family=None, status=OptimumStatus.claimed, note=""):
    locations = tuple(tuple(float(v) for v in p) for p in points)
    return KnownOptimum(
        value=None if value is None else float(value),
        value_tolerance=tolerance,
        locations=locations,
        pattern=pattern,
        value_rule=value_rule,
        family=family,
        status=status,
        note=note,
    )


EXACT, ROUNDED, APPROX = 1e-8, 5e-4, 5e-2


def exact(value, *points, **kwargs) -> KnownOptimum:
    return _optimum(value, EXACT, points, **kwargs)


def rounded(value, *points, **kwargs) -> KnownOptimum:
    return _optimum(value, ROUNDED, points, **kwargs)


def approx(value, *points, **kwargs) -> KnownOptimum:
    return _optimum(value, APPROX, points, **kwargs)


def value_only(value, tolerance=EXACT, note="") -> KnownOptimum:
    """Printed value without a location; kept in the catalog, never audited."""
    return _optimum(value, tolerance, note=note or "no location printed")


def unstated(note="") -> KnownOptimum:
    return _optimum(None, EXACT, status=OptimumStatus.unstated, note=note or "optimum not stated")


def filled(*values: float) -> Callable[[int], List[Vector]]:
    """Pattern placing each given constant in every coordinate, one point per constant."""
    return lambda n: [tuple([float(v)] * n) for v in values]


def origin(n: int) -> List[Vector]:
    return [tuple([0.0] * n)]


def ones(n: int) -> List[Vector]:
    return [tuple([1.0] * n)]


def sign_combinations(magnitudes: Sequence[float]) -> List[Vector]:
    """Every sign pattern of the given magnitudes, zero magnitudes taken once."""
    choices = [(m,) if m == 0 else (m, -m) for m in magnitudes]
    return [tuple(float(v) for v in combo) for combo in itertools.product(*choices)]


def define(
    registry: List[FunctionSpec],
    index: int,
    slug: str,
    name: str,
    *,
    header: str,
    dimension: DimensionRule,
    bounds: Bounds,
    optima: Sequence[KnownOptimum],
    cite: str = "",
    note: str = "",
    stochastic: bool = False,
    noise_fill: float = 0.0,
    noise_per_coordinate: bool = False,
    parameters: Optional[Dict[str, float]] = None,
):
    """Decorator registering an evaluator ``f(x, **parameters)`` (stochastic: ``f(x, draws, ...)``)."""

    def wrap(fn):
        registry.append(
            FunctionSpec(
                id=FunctionId(index, slug),
                display_name=name,
                dimension=dimension,
                bounds=bounds,
                flags=PropertyFlags.from_header(header),
                optima=tuple(optima),
                evaluator=fn,
                stochastic=stochastic,
                citation_tag=cite,
                note=note,
                parameters=MappingProxyType(dict(parameters or {})),
                noise_fill=noise_fill,
                noise_per_coordinate=noise_per_coordinate,
            )
        )
        return fn

    return wrap
