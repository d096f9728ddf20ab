import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from optbench.exceptions import DomainError
from optbench.functions import SUPPRESS, FunctionKey, evaluate
from optbench.functions.base import EvalContext, NoisePolicy
from optbench.registry import FunctionId, FunctionSpec, lookup
from optbench.utils.definitions import checkpoints


@dataclass(frozen=True)
class Budget:
    max_evaluations: int

    def __post_init__(self):
        if int(self.max_evaluations) < 1:
            raise ValueError(f"Budget needs at least one evaluation, got {self.max_evaluations}")


class BudgetExhausted(Exception):
    """Raised by CountingObjective when the next evaluation would exceed the budget."""


class CountingObjective:
    """The only path from an optimizer to a formula: counts evaluations, enforces the budget
    and records the best point with a checkpointed best-so-far trajectory.

    Stochastic entries are sampled with sub-seed (seed, evaluation index), so re-evaluating the
    best point with its index reproduces ``best_value``.
    """

    def __init__(self, key: FunctionKey, dimension: int, budget: Budget, seed: int = 0, domain_errors: str = "inf"):
        self.spec: FunctionSpec = lookup(key)
        self.spec.check_dimension(dimension)
        self.dimension = int(dimension)
        self.budget = budget
        self.ctx = EvalContext(seed, NoisePolicy.sample) if self.spec.stochastic else SUPPRESS
        self.domain_errors = domain_errors
        self.evaluations = 0
        self.best_point: Optional[np.ndarray] = None
        self.best_value = math.inf
        self.best_index: Optional[int] = None
        self._marks = set(checkpoints(budget.max_evaluations))
        self.trajectory: List[Tuple[int, float]] = []

    @property
    def remaining(self) -> int:
        return self.budget.max_evaluations - self.evaluations

    def __call__(self, x: np.ndarray) -> float:
        if self.evaluations >= self.budget.max_evaluations:
            raise BudgetExhausted(f"budget of {self.budget.max_evaluations} evaluations spent")
        index = self.evaluations
        self.evaluations += 1
        try:
            value = evaluate(self.spec, x, self.ctx, stream=index)
        except DomainError:
            if self.domain_errors == "raise":
                self._mark()
                raise
            value = math.inf
        if value < self.best_value or self.best_point is None:
            self.best_point, self.best_value, self.best_index = np.array(x, dtype=float), value, index
        self._mark()
        return value

    def _mark(self):
        if self.evaluations in self._marks:
            self.trajectory.append((self.evaluations, self.best_value))

    def close(self):
        """Record the final count when the run stopped before the budget."""
        if self.evaluations and (not self.trajectory or self.trajectory[-1][0] != self.evaluations):
            self.trajectory.append((self.evaluations, self.best_value))


@dataclass
class RunResult:
    function: FunctionId
    optimizer: str
    dimension: int
    seed: int
    best_point: Tuple[float, ...]
    best_value: float
    evaluations_used: int
    budget: int
    trajectory: List[Tuple[int, float]] = field(default_factory=list)
    score: float = math.nan  # noise-free value at best_point
    aborted: bool = False
    note: str = ""

    @staticmethod
    def from_objective(objective: CountingObjective, optimizer: str, seed: int, aborted: bool = False, note: str = "") -> "RunResult":
        objective.close()
        spec = objective.spec
        point = tuple(float(v) for v in objective.best_point) if objective.best_point is not None else ()
        score = objective.best_value
        if spec.stochastic and point:
            score = evaluate(spec, point, SUPPRESS)
        return RunResult(
            function=spec.id,
            optimizer=optimizer,
            dimension=objective.dimension,
            seed=seed,
            best_point=point,
            best_value=objective.best_value,
            evaluations_used=objective.evaluations,
            budget=objective.budget.max_evaluations,
            trajectory=list(objective.trajectory),
            score=score,
            aborted=aborted,
            note=note,
        )

    def as_dict(self) -> Dict:
        return {
            "fn": self.function.index,
            "slug": self.function.slug,
            "optimizer": self.optimizer,
            "dim": self.dimension,
            "seed": self.seed,
            "best_point": list(self.best_point),
            "best_value": self.best_value,
            "score": self.score,
            "evals": self.evaluations_used,
            "budget": self.budget,
            "trajectory": [[i, v] for i, v in self.trajectory],
            "aborted": self.aborted,
            "note": self.note,
        }
