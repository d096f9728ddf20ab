import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from optbench.api.config import DEParams, NelderMeadParams
from optbench.config import OptimizerEntry, SuiteManifest
from optbench.functions.base import EvalContext
from optbench.optimize.budget import Budget, RunResult
from optbench.optimize.differential_evolution import differential_evolution
from optbench.optimize.nelder_mead import nelder_mead
from optbench.optimize.random_search import random_search
from optbench.registry import FunctionSpec
from optbench.utils import logger
from optbench.utils.definitions import format_float, jsonable
from optbench.utils.fn import do_parallel

# margin above the claimed optimum that still counts as a success
SUCCESS_MARGIN = 1e-3

RESULT_COLUMNS = ["fn", "optimizer", "dim", "seed", "best_value", "evals", "success"]
SUMMARY_COLUMNS = ["fn", "slug", "optimizer", "dim", "runs", "successes", "success_rate", "median_best"]


def _random_search(spec: FunctionSpec, entry: OptimizerEntry, dim: int, seed: int, budget: int) -> RunResult:
    return random_search(spec, dim, Budget(budget), seed)


def _differential_evolution(spec: FunctionSpec, entry: OptimizerEntry, dim: int, seed: int, budget: int) -> RunResult:
    return differential_evolution(spec, dim, Budget(budget), seed, entry.params or DEParams())


def _nelder_mead(spec: FunctionSpec, entry: OptimizerEntry, dim: int, seed: int, budget: int) -> RunResult:
    # start from a seed-derived uniform point in the box
    lower, upper = spec.bounds.arrays(dim)
    start = EvalContext(seed).generator().uniform(lower, upper)
    return nelder_mead(spec, start, Budget(budget), entry.params or NelderMeadParams(), seed)


RUNNERS: Dict[str, Callable[[FunctionSpec, OptimizerEntry, int, int, int], RunResult]] = {
    "random_search": _random_search,
    "nelder_mead": _nelder_mead,
    "differential_evolution": _differential_evolution,
}


def default_threshold(spec: FunctionSpec, dim: int) -> Optional[float]:
    """Claimed optimum plus SUCCESS_MARGIN, when the audit confirms the claim at the default dimension."""
    # verify builds on this package, so it is imported on use
    from optbench.verify import AuditStatus, check_minimum

    confirmed = [r for r in check_minimum(spec) if r.status in (AuditStatus.verified, AuditStatus.corrected)]
    if not confirmed:
        return None
    if dim == spec.dimension.default:
        return min(r.claimed for r in confirmed) + SUCCESS_MARGIN
    values = [o.value_at(dim) for o in spec.concrete_optima if o.value_at(dim) is not None]
    return min(values) + SUCCESS_MARGIN if values else None


@dataclass
class SuiteRun:
    result: RunResult
    threshold: Optional[float] = None

    @property
    def success(self) -> Optional[bool]:
        if self.threshold is None:
            return None
        return bool(self.result.score <= self.threshold)

    def as_dict(self) -> Dict:
        return {**self.result.as_dict(), "threshold": self.threshold, "success": self.success}


@dataclass
class SuiteReport:
    runs: List[SuiteRun] = field(default_factory=list)

    @property
    def results(self) -> List[RunResult]:
        return [r.result for r in self.runs]

    def summary(self) -> pd.DataFrame:
        """Per function, optimizer and dimension: run count, successes, success rate and median score."""
        if not self.runs:
            return pd.DataFrame(columns=SUMMARY_COLUMNS)
        df = pd.DataFrame(
            [
                {
                    "fn": r.result.function.index,
                    "slug": r.result.function.slug,
                    "optimizer": r.result.optimizer,
                    "dim": r.result.dimension,
                    "success": math.nan if r.success is None else float(r.success),
                    "score": r.result.score,
                }
                for r in self.runs
            ]
        )
        grouped = df.groupby(["fn", "slug", "optimizer", "dim"], sort=False)
        summary = grouped.agg(
            runs=("score", "size"),
            successes=("success", lambda s: int(s.sum(skipna=True))),
            success_rate=("success", "mean"),
            median_best=("score", "median"),
        ).reset_index()
        return summary[SUMMARY_COLUMNS]

    def summary_records(self) -> List[Dict]:
        return [
            {k: (v.item() if hasattr(v, "item") else v) for k, v in row.items()}
            for row in self.summary().to_dict(orient="records")
        ]

    def results_json(self) -> str:
        return json.dumps(jsonable([r.as_dict() for r in self.runs]), indent=2) + "\n"

    def results_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(RESULT_COLUMNS)
        for run in self.runs:
            r = run.result
            success = "" if run.success is None else ("true" if run.success else "false")
            writer.writerow([r.function.index, r.optimizer, r.dimension, r.seed, format_float(r.best_value), r.evaluations_used, success])
        return buf.getvalue()

    def summary_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SUMMARY_COLUMNS)
        for row in self.summary_records():
            writer.writerow([format_float(v) if isinstance(v, float) else v for v in (row[c] for c in SUMMARY_COLUMNS)])
        return buf.getvalue()


def run_suite(manifest: SuiteManifest, workers: int = 1, spinner: bool = False) -> SuiteReport:
    """Run functions x optimizers x dimensions x seeds in manifest order."""
    tasks: List[Tuple[FunctionSpec, OptimizerEntry, int, int]] = [
        (spec, entry, dim, seed)
        for spec in manifest.functions
        for entry in manifest.optimizers
        for dim in manifest.dimensions_for(spec)
        for seed in manifest.seeds
    ]
    thresholds: Dict[Tuple[int, int], Optional[float]] = {}
    for spec, _, dim, _ in tasks:
        if (spec.index, dim) not in thresholds:
            given = manifest.thresholds.get(spec.index)
            thresholds[(spec.index, dim)] = given if given is not None else default_threshold(spec, dim)
    logger.fs.info(f"suite: {len(tasks)} runs, budget {manifest.budget}, {workers} worker(s)")

    def run(task) -> SuiteRun:
        spec, entry, dim, seed = task
        result = RUNNERS[entry.name](spec, entry, dim, seed, manifest.budget)
        if result.aborted:
            logger.fs.warning(f"{entry.name} on f{spec.index} D={dim} seed={seed} aborted: {result.note}")
        return SuiteRun(result, thresholds[(spec.index, dim)])

    return SuiteReport(do_parallel(run, tasks, n=workers, desc="Running suite", spinner=spinner))
