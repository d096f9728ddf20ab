"""Audit of claimed optima against their tolerance tiers, and the errata ledger built from the audit."""

import csv
import io
import json
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib.resources import path
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from optbench.api.config import AuditConfig, NelderMeadParams
from optbench.calculus import stationarity_residual
from optbench.exceptions import DomainError, OptbenchException
from optbench.functions import SUPPRESS, FunctionKey, evaluate
from optbench.optimize.nelder_mead import simplex_search
from optbench.registry import Fixed, FunctionId, FunctionSpec, KnownOptimum, OptimumStatus, Scalability, Scalable, get_catalog, lookup
from optbench.utils import logger
from optbench.utils.definitions import format_float, format_point, jsonable
from optbench.utils.fn import do_parallel
from optbench.utils.timer import Timer


class AuditStatus(Enum):
    verified = "Verified"
    corrected = "Corrected"
    discrepant = "Discrepant"
    unverifiable = "Unverifiable"

    def __str__(self):
        return self.value


# aggregate status of a function: the worst of its records wins
_SEVERITY = [AuditStatus.verified, AuditStatus.corrected, AuditStatus.unverifiable, AuditStatus.discrepant]


@dataclass(frozen=True)
class AuditRecord:
    function: FunctionId
    point: Optional[Tuple[float, ...]]
    claimed: Optional[float]
    evaluated: Optional[float]
    residual: Optional[float]
    refined: Optional[Tuple[float, ...]]
    refined_value: Optional[float]
    stationarity: Optional[float]
    tolerance: float
    status: AuditStatus
    note: str = ""

    @property
    def improvement(self) -> float:
        if self.evaluated is None or self.refined_value is None:
            return 0.0
        gain = self.evaluated - self.refined_value
        return gain if math.isfinite(gain) else 0.0

    def as_dict(self) -> Dict:
        return {
            "fn": self.function.index,
            "slug": self.function.slug,
            "point": list(self.point) if self.point is not None else None,
            "claimed": self.claimed,
            "evaluated": self.evaluated,
            "residual": self.residual,
            "refined": list(self.refined) if self.refined is not None else None,
            "refined_value": self.refined_value,
            "stationarity": self.stationarity,
            "tolerance": self.tolerance,
            "status": self.status.value,
            "note": self.note,
        }


def _join(*parts: str) -> str:
    return "; ".join(p for p in parts if p)


def _classify(residual: float, improvement: float, tol: float, optimum: KnownOptimum, config: AuditConfig) -> Tuple[AuditStatus, str]:
    if not residual <= tol:
        return AuditStatus.discrepant, f"value differs from the claim by {format_float(residual)}"
    if improvement > config.discrepancy_factor * tol:
        return AuditStatus.discrepant, f"local refinement lowers the value by {format_float(improvement)}"
    if improvement > tol:
        return AuditStatus.unverifiable, f"local refinement lowers the value by {format_float(improvement)}, within {config.discrepancy_factor:g}x tolerance"
    if optimum.status == OptimumStatus.corrected:
        return AuditStatus.corrected, ""
    return AuditStatus.verified, ""


def _audit_point(
    spec: FunctionSpec, point: Tuple[float, ...], claimed: float, tol: float, optimum: KnownOptimum, config: AuditConfig
) -> AuditRecord:
    dim = len(point)
    lower, upper = spec.bounds.arrays(dim)
    outside = "" if spec.bounds.contains(point, atol=1e-12) else "claimed point lies outside the box"
    context = _join(optimum.note, f"family: {optimum.family}" if optimum.family else "", outside)
    try:
        evaluated = evaluate(spec, point, SUPPRESS)
    except DomainError as e:
        return AuditRecord(spec.id, point, claimed, None, None, None, None, None, tol, AuditStatus.unverifiable, _join(f"evaluation failed: {e}", context))
    residual = abs(evaluated - claimed)

    def objective(x: np.ndarray) -> float:
        try:
            return evaluate(spec, x, SUPPRESS)
        except DomainError:
            return math.inf

    refined, refined_value, _ = simplex_search(
        objective,
        point,
        lower,
        upper,
        NelderMeadParams(initial_scale=config.simplex_scale),
        max_iterations=config.refine_iterations,
    )
    try:
        stationarity: Optional[float] = stationarity_residual(spec, refined)
    except OptbenchException:
        stationarity = None

    record = AuditRecord(
        spec.id, point, claimed, evaluated, residual, tuple(float(v) for v in refined), refined_value, stationarity, tol, AuditStatus.verified
    )
    status, reason = _classify(residual, record.improvement, tol, optimum, config)
    return replace(record, status=status, note=_join(reason, context))


def check_minimum(
    key: FunctionKey, tol: Optional[float] = None, config: AuditConfig = AuditConfig(), dimension: Optional[int] = None
) -> List[AuditRecord]:
    """Audit every claimed location of one function, at its default dimension unless ``dimension`` is given.

    Each point is evaluated with noise suppressed, compared with the claimed value and refined by a
    short box-clamped simplex search. ``tol`` overrides the per-optimum tolerance tier.
    """
    if tol is not None and not tol > 0:
        raise ValueError(f"Audit tolerance must be positive, got {tol}")
    spec = lookup(key)
    dim = spec.dimension.default if dimension is None else dimension
    spec.check_dimension(dim)
    records: List[AuditRecord] = []
    with Timer(f"audit f{spec.index}"):
        for optimum in spec.concrete_optima:
            claimed = optimum.value_at(dim)
            tolerance = tol if tol is not None else optimum.value_tolerance
            for point in optimum.points(dim):
                if claimed is None:
                    records.append(AuditRecord(spec.id, point, None, None, None, None, None, None, tolerance, AuditStatus.unverifiable, "no value claimed"))
                else:
                    records.append(_audit_point(spec, point, claimed, tolerance, optimum, config))
        if not records:
            note = _join(*(o.note for o in spec.optima)) or "no concrete optimum printed"
            records.append(AuditRecord(spec.id, None, None, None, None, None, None, None, tol or 0.0, AuditStatus.unverifiable, note))
    for r in records:
        logger.fs.debug(f"f{spec.index} {r.status.value} at {r.point}: residual={r.residual} refined={r.refined_value}")
    return records


def _function_status(records: Sequence[AuditRecord]) -> AuditStatus:
    return max((r.status for r in records), key=_SEVERITY.index)


@dataclass
class AuditReport:
    records: List[AuditRecord] = field(default_factory=list)

    def by_function(self) -> Dict[int, List[AuditRecord]]:
        grouped: Dict[int, List[AuditRecord]] = {}
        for r in self.records:
            grouped.setdefault(r.function.index, []).append(r)
        return grouped

    def function_status(self) -> Dict[int, AuditStatus]:
        return {index: _function_status(records) for index, records in self.by_function().items()}

    def discrepant(self) -> Set[int]:
        return {index for index, status in self.function_status().items() if status == AuditStatus.discrepant}

    def summary(self) -> Dict:
        functions = self.function_status()
        return {
            "functions": len(functions),
            "records": len(self.records),
            "by_status": {s.value: sum(1 for r in self.records if r.status == s) for s in AuditStatus},
            "functions_by_status": {s.value: sum(1 for v in functions.values() if v == s) for s in AuditStatus},
        }


def audit_all(
    tol: Optional[float] = None, config: AuditConfig = AuditConfig(), workers: int = 1, specs: Optional[Sequence[FunctionSpec]] = None, spinner=False
) -> AuditReport:
    """Audit every entry with a concrete claimed optimum; records come back ordered by function index."""
    chosen = [s for s in (get_catalog().specs if specs is None else specs) if s.concrete_optima]
    chosen.sort(key=lambda s: s.index)

    def run(spec: FunctionSpec) -> List[AuditRecord]:
        try:
            return check_minimum(spec, tol, config)
        except OptbenchException as e:
            logger.fs.warning(f"audit of f{spec.index} failed: {e}")
            return [AuditRecord(spec.id, None, None, None, None, None, None, None, tol or 0.0, AuditStatus.unverifiable, f"audit failed: {e}")]

    results = do_parallel(run, chosen, n=workers, desc="Auditing optima", spinner=spinner)
    return AuditReport([r for records in results for r in records])


def report_json(records: Sequence[AuditRecord]) -> str:
    return json.dumps(jsonable([r.as_dict() for r in records]), indent=2, ensure_ascii=False) + "\n"


REPORT_COLUMNS = ["fn", "slug", "point", "claimed", "evaluated", "residual", "refined", "refined_value", "stationarity", "tolerance", "status", "note"]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return format_point(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def report_csv(records: Sequence[AuditRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for r in records:
        row = r.as_dict()
        writer.writerow([_cell(row[c]) for c in REPORT_COLUMNS])
    return buf.getvalue()


# flag-level findings that no evaluation can detect
FLAG_NOTES = {
    105: "printed partial derivative 400(x1^2 - x2)x1 - 2x1 - 2 does not match the formula's gradient -400(x2 - x1^2)x1 + 2(x1 - 1)",
    133: "separability printed as 'Separable?'",
    137: "headed Multimodal; the sphere has a single minimum",
}


def _scalability_flag(spec: FunctionSpec) -> Optional[str]:
    header = spec.flags.scalability
    if header == Scalability.scalable and isinstance(spec.dimension, Fixed):
        return f"headed Scalable but the formula fixes D={spec.dimension.n}"
    if header == Scalability.non_scalable and isinstance(spec.dimension, Scalable):
        return f"headed Non-Scalable but the formula is defined for any D >= {spec.dimension.min_n}"
    return None


def _claim_text(record: AuditRecord) -> str:
    if record.point is None:
        return ""
    return f"f({format_point(record.point)}) = {format_float(record.claimed)}" if record.claimed is not None else f"x* = ({format_point(record.point)})"


def _finding_text(record: AuditRecord) -> str:
    if record.evaluated is None:
        return record.note
    text = f"evaluates to {format_float(record.evaluated)}"
    if record.refined_value is not None and record.improvement > record.tolerance:
        text += f"; refinement reaches {format_float(record.refined_value)} at ({format_point(record.refined)})"
    return text


def errata_ledger(report: AuditReport) -> List[Dict]:
    """Corrected and Discrepant audit findings, transcription notes and flag-level findings, ordered by function index."""
    entries: List[Dict] = []
    grouped = report.by_function()
    for spec in get_catalog():
        records = grouped.get(spec.index, [])
        corrected = any(o.status == OptimumStatus.corrected for o in spec.optima)
        for r in records:
            if r.status in (AuditStatus.corrected, AuditStatus.discrepant):
                entries.append(
                    {
                        "fn": spec.index,
                        "slug": spec.slug,
                        "kind": "audit",
                        "status": r.status.value,
                        "claim": _claim_text(r),
                        "finding": _finding_text(r),
                        "policy": "canonical" if r.status == AuditStatus.corrected else "as-printed",
                        "note": r.note,
                    }
                )
        notes = [spec.note] + [o.note for o in spec.optima if o.note not in {r.note for r in records}]
        for note in dict.fromkeys(n for n in notes if n):
            entries.append(
                {
                    "fn": spec.index,
                    "slug": spec.slug,
                    "kind": "interpretation",
                    "status": _function_status(records).value if records else None,
                    "claim": "",
                    "finding": note,
                    "policy": "canonical" if corrected else "as-printed",
                    "note": "",
                }
            )
        for flag in (FLAG_NOTES.get(spec.index), _scalability_flag(spec)):
            if flag:
                entries.append(
                    {"fn": spec.index, "slug": spec.slug, "kind": "flag", "status": None, "claim": "", "finding": flag, "policy": "as-printed", "note": ""}
                )
    return entries


def ledger_json(report: AuditReport) -> str:
    return json.dumps(jsonable(errata_ledger(report)), indent=2, ensure_ascii=False) + "\n"


def load_expected_errata(source: Optional[Union[str, Path]] = None) -> Dict[int, str]:
    """Read an expected-errata file (JSON array of {fn, reason}); defaults to the packaged one."""
    if source is None:
        with path("optbench.data", "expected_errata.json") as packaged:
            text = Path(packaged).read_text()
        source = "expected_errata.json"
    else:
        source = Path(source)
        if not source.exists():
            raise OptbenchException(f"Expected-errata file not found: {source}")
        text = source.read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise OptbenchException(f"Expected-errata file {source} is not valid JSON: {e}") from e
    if not isinstance(raw, list):
        raise OptbenchException(f"Expected-errata file {source} must hold a JSON array")
    expected = {}
    for entry in raw:
        if not isinstance(entry, dict) or "fn" not in entry:
            raise OptbenchException(f"Expected-errata entry {entry!r} has no 'fn'")
        expected[lookup(entry["fn"]).index] = str(entry.get("reason", ""))
    return expected


def expected_errata_json(report: AuditReport) -> str:
    """The report's Discrepant set in the expected-errata format, one entry per function."""
    entries = []
    for index, records in sorted(report.by_function().items()):
        flagged = [r for r in records if r.status == AuditStatus.discrepant]
        if flagged:
            entries.append({"fn": index, "reason": flagged[0].note})
    return json.dumps(entries, indent=2, ensure_ascii=False) + "\n"
