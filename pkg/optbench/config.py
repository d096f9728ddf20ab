import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from optbench.api.config import DEParams, NelderMeadParams
from optbench.exceptions import ManifestException, UnknownFunction
from optbench.registry import FunctionSpec, lookup

OPTIMIZER_ALIASES = {
    "random_search": "random_search",
    "random-search": "random_search",
    "nelder_mead": "nelder_mead",
    "nelder-mead": "nelder_mead",
    "differential_evolution": "differential_evolution",
    "differential-evolution": "differential_evolution",
    "de": "differential_evolution",
}

_PARAM_TYPES = {
    "random_search": None,
    "nelder_mead": NelderMeadParams,
    "differential_evolution": DEParams,
}

_MANIFEST_KEYS = {"functions", "optimizers", "dimensions", "budget", "seeds", "thresholds"}


def _map_type(value, val_type):
    if isinstance(value, bool):
        raise ValueError(f"Invalid numeric value: {value}")
    if val_type is int:
        if float(value) != int(float(value)):
            raise ValueError(f"Invalid integer value: {value}")
        return int(float(value))
    return val_type(value)


@dataclass(frozen=True)
class OptimizerEntry:
    name: str
    params: Any = None  # NelderMeadParams, DEParams or None

    def as_dict(self) -> Dict:
        return {"name": self.name, "params": dataclasses.asdict(self.params) if self.params is not None else {}}


@dataclass
class SuiteManifest:
    functions: List[FunctionSpec] = field(default_factory=list)
    optimizers: List[OptimizerEntry] = field(default_factory=list)
    dimensions: Optional[List[int]] = None
    budget: int = 1000
    seeds: List[int] = field(default_factory=lambda: [0])
    thresholds: Dict[int, float] = field(default_factory=dict)

    def dimensions_for(self, spec: FunctionSpec) -> List[int]:
        if self.dimensions is None:
            return [spec.dimension.default]
        return [d for d in self.dimensions if spec.dimension.accepts(d)]


def _optimizer_entry(raw, position: int, errors: List[str]) -> Optional[OptimizerEntry]:
    if isinstance(raw, str):
        raw = {"name": raw}
    if not isinstance(raw, dict) or "name" not in raw:
        errors.append(f"optimizers[{position}]: expected an object with a 'name'")
        return None
    name = OPTIMIZER_ALIASES.get(str(raw["name"]).strip().lower())
    if name is None:
        errors.append(f"optimizers[{position}]: unknown optimizer {raw['name']!r} (expected one of {', '.join(_PARAM_TYPES)})")
        return None
    given = raw.get("params") or {}
    if not isinstance(given, dict):
        errors.append(f"optimizers[{position}]: params must be an object")
        return None
    param_type = _PARAM_TYPES[name]
    if param_type is None:
        if given:
            errors.append(f"optimizers[{position}]: {name} takes no parameters, got {', '.join(given)}")
        return OptimizerEntry(name)
    field_types = {f.name: f.type for f in dataclasses.fields(param_type)}
    kwargs = {}
    for key, value in given.items():
        if key not in field_types:
            errors.append(f"optimizers[{position}]: unknown {name} parameter {key!r}")
            continue
        val_type = field_types[key]
        try:
            kwargs[key] = _map_type(value, val_type)
        except (TypeError, ValueError):
            errors.append(f"optimizers[{position}]: parameter {key!r} must be {val_type.__name__}, got {value!r}")
    return OptimizerEntry(name, param_type(**kwargs))


def _int_list(raw, name: str, errors: List[str], minimum: int) -> List[int]:
    if not isinstance(raw, list):
        errors.append(f"{name}: expected a list of integers")
        return []
    values = []
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
            errors.append(f"{name}: {v!r} is not an integer >= {minimum}")
        else:
            values.append(v)
    return values


def check_manifest(raw: Any) -> SuiteManifest:
    """Validate a decoded manifest document. Every problem is collected before raising ManifestException."""
    errors: List[str] = []
    if not isinstance(raw, dict):
        raise ManifestException("Manifest must be a JSON object", [f"got {type(raw).__name__}"])
    for key in sorted(set(raw) - _MANIFEST_KEYS):
        errors.append(f"unknown manifest key {key!r}")

    specs: List[FunctionSpec] = []
    functions = raw.get("functions", [])
    if not isinstance(functions, list):
        errors.append("functions: expected a list of ids or slugs")
        functions = []
    for key in functions:
        try:
            specs.append(lookup(key))
        except UnknownFunction as e:
            errors.append(f"functions: {e}")

    optimizers_raw = raw.get("optimizers", [])
    if not isinstance(optimizers_raw, list):
        errors.append("optimizers: expected a list")
        optimizers_raw = []
    optimizers = [o for o in (_optimizer_entry(r, i, errors) for i, r in enumerate(optimizers_raw)) if o is not None]

    dimensions = _int_list(raw["dimensions"], "dimensions", errors, 1) if "dimensions" in raw else None
    seeds = _int_list(raw.get("seeds", [0]), "seeds", errors, 0)
    budget = raw.get("budget", 1000)
    if isinstance(budget, bool) or not isinstance(budget, int) or budget < 1:
        errors.append(f"budget: {budget!r} is not an integer >= 1")
        budget = 1

    thresholds: Dict[int, float] = {}
    raw_thresholds = raw.get("thresholds", {})
    if not isinstance(raw_thresholds, dict):
        errors.append("thresholds: expected an object mapping functions to target values")
        raw_thresholds = {}
    for key, value in raw_thresholds.items():
        try:
            thresholds[lookup(key).index] = float(value)
        except UnknownFunction as e:
            errors.append(f"thresholds: {e}")
        except (TypeError, ValueError):
            errors.append(f"thresholds: {value!r} for {key!r} is not a number")

    manifest = SuiteManifest(specs, optimizers, dimensions, budget, seeds, thresholds)
    for spec in specs:
        if dimensions is not None and not manifest.dimensions_for(spec):
            errors.append(f"functions: f{spec.index} {spec.display_name} accepts none of the dimensions {dimensions}")
        for entry in optimizers:
            if entry.name == "differential_evolution":
                for dim in manifest.dimensions_for(spec):
                    pop = max(4, entry.params.population_factor * dim)
                    if budget < pop:
                        errors.append(f"budget: {budget} is below the DE population {pop} for f{spec.index} at D={dim}")
    if errors:
        raise ManifestException(f"Invalid manifest ({len(errors)} problem{'s' if len(errors) != 1 else ''})", errors)
    return manifest


def load_manifest(path: Union[str, Path]) -> SuiteManifest:
    path = Path(path)
    if not path.exists():
        raise ManifestException(f"Manifest not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ManifestException(f"Manifest {path} is not valid JSON", [str(e)]) from e
    return check_manifest(raw)
