"""Immutable catalog of the 175 benchmark functions and their metadata.

Entries are declared next to their evaluators in ``optbench.functions`` and
collected here once; every other module reads metadata through ``lookup`` and
``filter``.
"""

import csv
import functools
import io
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from optbench.exceptions import DimensionMismatch, OptbenchException, UnknownFunction

CATALOG_SIZE = 175

Vector = Tuple[float, ...]


class _HeaderEnum(Enum):
    @classmethod
    def from_str(cls, value: str):
        key = re.sub(r"[\s_\-]", "", str(value)).lower()
        for member in cls:
            if key in (member.name.replace("_", ""), member.value.lower()):
                return member
        raise ValueError(f"Invalid {cls.__name__} value: {value!r} (expected one of {', '.join(m.name for m in cls)})")

    def __str__(self):
        return self.value


class Continuity(_HeaderEnum):
    continuous = "Continuous"
    discontinuous = "Discontinuous"
    unstated = "Unstated"


class Differentiability(_HeaderEnum):
    differentiable = "Differentiable"
    non_differentiable = "NonDifferentiable"
    unstated = "Unstated"


class Separability(_HeaderEnum):
    separable = "Separable"
    partially_separable = "PartiallySeparable"
    non_separable = "NonSeparable"
    unstated = "Unstated"


class Scalability(_HeaderEnum):
    scalable = "Scalable"
    non_scalable = "NonScalable"
    unstated = "Unstated"


class Modality(_HeaderEnum):
    unimodal = "Unimodal"
    multimodal = "Multimodal"
    unstated = "Unstated"


class OptimumStatus(_HeaderEnum):
    claimed = "Claimed"
    verified = "Verified"
    corrected = "Corrected"
    discrepant = "Discrepant"
    unstated = "Unstated"


# header words, normalised to lowercase without spaces
_HEADER_WORDS = {
    "continuous": ("continuity", Continuity.continuous),
    "discontinuous": ("continuity", Continuity.discontinuous),
    "differentiable": ("differentiability", Differentiability.differentiable),
    "non-differentiable": ("differentiability", Differentiability.non_differentiable),
    "separable": ("separability", Separability.separable),
    "partially-separable": ("separability", Separability.partially_separable),
    "non-separable": ("separability", Separability.non_separable),
    "separable?": ("separability", Separability.unstated),
    "scalable": ("scalability", Scalability.scalable),
    "non-scalable": ("scalability", Scalability.non_scalable),
    "unimodal": ("modality", Modality.unimodal),
    "multimodal": ("modality", Modality.multimodal),
}


@dataclass(frozen=True)
class PropertyFlags:
    continuity: Continuity = Continuity.unstated
    differentiability: Differentiability = Differentiability.unstated
    separability: Separability = Separability.unstated
    scalability: Scalability = Scalability.unstated
    modality: Modality = Modality.unstated

    @staticmethod
    def from_header(header: str) -> "PropertyFlags":
        """Parse an item header such as "Continuous, Differentiable, Non-Separable, Scalable, Multimodal"."""
        found: Dict[str, Enum] = {}
        for word in re.split(r"[,\s]+", header.strip().lower().replace("‐", "-")):
            if not word:
                continue
            if word not in _HEADER_WORDS:
                raise ValueError(f"Unknown header attribute {word!r} in {header!r}")
            attr, value = _HEADER_WORDS[word]
            if attr in found:
                raise ValueError(f"Header {header!r} states {attr} twice")
            found[attr] = value
        return PropertyFlags(**found)  # type: ignore

    def as_dict(self) -> Dict[str, str]:
        return {
            "continuity": self.continuity.value,
            "differentiability": self.differentiability.value,
            "separability": self.separability.value,
            "scalability": self.scalability.value,
            "modality": self.modality.value,
        }


@dataclass(frozen=True)
class FunctionId:
    index: int
    slug: str

    def __post_init__(self):
        if not 1 <= self.index <= CATALOG_SIZE:
            raise ValueError(f"Function index {self.index} outside [1, {CATALOG_SIZE}]")
        if not re.fullmatch(r"[a-z0-9]+(-[a-z0-9]+)*", self.slug):
            raise ValueError(f"Slug {self.slug!r} is not lowercase-hyphenated")

    def __str__(self):
        return f"f{self.index}:{self.slug}"


@dataclass(frozen=True)
class Fixed:
    n: int

    @property
    def default(self) -> int:
        return self.n

    def accepts(self, dimension: int) -> bool:
        return dimension == self.n

    def describe(self) -> str:
        return f"fixed:{self.n}"

    def as_dict(self) -> Dict:
        return {"kind": "fixed", "n": self.n}


@dataclass(frozen=True)
class Scalable:
    default_n: int
    min_n: int = 1
    max_n: Optional[int] = None
    multiple_of: int = 1

    def __post_init__(self):
        if self.min_n < 1 or self.default_n < self.min_n or self.multiple_of < 1:
            raise ValueError(f"Invalid scalable rule {self}")
        if self.max_n is not None and self.default_n > self.max_n:
            raise ValueError(f"Invalid scalable rule {self}")
        if self.default_n % self.multiple_of:
            raise ValueError(f"Invalid scalable rule {self}")

    @property
    def default(self) -> int:
        return self.default_n

    def accepts(self, dimension: int) -> bool:
        if dimension % self.multiple_of:
            return False
        return dimension >= self.min_n and (self.max_n is None or dimension <= self.max_n)

    def describe(self) -> str:
        text = f"scalable:{self.default_n}:{self.min_n}"
        if self.max_n is not None:
            text = f"{text}:{self.max_n}"
        return text if self.multiple_of == 1 else f"{text} (multiple of {self.multiple_of})"

    def as_dict(self) -> Dict:
        record = {"kind": "scalable", "default_n": self.default_n, "min_n": self.min_n, "max_n": self.max_n}
        if self.multiple_of != 1:
            record["multiple_of"] = self.multiple_of
        return record


DimensionRule = Union[Fixed, Scalable]


def check_dimension(rule: DimensionRule, dimension: int, name: str = "function"):
    if not rule.accepts(dimension):
        raise DimensionMismatch(f"{name} does not accept dimension {dimension}", expected=rule.describe(), got=dimension)


@dataclass(frozen=True)
class Bounds:
    """Box constraints; a single (lower, upper) pair applies to every coordinate."""

    lower: Vector
    upper: Vector

    def __post_init__(self):
        if len(self.lower) != len(self.upper) or len(self.lower) == 0:
            raise ValueError("Bounds need matching, non-empty lower/upper vectors")
        if any(lo >= hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError(f"Bounds require lower < upper on every coordinate: {self.lower} / {self.upper}")

    @staticmethod
    def uniform(lower: float, upper: float) -> "Bounds":
        return Bounds((float(lower),), (float(upper),))

    @staticmethod
    def per_coordinate(*pairs: Tuple[float, float]) -> "Bounds":
        return Bounds(tuple(float(lo) for lo, _ in pairs), tuple(float(hi) for _, hi in pairs))

    @property
    def is_uniform(self) -> bool:
        return len(self.lower) == 1

    def arrays(self, dimension: int) -> Tuple[np.ndarray, np.ndarray]:
        if self.is_uniform:
            return np.full(dimension, self.lower[0]), np.full(dimension, self.upper[0])
        if dimension != len(self.lower):
            raise DimensionMismatch(f"bounds are defined for {len(self.lower)} coordinates", expected=str(len(self.lower)), got=dimension)
        return np.array(self.lower), np.array(self.upper)

    def width(self, dimension: int) -> np.ndarray:
        lo, hi = self.arrays(dimension)
        return hi - lo

    def contains(self, x: Sequence[float], atol: float = 0.0) -> bool:
        lo, hi = self.arrays(len(x))
        arr = np.asarray(x, dtype=float)
        return bool(np.all(arr >= lo - atol) and np.all(arr <= hi + atol))

    def clamp(self, x: Sequence[float]) -> np.ndarray:
        lo, hi = self.arrays(len(x))
        return np.clip(np.asarray(x, dtype=float), lo, hi)

    def as_dict(self, dimension: int) -> Dict:
        lo, hi = self.arrays(dimension)
        return {"lower": [float(v) for v in lo], "upper": [float(v) for v in hi]}


PointPattern = Callable[[int], Sequence[Sequence[float]]]


@dataclass(frozen=True)
class KnownOptimum:
    """A claimed minimizer set and its value.

    ``locations`` holds explicit points for fixed-dimension entries. Scalable entries use
    ``pattern`` (dimension -> points) and, when the value depends on D, ``value_rule``.
    ``family`` describes symbolic infinite sets whose ``pattern`` yields sampled representatives.
    """

    value: Optional[float]
    value_tolerance: float
    locations: Tuple[Vector, ...] = ()
    pattern: Optional[PointPattern] = field(default=None, compare=False, repr=False)
    value_rule: Optional[Callable[[int], float]] = field(default=None, compare=False, repr=False)
    family: Optional[str] = None
    status: OptimumStatus = OptimumStatus.claimed
    note: str = ""

    def points(self, dimension: int) -> List[Vector]:
        if self.pattern is not None:
            return [tuple(float(v) for v in p) for p in self.pattern(dimension)]
        return [p for p in self.locations if len(p) == dimension]

    def value_at(self, dimension: int) -> Optional[float]:
        if self.value_rule is not None:
            return float(self.value_rule(dimension))
        return self.value

    @property
    def concrete(self) -> bool:
        return self.status != OptimumStatus.unstated and (bool(self.locations) or self.pattern is not None)

    def as_dict(self, dimension: int) -> Dict:
        return {
            "value": self.value_at(dimension),
            "value_tolerance": self.value_tolerance,
            "locations": [list(p) for p in self.points(dimension)],
            "family": self.family,
            "status": self.status.value,
            "note": self.note,
        }


@dataclass(frozen=True)
class FunctionSpec:
    id: FunctionId
    display_name: str
    dimension: DimensionRule
    bounds: Bounds
    flags: PropertyFlags
    optima: Tuple[KnownOptimum, ...]
    evaluator: Callable = field(compare=False, repr=False)
    stochastic: bool = False
    citation_tag: str = ""
    note: str = ""
    parameters: Mapping[str, float] = field(default_factory=lambda: MappingProxyType({}), compare=False)
    # value every suppressed random draw takes, and how many draws one evaluation consumes
    noise_fill: float = 0.0
    noise_per_coordinate: bool = False

    @property
    def index(self) -> int:
        return self.id.index

    @property
    def slug(self) -> str:
        return self.id.slug

    @property
    def concrete_optima(self) -> List[KnownOptimum]:
        return [o for o in self.optima if o.concrete]

    def check_dimension(self, dimension: int):
        check_dimension(self.dimension, dimension, name=f"f{self.index} {self.display_name}")

    def to_record(self) -> Dict:
        dim = self.dimension.default
        return {
            "index": self.index,
            "slug": self.slug,
            "name": self.display_name,
            "dimension": self.dimension.as_dict(),
            "bounds": self.bounds.as_dict(dim),
            "flags": self.flags.as_dict(),
            "optima": [o.as_dict(dim) for o in self.optima],
            "stochastic": self.stochastic,
            "note": self.note,
        }


class Catalog:
    def __init__(self, specs: Iterable[FunctionSpec]):
        self.specs: Tuple[FunctionSpec, ...] = tuple(sorted(specs, key=lambda s: s.index))
        self._by_index = {s.index: s for s in self.specs}
        self._by_slug = {s.slug: s for s in self.specs}
        self.check_catalog()

    def check_catalog(self):
        errors = []
        if len(self._by_index) != len(self.specs):
            errors.append("duplicate indices")
        if len(self._by_slug) != len(self.specs):
            errors.append("duplicate slugs")
        if set(self._by_index) != set(range(1, CATALOG_SIZE + 1)):
            missing = sorted(set(range(1, CATALOG_SIZE + 1)) - set(self._by_index))
            errors.append(f"indices must be exactly 1..{CATALOG_SIZE}; missing {missing}")
        for spec in self.specs:
            if spec.stochastic != (spec.index in (100, 169)):
                errors.append(f"f{spec.index} has an unexpected stochastic flag")
        if errors:
            raise OptbenchException("Invalid catalog: " + "; ".join(errors))

    def __len__(self):
        return len(self.specs)

    def __iter__(self):
        return iter(self.specs)

    def lookup(self, key: Union[FunctionId, FunctionSpec, str, int]) -> FunctionSpec:
        if isinstance(key, FunctionSpec):
            return key
        if isinstance(key, FunctionId):
            spec = self._by_index.get(key.index)
            if spec is None or spec.slug != key.slug:
                raise UnknownFunction(f"No function with id {key}")
            return spec
        if isinstance(key, (int, np.integer)) and not isinstance(key, bool):
            if int(key) in self._by_index:
                return self._by_index[int(key)]
            raise UnknownFunction(f"No function with index {key}")
        if isinstance(key, str):
            text = key.strip().lower()
            match = re.fullmatch(r"f?(\d+)", text)
            if match and int(match.group(1)) in self._by_index:
                return self._by_index[int(match.group(1))]
            if text in self._by_slug:
                return self._by_slug[text]
            raise UnknownFunction(f"No function named {key!r}")
        raise UnknownFunction(f"Cannot look up a function by {type(key).__name__}")


@functools.lru_cache(maxsize=None)
def get_catalog() -> Catalog:
    from optbench.functions import all_specs

    return Catalog(all_specs())


def lookup(key: Union[FunctionId, FunctionSpec, str, int]) -> FunctionSpec:
    return get_catalog().lookup(key)


def filter(
    continuity: Optional[Continuity] = None,
    differentiability: Optional[Differentiability] = None,
    separability: Optional[Separability] = None,
    scalability: Optional[Scalability] = None,
    modality: Optional[Modality] = None,
    dimension: Optional[DimensionRule] = None,
    accepts: Optional[int] = None,
    stochastic: Optional[bool] = None,
) -> List[FunctionSpec]:
    """All specs matching every given predicate, ordered by index."""
    predicates: List[Callable[[FunctionSpec], bool]] = []
    for attr, wanted in (
        ("continuity", continuity),
        ("differentiability", differentiability),
        ("separability", separability),
        ("scalability", scalability),
        ("modality", modality),
    ):
        if wanted is not None:
            predicates.append(lambda s, attr=attr, wanted=wanted: getattr(s.flags, attr) == wanted)
    if dimension is not None:
        predicates.append(lambda s: s.dimension == dimension)
    if accepts is not None:
        predicates.append(lambda s: s.dimension.accepts(accepts))
    if stochastic is not None:
        predicates.append(lambda s: s.stochastic == stochastic)
    return [s for s in get_catalog() if all(p(s) for p in predicates)]


CSV_COLUMNS = ["index", "slug", "name", "dimension", "bounds", "flags", "optima", "stochastic", "note"]


def _compact(obj) -> str:
    from optbench.utils.definitions import jsonable

    return json.dumps(jsonable(obj), separators=(",", ":"))


def catalog_export(fmt: str = "json", specs: Optional[Sequence[FunctionSpec]] = None) -> str:
    """Metadata table without formulas, ordered by index, deterministic text."""
    from optbench.utils.definitions import jsonable

    chosen = get_catalog().specs if specs is None else tuple(specs)
    records = [s.to_record() for s in chosen]
    if fmt == "json":
        return json.dumps(jsonable(records), indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for spec, record in zip(chosen, records):
            writer.writerow(
                [
                    record["index"],
                    record["slug"],
                    record["name"],
                    spec.dimension.describe(),
                    _compact(record["bounds"]),
                    _compact(record["flags"]),
                    _compact(record["optima"]),
                    "true" if record["stochastic"] else "false",
                    record["note"],
                ]
            )
        return buf.getvalue()
    raise ValueError(f"Unknown catalog format {fmt!r} (expected json or csv)")
