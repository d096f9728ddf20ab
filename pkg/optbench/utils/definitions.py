import math
from typing import Any, Iterable, List, Sequence

# checkpoint mantissas for optimizer trajectories: 1, 2, 5, 10, 20, 50, ...
CHECKPOINT_MANTISSAS = (1, 2, 5)


def format_float(value: float) -> str:
    """Shortest decimal that round-trips a 64-bit float; integral values drop the trailing '.0'."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0.0:
        return "0"
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_point(point: Iterable[float]) -> str:
    return ",".join(format_float(v) for v in point)


def parse_point(text: str) -> List[float]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"Malformed point {text!r}: expected comma-separated numbers")
    return [float(p) for p in parts]


def jsonable(value: Any) -> Any:
    """Replace non-finite floats by their lowercase text literals so documents stay valid JSON."""
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return format_float(value)
        return value
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def checkpoints(budget: int) -> Sequence[int]:
    marks = []
    scale = 1
    while True:
        for m in CHECKPOINT_MANTISSAS:
            mark = m * scale
            if mark >= budget:
                marks.append(budget)
                return marks
            marks.append(mark)
        scale *= 10
