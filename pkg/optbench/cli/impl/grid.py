import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from optbench.exceptions import DomainError, GridException
from optbench.functions import FunctionKey, evaluate
from optbench.registry import FunctionSpec, lookup
from optbench.utils.definitions import format_float


def parse_range(text: str, name: str) -> Tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise GridException(f"{name} range {text!r} must look like a:b")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as e:
        raise GridException(f"{name} range {text!r} must hold two numbers") from e
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo > hi:
        raise GridException(f"{name} range {text!r} must satisfy a <= b with finite a and b")
    return lo, hi


@dataclass(frozen=True)
class GridRequest:
    function: FunctionSpec
    x1: Tuple[float, float]
    x2: Tuple[float, float]
    resolution: int
    out: Optional[Path] = None

    @staticmethod
    def build(key: FunctionKey, resolution: int, x1: Optional[str] = None, x2: Optional[str] = None, out: Optional[Path] = None) -> "GridRequest":
        """Resolve defaults from the function's box; scalable functions are gridded at D=2."""
        spec = lookup(key)
        if not spec.dimension.accepts(2):
            raise GridException(f"f{spec.index} {spec.display_name} is not defined at D=2 ({spec.dimension.describe()})")
        if resolution < 2:
            raise GridException(f"Grid resolution must be at least 2, got {resolution}")
        lower, upper = spec.bounds.arrays(2)
        r1 = parse_range(x1, "x1") if x1 else (float(lower[0]), float(upper[0]))
        r2 = parse_range(x2, "x2") if x2 else (float(lower[1]), float(upper[1]))
        return GridRequest(spec, r1, r2, int(resolution), out)

    def axes(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.linspace(*self.x1, self.resolution), np.linspace(*self.x2, self.resolution)


def grid_csv(req: GridRequest) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x1", "x2", "f"])
    ax1, ax2 = req.axes()
    for a in ax1:
        for b in ax2:
            try:
                value = format_float(evaluate(req.function, (a, b)))
            except DomainError:
                value = "nan"
            writer.writerow([format_float(a), format_float(b), value])
    return buf.getvalue()


def export_grid(req: GridRequest) -> str:
    """Evaluate the resolution x resolution lattice row-major with x1 outer; writes ``req.out`` when set."""
    text = grid_csv(req)
    if req.out is not None:
        req.out.parent.mkdir(parents=True, exist_ok=True)
        with req.out.open("w", newline="") as f:
            f.write(text)
    return text
