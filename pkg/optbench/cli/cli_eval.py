"""
Point evaluation and landscape tools:
* bench eval <id|slug> --point v1,v2,... [--seed S] [--noise sample|suppress]
* bench grid <id|slug> [--x1 a:b] [--x2 a:b] --resolution R --out PATH
* bench probe <id|slug> [--dim D] [--samples N] [--seed S] [--tol T]
"""

import json
from pathlib import Path
from typing import Dict, List, Optional

import typer

from optbench.calculus import separability_probe
from optbench.cli.impl.grid import GridRequest, export_grid
from optbench.functions import EvalContext, NoisePolicy, evaluate
from optbench.registry import lookup
from optbench.utils import logger
from optbench.utils.definitions import format_float, jsonable, parse_point


def _params(pairs: Optional[List[str]]) -> Dict[str, float]:
    params = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        try:
            if not sep or not name.strip():
                raise ValueError(pair)
            params[name.strip()] = float(value)
        except ValueError:
            raise typer.BadParameter(f"expected NAME=NUMBER, got {pair!r}", param_hint="--param")
    return params


def eval_point(
    key: str = typer.Argument(..., help="Function index (7, f7) or slug"),
    point: str = typer.Option(..., "--point", help="Comma-separated coordinates"),
    seed: int = typer.Option(0, "--seed", help="Seed for the stochastic entries"),
    noise: str = typer.Option("sample", "--noise", help="sample or suppress"),
    param: Optional[List[str]] = typer.Option(None, "--param", help="Override a formula parameter, NAME=NUMBER"),
):
    """Evaluate one function at one point; prints the shortest round-trip decimal."""
    try:
        x = parse_point(point)
        ctx = EvalContext(seed, NoisePolicy.from_str(noise))
    except ValueError as e:
        raise typer.BadParameter(str(e))
    spec = lookup(key)
    try:
        value = evaluate(spec, x, ctx, params=_params(param) or None)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--param")
    typer.echo(format_float(value))


def grid(
    key: str = typer.Argument(..., help="Function index (7, f7) or slug"),
    x1: Optional[str] = typer.Option(None, "--x1", help="x1 range a:b (default: the function's box)"),
    x2: Optional[str] = typer.Option(None, "--x2", help="x2 range a:b (default: the function's box)"),
    resolution: int = typer.Option(..., "--resolution", help="Nodes per axis, at least 2"),
    out: Path = typer.Option(..., "--out", help="CSV file to write"),
):
    """Write a resolution x resolution CSV lattice (x1,x2,f) of a 2-D-capable function."""
    req = GridRequest.build(key, resolution, x1, x2, out)
    export_grid(req)
    logger.fs.info(f"grid f{req.function.index} {req.resolution}x{req.resolution} -> {out}")


def probe(
    key: str = typer.Argument(..., help="Function index (7, f7) or slug"),
    dim: Optional[int] = typer.Option(None, "--dim", help="Dimension (default: the function's default)"),
    samples: int = typer.Option(64, "--samples", help="Random point/pair samples, at least 16"),
    seed: int = typer.Option(0, "--seed", help="Sampling seed"),
    tol: float = typer.Option(1e-8, "--tol", help="Relative interaction tolerance"),
):
    """Empirically test additive separability and compare with the header flag."""
    spec = lookup(key)
    try:
        verdict = separability_probe(spec, dimension=dim, samples=samples, seed=seed, tolerance=tol)
    except ValueError as e:
        raise typer.BadParameter(str(e))
    document = {
        "fn": spec.index,
        "slug": spec.slug,
        "dim": dim if dim is not None else spec.dimension.default,
        "seed": seed,
        **verdict.as_dict(),
        "header": spec.flags.separability.value,
    }
    typer.echo(json.dumps(jsonable(document), indent=2))
