"""
Catalog queries:
* bench list [--modality M] [--separability S] ... [--format json|csv|table]
* bench info <id|slug>
* bench catalog --format json|csv
"""

import json
from pathlib import Path
from typing import Optional

import typer

from optbench import registry
from optbench.cli.impl.common import check_format, emit, load_audit_cache, print_table
from optbench.registry import Continuity, Differentiability, Fixed, Modality, Scalability, Separability, catalog_export, lookup
from optbench.utils.definitions import jsonable


def _flag(enum_type, value: Optional[str], hint: str):
    if value is None:
        return None
    try:
        return enum_type.from_str(value)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


def list_functions(
    modality: Optional[str] = typer.Option(None, "--modality", help="unimodal or multimodal"),
    separability: Optional[str] = typer.Option(None, "--separability", help="separable, partially-separable or non-separable"),
    continuity: Optional[str] = typer.Option(None, "--continuity", help="continuous or discontinuous"),
    differentiability: Optional[str] = typer.Option(None, "--differentiability", help="differentiable or non-differentiable"),
    scalability: Optional[str] = typer.Option(None, "--scalability", help="scalable or non-scalable"),
    dimension: Optional[int] = typer.Option(None, "--dimension", help="Only functions fixed at exactly this dimension"),
    accepts: Optional[int] = typer.Option(None, "--accepts", help="Only functions usable at this dimension"),
    fmt: str = typer.Option("json", "--format", help="json, csv or table"),
):
    """List catalog entries matching every given header flag."""
    fmt = check_format(fmt, ("json", "csv", "table"))
    specs = registry.filter(
        continuity=_flag(Continuity, continuity, "--continuity"),
        differentiability=_flag(Differentiability, differentiability, "--differentiability"),
        separability=_flag(Separability, separability, "--separability"),
        scalability=_flag(Scalability, scalability, "--scalability"),
        modality=_flag(Modality, modality, "--modality"),
        dimension=Fixed(dimension) if dimension is not None else None,
        accepts=accepts,
    )
    if fmt == "table":
        rows = [
            [f"f{s.index}", s.slug, s.display_name, s.dimension.describe(), ", ".join(str(v) for v in s.flags.as_dict().values())]
            for s in specs
        ]
        print_table(f"{len(specs)} functions", ["fn", "slug", "name", "D", "flags"], rows)
    else:
        emit(catalog_export(fmt, specs))


def info(
    key: str = typer.Argument(..., help="Function index (7, f7) or slug"),
    cache: Optional[Path] = typer.Option(None, "--cache", help="Audit cache file written by `bench check`"),
):
    """Show one catalog entry, with its last audit outcome when one is cached."""
    spec = lookup(key)
    record = spec.to_record()
    record["audit"] = load_audit_cache(cache).get(spec.index)
    emit(json.dumps(jsonable(record), indent=2, ensure_ascii=False) + "\n")


def catalog(fmt: str = typer.Option("json", "--format", help="json or csv")):
    """Export the whole catalog (metadata only) ordered by index."""
    emit(catalog_export(check_format(fmt, ("json", "csv"))))
