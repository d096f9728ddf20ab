"""
Optimum audit:
* bench check [<id|slug>|--all] [--tol T] [--format json|csv|table] [--expected-errata PATH] [--ledger PATH] [--write-errata PATH]
"""

from pathlib import Path
from typing import Optional

import typer

from optbench.api.config import AuditConfig
from optbench.cli.impl.common import check_format, emit, err_console, print_table, save_audit_cache
from optbench.registry import lookup
from optbench.utils import logger
from optbench.utils.definitions import format_float
from optbench.utils.timer import Timer
from optbench.verify import AuditReport, audit_all, check_minimum, expected_errata_json, ledger_json, load_expected_errata, report_csv, report_json


def _cache_entries(report: AuditReport):
    statuses = report.function_status()
    return {
        index: {"status": statuses[index].value, "records": [r.as_dict() for r in records]}
        for index, records in report.by_function().items()
    }


def check(
    key: Optional[str] = typer.Argument(None, help="Function index (7, f7) or slug"),
    all: bool = typer.Option(False, "--all", "-a", help="Audit every entry with a concrete claimed optimum"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Override the per-optimum value tolerance"),
    fmt: str = typer.Option("json", "--format", help="json, csv or table"),
    expected_errata: Optional[Path] = typer.Option(None, "--expected-errata", help="JSON array of {fn, reason} expected to be Discrepant"),
    ledger: Optional[Path] = typer.Option(None, "--ledger", help="Also write the errata ledger (JSON) to this file"),
    write_errata: Optional[Path] = typer.Option(None, "--write-errata", help="Write the Discrepant set as an expected-errata file"),
    workers: int = typer.Option(1, "--workers", "-n", help="Audit functions on this many threads"),
    cache: Optional[Path] = typer.Option(None, "--cache", help="Audit cache file read by `bench info`"),
):
    """Evaluate and locally refine claimed optima; exits 1 when the Discrepant set differs from the expected errata."""
    fmt = check_format(fmt, ("json", "csv", "table"))
    if all == (key is not None):
        raise typer.BadParameter("give either a function or --all")
    if tol is not None and not tol > 0:
        raise typer.BadParameter(f"tolerance must be positive, got {tol}", param_hint="--tol")

    config = AuditConfig()
    with Timer("bench check") as t:
        if all:
            report = audit_all(tol, config, workers=workers)
        else:
            report = AuditReport(check_minimum(lookup(key), tol, config))
    logger.fs.info(f"audited {len(report.by_function())} functions ({len(report.records)} records) in {t.elapsed:.2f}s")

    if fmt == "table":
        rows = [
            [
                f"f{r.function.index}",
                r.function.slug,
                r.status.value,
                format_float(r.claimed) if r.claimed is not None else "",
                format_float(r.evaluated) if r.evaluated is not None else "",
                format_float(r.residual) if r.residual is not None else "",
            ]
            for r in report.records
        ]
        print_table("Audit", ["fn", "slug", "status", "claimed", "evaluated", "residual"], rows)
    else:
        emit(report_json(report.records) if fmt == "json" else report_csv(report.records))
    if ledger is not None:
        emit(ledger_json(report), ledger)
    if write_errata is not None:
        emit(expected_errata_json(report), write_errata)
    save_audit_cache(_cache_entries(report), cache)

    discrepant = report.discrepant()
    if expected_errata is None:
        if discrepant:
            err_console.print(f"[yellow]{len(discrepant)} Discrepant: {', '.join(f'f{i}' for i in sorted(discrepant))}[/yellow]")
            raise typer.Exit(1)
        return

    audited = set(report.by_function())
    expected = set(load_expected_errata(expected_errata)) & audited
    unexpected, missing = discrepant - expected, expected - discrepant
    if unexpected:
        err_console.print(f"[red]Unexpected Discrepant: {', '.join(f'f{i}' for i in sorted(unexpected))}[/red]")
    if missing:
        err_console.print(f"[red]Expected Discrepant but not found: {', '.join(f'f{i}' for i in sorted(missing))}[/red]")
    if unexpected or missing:
        raise typer.Exit(1)
    err_console.print(f"[green]Discrepant set matches {expected_errata} ({len(discrepant)} entries)[/green]")
