"""
Optimizer harness:
* bench run --manifest PATH [--out PATH] [--summary PATH] [--workers N]
"""

import math
from pathlib import Path
from typing import Optional

import typer

from optbench.cli.impl.common import emit, err_console
from optbench.config import load_manifest
from optbench.optimize import run_suite
from optbench.utils import logger
from optbench.utils.definitions import format_float
from optbench.utils.timer import Timer


def run(
    manifest: Path = typer.Option(..., "--manifest", help="Suite manifest (JSON)"),
    out: Optional[Path] = typer.Option(None, "--out", help="Results file; .csv writes the CSV projection, anything else JSON"),
    summary: Optional[Path] = typer.Option(None, "--summary", help="Write the per-function success summary (CSV) here"),
    workers: int = typer.Option(1, "--workers", "-n", help="Run this many optimizer runs concurrently"),
):
    """Run every optimizer on every function, dimension and seed listed in the manifest."""
    suite = load_manifest(manifest)
    with Timer("bench run") as t:
        report = run_suite(suite, workers=workers)
    logger.fs.info(f"suite {manifest}: {len(report.runs)} runs in {t.elapsed:.2f}s")

    results = report.results_csv() if out is not None and out.suffix.lower() == ".csv" else report.results_json()
    emit(results, out)
    if summary is not None:
        emit(report.summary_csv(), summary)
    for row in report.summary_records():
        rate = "n/a" if math.isnan(row["success_rate"]) else f"{row['success_rate']:.0%}"
        err_console.print(
            f"[bright_black]f{row['fn']} {row['slug']} {row['optimizer']} D={row['dim']}: "
            f"{row['successes']}/{row['runs']} successes ({rate}), median best {format_float(row['median_best'])}[/bright_black]"
        )
