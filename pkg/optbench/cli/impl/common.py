import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import typer
from rich.console import Console
from rich.table import Table

from optbench.config_paths import audit_cache_path
from optbench.exceptions import BadConfigException
from optbench.utils import logger
from optbench.utils.definitions import jsonable

console = Console()
err_console = Console(stderr=True)


def emit(text: str, out: Optional[Path] = None):
    """Write data to ``out`` or to stdout, byte for byte."""
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        with out.open("w", newline="") as f:
            f.write(text)
        logger.fs.info(f"wrote {len(text)} bytes to {out}")


def check_format(fmt: str, allowed: Sequence[str]) -> str:
    fmt = fmt.strip().lower()
    if fmt not in allowed:
        raise typer.BadParameter(f"{fmt!r} is not one of {', '.join(allowed)}", param_hint="--format")
    return fmt


def print_table(title: str, columns: List[str], rows: List[List[str]]):
    table = Table(title=title, show_lines=False, header_style="bold blue")
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*row)
    console.print(table)


def load_audit_cache(path: Optional[Path] = None) -> Dict[int, Dict]:
    path = Path(path or audit_cache_path)
    if not path.exists():
        return {}
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise BadConfigException(f"Audit cache {path} is not valid JSON; delete it or rerun `bench check`") from e
    return {int(k): v for k, v in raw.items()}


def save_audit_cache(entries: Dict[int, Dict], path: Optional[Path] = None):
    """Merge per-function audit results into the cache file."""
    path = Path(path or audit_cache_path)
    cache = load_audit_cache(path)
    cache.update(entries)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(jsonable({str(k): cache[k] for k in sorted(cache)}), indent=2) + "\n")
    logger.fs.debug(f"audit cache {path}: {len(entries)} updated, {len(cache)} total")

