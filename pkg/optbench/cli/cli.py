import sys
from pathlib import Path
from typing import List, Optional

import typer

try:  # typer >= 0.26 vendors its own click; catch the exceptions it actually raises
    from typer import _click as click
except ImportError:
    import click

from optbench.cli.cli_audit import check
from optbench.cli.cli_catalog import catalog, info, list_functions
from optbench.cli.cli_eval import eval_point, grid, probe
from optbench.cli.cli_run import run
from optbench.cli.impl.common import err_console
from optbench.exceptions import OptbenchException
from optbench.utils import logger

app = typer.Typer(name="bench", add_completion=False)
app.command(name="list", help="List catalog entries, optionally filtered by header flags")(list_functions)
app.command(name="info", help="Show one catalog entry and its cached audit status")(info)
app.command(name="eval", help="Evaluate a function at a point")(eval_point)
app.command(name="grid", help="Export a 2-D landscape grid as CSV")(grid)
app.command(name="check", help="Audit claimed optima")(check)
app.command(name="probe", help="Empirical additive-separability probe")(probe)
app.command(name="run", help="Run baseline optimizers over a suite manifest")(run)
app.command(name="catalog", help="Export the full catalog")(catalog)


@app.callback()
def options(log_file: Optional[Path] = typer.Option(None, "--log-file", help="Append diagnostics to this file")):
    """Global optimization benchmark catalog, optimum audit and optimizer harness."""
    if log_file is not None:
        logger.open_log_file(log_file)


typer_click_object = typer.main.get_command(app)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code: 0 success, 1 expected failure, 2 internal error."""
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        rv = typer_click_object.main(args=args, prog_name="bench", standalone_mode=False)
        return rv if isinstance(rv, int) else 0
    except click.exceptions.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        err_console.print("[red]Aborted[/red]")
        return 1
    except OptbenchException as e:
        err_console.print(e.pretty_print_str())
        return 1
    except Exception as e:
        logger.fs.exception(f"{type(e).__name__}: {e}")
        err_console.print(f"[red][bold]Internal error:[/bold] ({type(e).__name__}) {e}[/red]")
        if logger.log_file is None:
            err_console.print("[yellow]Rerun with --log-file PATH to keep the full traceback.[/yellow]")
        return 2
    finally:
        logger.close_log_file()


if __name__ == "__main__":
    sys.exit(main())
