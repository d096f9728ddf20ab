import sys
from concurrent.futures import ThreadPoolExecutor

from rich import print as rprint
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn, MofNCompleteColumn, TimeElapsedColumn
from typing import Callable, Iterable, List, TypeVar

from optbench.utils import logger
from optbench.utils.timer import Timer

T = TypeVar("T")
R = TypeVar("R")


def do_parallel(
    func: Callable[[T], R], args_list: Iterable[T], n=1, desc="Working", spinner=False, spinner_persist=False
) -> List[R]:
    """Map func over args_list on up to n threads. Results come back in input order."""
    args_list = list(args_list)
    if len(args_list) == 0:
        return []
    if n == -1:
        n = len(args_list)
    n = max(1, min(n, len(args_list)))

    def wrapped_fn(args):
        try:
            return func(args)
        except Exception as e:
            logger.fs.error(f"Error running {getattr(func, '__name__', func)}, {args}: {e}")
            raise

    results: List[R] = []
    with Progress(
        SpinnerColumn(), TextColumn(desc), BarColumn(), MofNCompleteColumn(), TimeElapsedColumn(), console=Console(stderr=True), disable=not spinner, transient=True
    ) as progress:
        progress_task = progress.add_task("", total=len(args_list))
        with Timer(f"do_parallel {desc}") as t:
            if n == 1:
                for args in args_list:
                    results.append(wrapped_fn(args))
                    progress.update(progress_task, advance=1)
            else:
                with ThreadPoolExecutor(max_workers=n) as executor:
                    # executor.map preserves submission order
                    for result in executor.map(wrapped_fn, args_list):
                        results.append(result)
                        progress.update(progress_task, advance=1)
    if spinner_persist:
        rprint(f"[bold green]✓[/] [bright_black]{desc} ({len(results)}/{len(args_list)}) in {t.elapsed:.2f}s[/]", file=sys.stderr)
    return results
