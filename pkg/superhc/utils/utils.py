# In[0]: Imports
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from contextlib import contextmanager
from pathlib import Path

from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn, TaskProgressColumn

THREADS_ENV = "SUPERHC_THREADS"
CROSS_CHECK_ENV = "SUPERHC_CROSS_CHECK"


# In[0.1]: Utility functions
def log(console, msg, style=None):
    if console:
        if style:
            console.print(msg, style=style)
        else:
            console.print(msg)
    else:
        print(msg)


@contextmanager
def progress_bar(console=None, total=1, description="Working"):
    """
    Reusable progress bar context manager.

    Usage:
        with progress_bar(console, total=len(degrees), description="Assembling") as (progress, task):
            for n in degrees:
                progress.update(task, description=f"Degree {n}")
                # do work
                progress.advance(task)
    """
    with Progress(
        SpinnerColumn(spinner_name="dots", style="info"),
        TextColumn("[progress.description]{task.description}", style="highlight"),
        BarColumn(complete_style="success", finished_style="success"),
        TaskProgressColumn(),
        console=console,
        disable=console is None,
    ) as progress:
        task = progress.add_task(description, total=total)
        yield progress, task


# In[1]: Environment driven settings
def get_threads(default=None):
    """Worker thread cap from SUPERHC_THREADS, falling back to the CPU count."""
    value = os.environ.get(THREADS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got '{value}'")
    return default or os.cpu_count() or 1


def cross_check_enabled():
    return os.environ.get(CROSS_CHECK_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


# In[2]: Thread pool helper
def parallel_map(func, items, threads=None):
    """
    Apply func to every item on a thread pool and return results in input order.

    Args:
        func: Callable taking one item
        items: Iterable of inputs
        threads: Worker cap (defaults to get_threads())

    Returns:
        list: func(item) for each item, ordered like items
    """
    items = list(items)
    if not items:
        return []
    workers = min(threads or get_threads(), len(items))
    if workers == 1:
        return [func(item) for item in items]

    results = [None] * len(items)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_pos = {executor.submit(func, item): pos for pos, item in enumerate(items)}
        for future in as_completed(future_to_pos):
            results[future_to_pos[future]] = future.result()
    return results


# In[3]: Output files
def setup_output_file(output_file) -> Path:
    """
    Resolve an output path and create its parent directory.

    Args:
        output_file: Path to the output file

    Returns:
        Path object for the output file
    """
    output_path = Path(output_file).expanduser()
    output_path.parent.mkdir(parents=True, exist_ok=True)
    return output_path
