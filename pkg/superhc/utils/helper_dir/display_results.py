# superhc/utils/helper_dir/display_results.py
# In[1]: Imports
from typing import Dict, List, Optional, Sequence

from rich.table import Table


# In[2]: Per-degree dimension tables
def display_dimensions(
    console,
    title: str,
    rows: Dict[str, Sequence[int]],
    truncated_degree: Optional[int] = None,
) -> None:
    """
    Print one row per theory and one column per degree; the truncated degree is
    marked with a trailing '*'.
    """
    width = max((len(v) for v in rows.values()), default=0)
    table = Table(title=title, title_style="banner", header_style="highlight")
    table.add_column("", style="info")
    for n in range(width):
        table.add_column(f"{n}*" if n == truncated_degree else str(n), justify="right")
    for label, values in rows.items():
        table.add_row(label, *[str(v) for v in values])
    console.print(table)


# In[3]: Key/value tables
def display_rows(console, title: str, header: Sequence[str], rows: List[Sequence]) -> None:
    table = Table(title=title, title_style="banner", header_style="highlight")
    for k, name in enumerate(header):
        table.add_column(name, style="info" if k == 0 else None)
    for row in rows:
        table.add_row(*[str(v) for v in row])
    console.print(table)
