from .category_file_error import CategoryFileError
from .display_results import display_dimensions, display_rows
from .load_category_file import load_category_file, parse_category
from .load_idempotents import load_idempotents
from .resolve_category import resolve_category
from .run_report import RunReport, category_digest, write_report
from .write_category_file import serialize_category, write_category_file

__all__ = [
    "CategoryFileError",
    "display_dimensions",
    "display_rows",
    "load_category_file",
    "parse_category",
    "load_idempotents",
    "resolve_category",
    "RunReport",
    "category_digest",
    "write_report",
    "serialize_category",
    "write_category_file",
]


from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("SuperHC")
except PackageNotFoundError:
    __version__ = "unknown"

__author__ = "Zachary Caterer"
__email__ = "ztcaterer@colorado.edu"
