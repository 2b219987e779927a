from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("SuperHC")
except PackageNotFoundError:
    __version__ = "unknown"

__author__ = "Zachary Caterer"
__email__ = "ztcaterer@colorado.edu"
