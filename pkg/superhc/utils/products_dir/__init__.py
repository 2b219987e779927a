from .enumerate_shuffles import CYCLIC_SHUFFLE, SHUFFLE, ShufflePermutation, enumerate_shuffles
from .graded_sign import graded_sign
from .sign_convention import CONVENTIONS, DEFAULT_CONVENTION, SignConvention

__all__ = [
    "CYCLIC_SHUFFLE",
    "SHUFFLE",
    "ShufflePermutation",
    "enumerate_shuffles",
    "graded_sign",
    "CONVENTIONS",
    "DEFAULT_CONVENTION",
    "SignConvention",
]


from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("SuperHC")
except PackageNotFoundError:
    __version__ = "unknown"

__author__ = "Zachary Caterer"
__email__ = "ztcaterer@colorado.edu"
