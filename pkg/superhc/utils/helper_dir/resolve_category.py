# superhc/utils/helper_dir/resolve_category.py
# In[1]: Imports
from ..catalog import BUILTINS, builtin
from ..supercat import SuperCategory
from .category_file_error import CategoryFileError
from .load_category_file import load_category_file


# In[2]: Resolve a command-line category argument
def resolve_category(spec: str, field=None, check: bool = True) -> SuperCategory:
    """
    Turn '@name' into a builtin and anything else into a parsed category file.

    Raises:
        CategoryFileError: Unknown builtin or unreadable file
    """
    if spec.startswith("@"):
        if spec[1:] not in BUILTINS:
            raise CategoryFileError(f"unknown builtin (available: {', '.join(BUILTINS)})", spec)
        return builtin(spec, field)
    return load_category_file(spec, field=field, check=check)
