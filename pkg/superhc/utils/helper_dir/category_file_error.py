# superhc/utils/helper_dir/category_file_error.py
# In[1]: Imports
from typing import Optional


# In[2]: Parse diagnostics
class CategoryFileError(ValueError):
    """
    A category file that cannot be turned into a SuperCategory.

    Args:
        message: What is wrong
        path: File the problem was found in (None for in-memory data)
        field: Dotted location such as ``composition[3].result``
    """

    def __init__(self, message: str, path: Optional[str] = None, field: Optional[str] = None):
        self.path = path
        self.field = field
        where = ":".join(part for part in (path, field) if part)
        super().__init__(f"{where}: {message}" if where else message)
