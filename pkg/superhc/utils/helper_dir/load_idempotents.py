# superhc/utils/helper_dir/load_idempotents.py
# In[1]: Imports
from pathlib import Path
from typing import List

import yaml

from ..exactlin import parse_scalar
from ..supercat import MorphismVector, SuperCategory
from .category_file_error import CategoryFileError


# In[2]: Idempotent lists
def load_idempotents(path, cat: SuperCategory) -> List[MorphismVector]:
    """
    Read a YAML list of idempotents, each ``{object: X, vector: {id: coefficient}}``.

    Raises:
        CategoryFileError: On a missing file, unknown fields or inexact coefficients
    """
    path = Path(path).expanduser()
    if not path.exists():
        raise CategoryFileError("file not found", str(path))
    with open(path, "r") as f:
        data = yaml.safe_load(f)
    if not isinstance(data, list):
        raise CategoryFileError("expected a list of idempotents", str(path))

    K = cat.K
    out = []
    for k, entry in enumerate(data):
        where = f"[{k}]"
        if not isinstance(entry, dict) or set(entry) != {"object", "vector"}:
            raise CategoryFileError("expected exactly the fields object and vector", str(path), where)
        obj = str(entry["object"])
        if not isinstance(entry["vector"], dict):
            raise CategoryFileError("vector must be a mapping", str(path), f"{where}.vector")
        coefficients = {}
        for mid, coef in entry["vector"].items():
            try:
                coefficients[str(mid)] = parse_scalar(coef, K)
            except ValueError as e:
                raise CategoryFileError(str(e), str(path), f"{where}.vector.{mid}")
        out.append(MorphismVector(obj, obj, coefficients))
    return out
